#pragma once

#include <map>

#include "weylfold/convexity.hpp"
#include "weylfold/root_system.hpp"

namespace weylfold {

// weight multiplicities of the irreducible module with highest weight
// `highest`, keyed by dominant representatives
struct MultiplicityTable {
  VecQ highest;
  std::map<VecQ, i64, VecQLess> entries;

  i64 at(const VecQ& dominant_weight) const {
    auto it = entries.find(dominant_weight);
    return it == entries.end() ? 0 : it->second;
  }
};

// Freudenthal recursion, top-down in dominance order; exact throughout.
// lambda must be a dominant root-lattice point.
MultiplicityTable freudenthal(const RootSystem& rs, const VecQ& lambda);

// Weyl dimension formula: prod over alpha > 0 of (lambda+rho,alpha)/(rho,alpha)
i64 weyl_dim(const RootSystem& rs, const VecQ& lambda);

// sum of mult * orbit size over the table: the module dimension again,
// tying the two oracles together
i64 table_dimension(const RootSystem& rs, const MultiplicityTable& t);

// keys of freudenthal(lambda) == {nu dominant : nu <= lambda}
//                             == a_type_set(lambda) ∩ dominant cone
bool support_check(const RootSystem& rs, const VecQ& lambda);

}  // namespace weylfold
