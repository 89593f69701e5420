#pragma once

#include <set>
#include <vector>

#include "weylfold/root_system.hpp"

namespace weylfold {

// {x : mu_i(x) = level}, the level set of the i-th simple-root coefficient
struct DualHyperplane {
  int index = 1;  // 1-based, matching mu indexing
  Rat level;
};

// Bounding box of a Weyl orbit in mu-coordinates. The dual-convex hull of an
// orbit is cut out by dual half-spaces, so it is exactly such a box.
struct HullDescription {
  std::vector<VecQ> orbit;  // sorted
  VecQ lower;               // min of mu_i over the orbit
  VecQ upper;               // max of mu_i over the orbit

  bool contains(const VecQ& y) const {
    for (Eigen::Index i = 0; i < lower.size(); ++i)
      if (y[i] < lower[i] || upper[i] < y[i]) return false;
    return true;
  }
};

// coefficients of x in the simple-root basis; the identity in this project's
// coordinate convention, named so call sites say what they mean
VecQ mu_coords(const RootSystem& rs, const VecQ& x);

// x in Cp, the nonnegative span of the simple roots
bool in_positive_cone(const RootSystem& rs, const VecQ& x);

// nu <= lambda: lambda - nu is a nonnegative *integer* combination of simple
// roots; both arguments must be dominant
bool dominance_leq(const RootSystem& rs, const VecQ& nu, const VecQ& lambda);

// all dominant nu <= x+ in dominance order, sorted
std::vector<VecQ> dominant_ideal(const RootSystem& rs, const VecQ& x);

// A^type(x) = {y : x+ - y+ in Cp ∩ Q}: union of the Weyl orbits of the
// dominant ideal below x+. Requires x in the root lattice.
std::set<VecQ, VecQLess> a_type_set(const RootSystem& rs, const VecQ& x);

HullDescription dconv_hull(const RootSystem& rs, const VecQ& x);

// y lies between the extreme <.,alpha^vee> levels of W.x for every positive
// root (intersection of the tightest half-apartments around the orbit)
bool wconv_membership(const RootSystem& rs, const VecQ& x, const VecQ& y);

// Experiment, reported rather than asserted: compare the root-lattice points
// of the mu-coordinate hull box with a_type_set(x). only_hull lists box
// points outside the set (these exist, e.g. A2 with x = alpha1+alpha2);
// only_atype lists set members outside the box (never observed).
struct HullAgreement {
  bool agree = true;
  std::vector<VecQ> only_hull;
  std::vector<VecQ> only_atype;
};
HullAgreement hull_agreement(const RootSystem& rs, const VecQ& x);

}  // namespace weylfold
