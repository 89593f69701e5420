#include "weylfold/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylfold {

namespace {

Rat height(const VecQ& v) {
  Rat h(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) h += v[i];
  return h;
}

}  // namespace

MultiplicityTable freudenthal(const RootSystem& rs, const VecQ& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
  for (int i = 0; i < rs.rank; ++i)
    if (!lambda[i].is_integer())
      throw std::invalid_argument("highest weight must be a root-lattice point");

  // candidate weights: the dominant ideal, processed by decreasing height so
  // every lookup of nu + k*alpha (strictly higher) is already resolved
  std::vector<VecQ> order = dominant_ideal(rs, lambda);
  std::sort(order.begin(), order.end(), [](const VecQ& a, const VecQ& b) {
    Rat ha = height(a), hb = height(b);
    if (ha != hb) return hb < ha;
    return VecQLess{}(a, b);
  });

  MultiplicityTable table;
  table.highest = lambda;
  const VecQ& rho = rs.weyl_vector;
  VecQ lam_rho = lambda + rho;
  Rat top_norm = rs.inner(lam_rho, lam_rho);

  for (const VecQ& nu : order) {
    if (same_entries(nu, lambda)) {
      table.entries[nu] = 1;
      continue;
    }
    Rat rhs(0);
    for (int a = 0; a < rs.num_positive(); ++a) {
      VecQ alpha = to_q(rs.positive_roots[a]);
      VecQ w = nu;
      for (int k = 1;; ++k) {
        if (k > 1000) throw std::logic_error("runaway weight string");
        w += alpha;
        i64 m = table.at(dominant_rep(rs, w).first);
        if (m == 0) break;  // weight strings are contiguous: past the top
        rhs += Rat(2 * m) * rs.inner(w, alpha);
      }
    }
    VecQ nu_rho = nu + rho;
    Rat denom = top_norm - rs.inner(nu_rho, nu_rho);
    if (denom.is_zero()) throw std::logic_error("vanishing Freudenthal denominator");
    Rat m = rhs / denom;
    if (!m.is_integer() || m.num() < 0) throw std::logic_error("non-integral multiplicity");
    if (m.num() > 0) table.entries[nu] = m.num();
  }
  return table;
}

i64 weyl_dim(const RootSystem& rs, const VecQ& lambda) {
  if (!rs.is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
  const VecQ& rho = rs.weyl_vector;
  VecQ lam_rho = lambda + rho;
  Rat dim(1);
  for (int a = 0; a < rs.num_positive(); ++a) {
    VecQ alpha = to_q(rs.positive_roots[a]);
    dim *= rs.inner(lam_rho, alpha) / rs.inner(rho, alpha);
  }
  if (!dim.is_integer()) throw std::logic_error("non-integral Weyl dimension");
  return dim.num();
}

i64 table_dimension(const RootSystem& rs, const MultiplicityTable& t) {
  i64 dim = 0;
  for (const auto& [nu, m] : t.entries) dim += m * i64(weyl_orbit(rs, nu).size());
  return dim;
}

bool support_check(const RootSystem& rs, const VecQ& lambda) {
  MultiplicityTable t = freudenthal(rs, lambda);
  std::set<VecQ, VecQLess> support;
  for (const auto& [nu, m] : t.entries) support.insert(nu);

  auto ideal_vec = dominant_ideal(rs, lambda);
  std::set<VecQ, VecQLess> ideal(ideal_vec.begin(), ideal_vec.end());

  std::set<VecQ, VecQLess> atype_dominant;
  for (const VecQ& y : a_type_set(rs, lambda))
    if (rs.is_dominant(y)) atype_dominant.insert(y);

  auto equal = [](const std::set<VecQ, VecQLess>& a, const std::set<VecQ, VecQLess>& b) {
    if (a.size() != b.size()) return false;
    auto it = b.begin();
    for (const VecQ& v : a) {
      if (!same_entries(v, *it)) return false;
      ++it;
    }
    return true;
  };
  return equal(support, ideal) && equal(ideal, atype_dominant);
}

}  // namespace weylfold
