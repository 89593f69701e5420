#include "weylfold/convexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylfold {

namespace {

void require_lattice(const RootSystem& rs, const VecQ& x) {
  for (int i = 0; i < rs.rank; ++i)
    if (!x[i].is_integer()) throw std::invalid_argument("not a root-lattice point");
}

i64 ceil_of(const Rat& r) { return -((-r).floor()); }

}  // namespace

VecQ mu_coords(const RootSystem& rs, const VecQ& x) {
  (void)rs;
  return x;
}

bool in_positive_cone(const RootSystem& rs, const VecQ& x) {
  for (int i = 0; i < rs.rank; ++i)
    if (x[i] < Rat(0)) return false;
  return true;
}

bool dominance_leq(const RootSystem& rs, const VecQ& nu, const VecQ& lambda) {
  if (!rs.is_dominant(nu) || !rs.is_dominant(lambda))
    throw std::invalid_argument("dominance order compares dominant vectors");
  for (int i = 0; i < rs.rank; ++i) {
    Rat d = lambda[i] - nu[i];
    if (!d.is_integer() || d.num() < 0) return false;
  }
  return true;
}

std::vector<VecQ> dominant_ideal(const RootSystem& rs, const VecQ& x) {
  require_lattice(rs, x);
  VecQ top = dominant_rep(rs, x).first;

  // every dominant nu <= top sits in the integer coordinate box [0, top]:
  // dominant vectors have nonnegative mu-coordinates and the difference is a
  // nonnegative integer vector
  std::vector<VecQ> out;
  VecQ nu = top;
  std::vector<i64> c(rs.rank, 0);
  for (;;) {
    if (rs.is_dominant(nu)) out.push_back(nu);
    int i = 0;
    for (; i < rs.rank; ++i) {
      if (Rat(c[i] + 1) <= top[i]) {
        ++c[i];
        nu[i] -= Rat(1);
        break;
      }
      nu[i] += Rat(c[i]);
      c[i] = 0;
    }
    if (i == rs.rank) break;
  }
  std::sort(out.begin(), out.end(), VecQLess{});
  return out;
}

std::set<VecQ, VecQLess> a_type_set(const RootSystem& rs, const VecQ& x) {
  std::set<VecQ, VecQLess> out;
  for (const VecQ& nu : dominant_ideal(rs, x)) {
    auto orbit = weyl_orbit(rs, nu);
    out.insert(orbit.begin(), orbit.end());
  }
  return out;
}

HullDescription dconv_hull(const RootSystem& rs, const VecQ& x) {
  auto orbit = weyl_orbit(rs, x);
  HullDescription h;
  h.orbit.assign(orbit.begin(), orbit.end());
  h.lower = h.upper = h.orbit.front();
  for (const VecQ& o : h.orbit)
    for (int i = 0; i < rs.rank; ++i) {
      if (o[i] < h.lower[i]) h.lower[i] = o[i];
      if (h.upper[i] < o[i]) h.upper[i] = o[i];
    }
  return h;
}

bool wconv_membership(const RootSystem& rs, const VecQ& x, const VecQ& y) {
  auto orbit = weyl_orbit(rs, x);
  for (int a = 0; a < rs.num_positive(); ++a) {
    Rat lo, hi;
    bool first = true;
    for (const VecQ& o : orbit) {
      Rat p = rs.pairing(o, a);
      if (first || p < lo) lo = p;
      if (first || hi < p) hi = p;
      first = false;
    }
    Rat p = rs.pairing(y, a);
    if (p < lo || hi < p) return false;
  }
  return true;
}

HullAgreement hull_agreement(const RootSystem& rs, const VecQ& x) {
  require_lattice(rs, x);
  HullDescription hull = dconv_hull(rs, x);
  auto ats = a_type_set(rs, x);

  HullAgreement r;
  // lattice points of the box (x + Q = all integer vectors here)
  std::vector<i64> lo(rs.rank), hi(rs.rank), c(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    lo[i] = ceil_of(hull.lower[i]);
    hi[i] = hull.upper[i].floor();
    c[i] = lo[i];
  }
  for (bool more = true; more;) {
    VecQ y(rs.rank);
    for (int i = 0; i < rs.rank; ++i) y[i] = Rat(c[i]);
    if (!ats.count(y)) r.only_hull.push_back(y);
    int i = 0;
    for (; i < rs.rank; ++i) {
      if (c[i] < hi[i]) {
        ++c[i];
        break;
      }
      c[i] = lo[i];
    }
    more = i < rs.rank;
  }
  for (const VecQ& y : ats)
    if (!hull.contains(y)) r.only_atype.push_back(y);

  std::sort(r.only_hull.begin(), r.only_hull.end(), VecQLess{});
  std::sort(r.only_atype.begin(), r.only_atype.end(), VecQLess{});
  r.agree = r.only_hull.empty() && r.only_atype.empty();
  return r;
}

}  // namespace weylfold
