#include <doctest.h>

#include <map>
#include <string>

#include "weylfold/root_system.hpp"

using namespace weylfold;

namespace {

const std::map<std::string, int> kWeylOrders = {
    {"A1", 2},  {"A2", 6},  {"A3", 24}, {"B2", 8},   {"B3", 48},
    {"C2", 8},  {"C3", 48}, {"D4", 192}, {"G2", 12}, {"F4", 1152}};

const std::map<std::string, int> kNumPositive = {
    {"A1", 1}, {"A2", 3}, {"A3", 6}, {"B2", 4},  {"B3", 9},
    {"C2", 4}, {"C3", 9}, {"D4", 12}, {"G2", 6}, {"F4", 24}};

VecQ qvec(std::initializer_list<i64> v) {
  VecQ r(Eigen::Index(v.size()));
  Eigen::Index i = 0;
  for (i64 x : v) r[i++] = Rat(x);
  return r;
}

}  // namespace

TEST_CASE("positive root counts for all supported kinds") {
  for (const auto& [name, n] : kNumPositive) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    CHECK(rs.num_positive() == n);
    // simple roots come first
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.positive_roots[i] == VecI::Unit(rs.rank, i));
    }
  }
}

TEST_CASE("Weyl group orders by direct enumeration") {
  for (const auto& [name, order] : kWeylOrders) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    CHECK(int(weyl_group(rs).size()) == order);
  }
}

TEST_CASE("Cartan matrix and symmetrized form") {
  for (const auto& [name, n] : kNumPositive) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 0; j < rs.rank; ++j) {
        if (i != j) CHECK(rs.cartan(i, j) <= 0);
        // B(i,j) = d_i C(i,j) must come out symmetric
        CHECK(rs.form(i, j) == rs.form(j, i));
      }
    }
    // every root has positive length
    for (const VecI& r : rs.positive_roots) {
      CHECK(rs.inner(to_q(r), to_q(r)) > Rat(0));
    }
  }
}

TEST_CASE("coweights are dual to the simple coroots") {
  for (const auto& [name, n] : kNumPositive) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(rs.pairing(rs.fundamental_coweights[i], j) == Rat(i == j ? 1 : 0));
    // rho pairs to 1 with every simple coroot
    for (int j = 0; j < rs.rank; ++j) CHECK(rs.pairing(rs.weyl_vector, j) == Rat(1));
  }
}

TEST_CASE("highest root vs the wall of the affine generator") {
  // the affine generator reflects across level 1 of the root whose coroot is
  // highest; for simply-laced kinds that is the highest root itself
  RootSystem g2 = construct(parse_kind("G2"));
  CHECK(g2.highest_root == (VecI(2) << 3, 2).finished());
  CHECK(g2.affine_root == (VecI(2) << 2, 1).finished());

  RootSystem b2 = construct(parse_kind("B2"));
  CHECK(b2.affine_root == (VecI(2) << 1, 1).finished());
  RootSystem c2 = construct(parse_kind("C2"));
  CHECK(c2.affine_root == (VecI(2) << 1, 1).finished());

  for (const std::string name : {"A1", "A2", "A3", "D4"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    CHECK(rs.affine_root == rs.highest_root);
  }
}

TEST_CASE("orbit sizes and dominant representatives") {
  RootSystem a2 = construct(parse_kind("A2"));
  VecQ lam = qvec({1, 1});  // regular: full orbit
  auto orbit = weyl_orbit(a2, lam);
  CHECK(orbit.size() == 6);
  for (const VecQ& v : orbit) {
    auto [rep, w] = dominant_rep(a2, v);
    CHECK(same_entries(rep, lam));
    CHECK(a2.is_dominant(rep));
    // the recorded element really maps v to its representative
    VecQ moved = VecQ::Zero(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) moved[i] += Rat(w.matrix(i, j)) * v[j];
    CHECK(same_entries(moved, rep));
  }

  // singular weight: orbit of a simple root under W(A2) is the root set
  auto root_orbit = weyl_orbit(a2, qvec({1, 0}));
  CHECK(root_orbit.size() == 6);

  RootSystem b2 = construct(parse_kind("B2"));
  CHECK(weyl_orbit(b2, qvec({1, 1})).size() == 4);
  CHECK(weyl_orbit(b2, qvec({1, 2})).size() == 4);
  CHECK(weyl_orbit(b2, qvec({2, 3})).size() == 8);
}

TEST_CASE("simple reflections are involutions permuting positive roots") {
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (int g = 0; g < rs.rank; ++g) {
      MatI sq = rs.simple_refl[g] * rs.simple_refl[g];
      CHECK(sq == MatI::Identity(rs.rank, rs.rank));
      // s_g permutes positive roots other than alpha_g
      for (int a = 0; a < rs.num_positive(); ++a) {
        if (a == g) continue;
        VecI img = rs.simple_refl[g] * rs.positive_roots[a];
        CHECK(rs.root_index(img) >= 0);
      }
      // and negates its own simple root
      VecI neg = rs.simple_refl[g] * rs.positive_roots[g];
      CHECK(neg == VecI(-rs.positive_roots[g]));
    }
  }
}

TEST_CASE("coroot pairing table is integral and matches the form") {
  for (const std::string name : {"A2", "B2", "G2", "F4"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (int a = 0; a < rs.num_positive(); ++a) {
      VecQ alpha = to_q(rs.positive_roots[a]);
      Rat norm = rs.inner(alpha, alpha);
      for (int i = 0; i < rs.rank; ++i) {
        // <alpha_i, alpha^vee> = 2 (alpha_i, alpha) / (alpha, alpha)
        Rat expect = Rat(2) * rs.inner(VecQ(to_q(VecI::Unit(rs.rank, i))), alpha) / norm;
        CHECK(Rat(rs.coroot_pairing(a, i)) == expect);
      }
    }
  }
}

TEST_CASE("reduced words multiply back to their matrices") {
  RootSystem rs = construct(parse_kind("B2"));
  for (const WeylElement& w : weyl_group(rs)) {
    MatI m = MatI::Identity(rs.rank, rs.rank);
    for (int g : w.word) m = m * rs.simple_refl[g];
    CHECK(m == w.matrix);
  }
}

TEST_CASE("unsupported kinds are rejected") {
  CHECK_THROWS_AS(parse_kind("E8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_kind(""), std::invalid_argument);
  // family letter is fine but the rank is outside the supported table
  CHECK_THROWS_AS(construct(parse_kind("A9")), std::invalid_argument);
  CHECK_THROWS_AS(construct(parse_kind("B1")), std::invalid_argument);
}
