#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "weylfold/characters.hpp"

using namespace weylfold;

namespace {

VecQ qvec(std::initializer_list<i64> v) {
  VecQ r(Eigen::Index(v.size()));
  Eigen::Index i = 0;
  for (i64 x : v) r[i++] = Rat(x);
  return r;
}

}  // namespace

TEST_CASE("sl2 strings") {
  RootSystem rs = construct(parse_kind("A1"));
  MultiplicityTable t = freudenthal(rs, qvec({1}));
  CHECK(t.entries.size() == 2);
  CHECK(t.at(qvec({1})) == 1);
  CHECK(t.at(qvec({0})) == 1);
  CHECK(weyl_dim(rs, qvec({1})) == 3);
  CHECK(table_dimension(rs, t) == 3);

  MultiplicityTable t2 = freudenthal(rs, qvec({2}));
  CHECK(t2.entries.size() == 3);
  for (i64 k : {0, 1, 2}) CHECK(t2.at(qvec({k})) == 1);
  CHECK(weyl_dim(rs, qvec({2})) == 5);
}

TEST_CASE("the A2 adjoint module") {
  RootSystem rs = construct(parse_kind("A2"));
  VecQ lam = qvec({1, 1});
  MultiplicityTable t = freudenthal(rs, lam);
  CHECK(t.entries.size() == 2);
  CHECK(t.at(lam) == 1);
  CHECK(t.at(qvec({0, 0})) == 2);  // the Cartan subalgebra
  CHECK(weyl_dim(rs, lam) == 8);
  CHECK(table_dimension(rs, t) == 8);
}

TEST_CASE("the G2 adjoint module") {
  RootSystem rs = construct(parse_kind("G2"));
  VecQ lam = qvec({3, 2});  // highest root
  MultiplicityTable t = freudenthal(rs, lam);
  CHECK(t.entries.size() == 3);
  CHECK(t.at(lam) == 1);
  CHECK(t.at(qvec({2, 1})) == 1);  // highest short root
  CHECK(t.at(qvec({0, 0})) == 2);
  CHECK(weyl_dim(rs, lam) == 14);
  CHECK(table_dimension(rs, t) == 14);
}

TEST_CASE("the sl4 adjoint module") {
  RootSystem rs = construct(parse_kind("A3"));
  VecQ lam = qvec({1, 1, 1});
  MultiplicityTable t = freudenthal(rs, lam);
  CHECK(t.at(qvec({0, 0, 0})) == 3);
  CHECK(weyl_dim(rs, lam) == 15);
  CHECK(table_dimension(rs, t) == 15);
}

TEST_CASE("the five-dimensional so5 vector module") {
  RootSystem rs = construct(parse_kind("B2"));
  VecQ lam = qvec({1, 1});
  MultiplicityTable t = freudenthal(rs, lam);
  CHECK(t.entries.size() == 2);
  CHECK(t.at(lam) == 1);
  CHECK(t.at(qvec({0, 0})) == 1);
  CHECK(weyl_dim(rs, lam) == 5);
  CHECK(table_dimension(rs, t) == 5);
}

TEST_CASE("larger dimensions stay exact") {
  RootSystem a2 = construct(parse_kind("A2"));
  CHECK(weyl_dim(a2, qvec({3, 3})) == 64);
  CHECK(table_dimension(a2, freudenthal(a2, qvec({3, 3}))) == 64);
  CHECK(weyl_dim(a2, qvec({0, 0})) == 1);

  RootSystem g2 = construct(parse_kind("G2"));
  MultiplicityTable t = freudenthal(g2, qvec({9, 6}));
  CHECK(table_dimension(g2, t) == weyl_dim(g2, qvec({9, 6})));
}

TEST_CASE("multiplicities weakly increase down the dominance order") {
  // classical fact for one highest weight: m(nu) >= m(mu) when nu <= mu;
  // checked here as a consistency property of the recursion
  RootSystem rs = construct(parse_kind("A2"));
  VecQ lam = qvec({2, 2});
  MultiplicityTable t = freudenthal(rs, lam);
  for (const auto& [nu, m] : t.entries) {
    for (const auto& [mu, m2] : t.entries) {
      if (dominance_leq(rs, nu, mu)) CHECK(m >= m2);
    }
  }
}

TEST_CASE("support matches the dominance ideal and the a_type_set") {
  const std::map<std::string, std::vector<i64>> cells = {
      {"A1", {2}}, {"A2", {2, 2}}, {"B2", {2, 2}}, {"G2", {3, 2}}};
  for (const auto& [kind, alpha] : cells) {
    RootSystem rs = construct(parse_kind(kind));
    CAPTURE(kind);
    VecQ lam(Eigen::Index(alpha.size()));
    for (std::size_t i = 0; i < alpha.size(); ++i) lam[Eigen::Index(i)] = Rat(alpha[i]);
    CHECK(support_check(rs, lam));
  }
}

TEST_CASE("freudenthal rejects bad inputs") {
  RootSystem rs = construct(parse_kind("A2"));
  CHECK_THROWS_AS(freudenthal(rs, qvec({-1, 0})), std::invalid_argument);
  VecQ frac(2);
  frac << Rat(1, 2), Rat(1, 2);
  CHECK_THROWS_AS(freudenthal(rs, frac), std::invalid_argument);
}
