#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylfold/affine.hpp"

using namespace weylfold;

namespace {

VecQ qvec(std::initializer_list<i64> v) {
  VecQ r(Eigen::Index(v.size()));
  Eigen::Index i = 0;
  for (i64 x : v) r[i++] = Rat(x);
  return r;
}

// deterministic pseudo-random walk over the alcove graph
std::vector<Alcove> walk(const RootSystem& rs, int len, unsigned seed) {
  std::vector<Alcove> out;
  Alcove a = fundamental_alcove(rs);
  unsigned state = seed;
  for (int i = 0; i < len; ++i) {
    state = state * 1664525u + 1013904223u;
    a = cross(rs, a, int(state % unsigned(rs.rank + 1)));
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("fundamental alcove sits just above every hyperplane's zero level") {
  for (const std::string name : {"A1", "A2", "B2", "G2", "A3"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    Alcove fa = fundamental_alcove(rs);
    for (int a = 0; a < rs.num_positive(); ++a) CHECK(fa.levels[a] == 0);
    CHECK(fa.lin == MatI::Identity(rs.rank, rs.rank));
    // vertex types 0..rank, with the origin of type 0
    CHECK(int(rs.fa_vertices.size()) == rs.rank + 1);
    CHECK(rs.fa_vertices[0].isZero());
  }
}

TEST_CASE("crossing any wall is an involution") {
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (const Alcove& a : walk(rs, 40, 7)) {
      for (int g = 0; g <= rs.rank; ++g) {
        Alcove b = cross(rs, a, g);
        CHECK(b != a);
        CHECK(cross(rs, b, g) == a);
      }
    }
  }
}

TEST_CASE("neighboring alcoves share their wall and panel") {
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (const Alcove& a : walk(rs, 30, 11)) {
      for (int g = 0; g <= rs.rank; ++g) {
        Alcove b = cross(rs, a, g);
        CHECK(wall_of(rs, a, g) == wall_of(rs, b, g));
        CHECK(panel_of(rs, a, g) == panel_of(rs, b, g));
      }
    }
  }
}

TEST_CASE("a wall separates exactly one of the two alcoves it bounds") {
  for (const std::string name : {"A2", "B2", "G2"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (const Alcove& a : walk(rs, 30, 13)) {
      for (int g = 0; g <= rs.rank; ++g) {
        AffineHyperplane w = wall_of(rs, a, g);
        CHECK(separates(rs, w, a) != separates(rs, w, cross(rs, a, g)));
      }
    }
  }
}

TEST_CASE("separates reads the level table") {
  RootSystem rs = construct(parse_kind("A2"));
  Alcove fa = fundamental_alcove(rs);
  // fa is above all zero levels and below all one levels
  for (int a = 0; a < rs.num_positive(); ++a) {
    CHECK(separates(rs, {a, 0}, fa));
    CHECK(!separates(rs, {a, 1}, fa));
    CHECK(separates(rs, {a, -3}, fa));
  }
}

TEST_CASE("alcoves around the origin are the Weyl chambers' corners") {
  const std::map<std::string, std::size_t> orders = {
      {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}};
  for (const auto& [name, order] : orders) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    auto star = alcoves_containing(rs, VecQ::Zero(rs.rank));
    CHECK(star.size() == order);
    // sorted and duplicate-free under the canonical level order
    for (std::size_t i = 0; i + 1 < star.size(); ++i) {
      CHECK(LevelLess{}(star[i].levels, star[i + 1].levels));
    }
    // every member really has the origin as a vertex, with type 0
    for (const Alcove& a : star) {
      bool found = false;
      for (int t = 0; t <= rs.rank; ++t)
        if (vertex_of_type(rs, a, t).isZero()) {
          found = true;
          CHECK(t == 0);
        }
      CHECK(found);
    }
  }
}

TEST_CASE("translated stars look alike") {
  RootSystem rs = construct(parse_kind("B2"));
  VecQ x = qvec({2, 3});
  auto star = alcoves_containing(rs, x);
  CHECK(star.size() == 8);
  for (const Alcove& a : star) CHECK(same_entries(vertex_of_type(rs, a, 0), x));
}

TEST_CASE("vertex types partition the lattice translates of fa corners") {
  for (const std::string name : {"A2", "B2", "G2"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    CHECK(vertex_type(rs, VecQ::Zero(rs.rank)) == 0);
    // root-lattice points are exactly the type-0 special vertices
    CHECK(vertex_type(rs, qvec({1, 0})) == 0);
    CHECK(vertex_type(rs, qvec({5, -2})) == 0);
    for (int t = 1; t <= rs.rank; ++t) {
      CHECK(vertex_type(rs, rs.fa_vertices[t]) == t);
    }
  }
}

TEST_CASE("reflecting across a bounding wall is the same as crossing it") {
  for (const std::string name : {"A2", "G2"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (const Alcove& a : walk(rs, 25, 17)) {
      for (int g = 0; g <= rs.rank; ++g) {
        AffineHyperplane w = wall_of(rs, a, g);
        CHECK(reflect_alcove(rs, w, a) == cross(rs, a, g));
        // reflecting twice is the identity
        CHECK(reflect_alcove(rs, w, reflect_alcove(rs, w, a)) == a);
      }
    }
  }
}

TEST_CASE("group element and barycenter agree on every level vector") {
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (const Alcove& a : walk(rs, 60, 23)) {
      CHECK(same_entries(levels_from_element(rs, a.lin, a.tr), a.levels));
    }
  }
}

TEST_CASE("higher-rank kinds satisfy the same alcove invariants") {
  // shorter walks than the rank-2 cases: ball growth is steep here and the
  // checks are per-alcove local
  for (const std::string name : {"B3", "C3", "D4", "F4"}) {
    RootSystem rs = construct(parse_kind(name));
    CAPTURE(name);
    for (const Alcove& a : walk(rs, 20, 31)) {
      CHECK(same_entries(levels_from_element(rs, a.lin, a.tr), a.levels));
      for (int g = 0; g <= rs.rank; ++g) {
        Alcove b = cross(rs, a, g);
        CHECK(cross(rs, b, g) == a);
        CHECK(panel_of(rs, a, g) == panel_of(rs, b, g));
        AffineHyperplane w = wall_of(rs, a, g);
        CHECK(separates(rs, w, a) != separates(rs, w, b));
      }
    }
  }
}

TEST_CASE("level vectors identify alcoves") {
  RootSystem rs = construct(parse_kind("B2"));
  std::set<LevelVec, LevelLess> seen;
  std::map<LevelVec, std::pair<MatI, VecI>, LevelLess> elements;
  for (const Alcove& a : walk(rs, 200, 29)) {
    auto [it, fresh] = elements.emplace(a.levels, std::make_pair(a.lin, a.tr));
    if (!fresh) {
      CHECK(it->second.first == a.lin);
      CHECK(it->second.second == a.tr);
    }
  }
}

TEST_CASE("hyperplane printing") {
  RootSystem rs = construct(parse_kind("A2"));
  CHECK(to_string(rs, {0, 2}) == "H{1,0;2}");
  CHECK(to_string(rs, {2, -1}) == "H{1,1;-1}");
}
