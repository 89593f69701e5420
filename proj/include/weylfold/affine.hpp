#pragma once

#include <string>
#include <vector>

#include "weylfold/root_system.hpp"
#include "weylfold/types.hpp"

namespace weylfold {

// H_{alpha,k} = {x : <x,alpha^vee> = k}, alpha a positive root by index
struct AffineHyperplane {
  int root = -1;
  i64 level = 0;

  friend bool operator==(const AffineHyperplane& a, const AffineHyperplane& b) {
    return a.root == b.root && a.level == b.level;
  }
  friend bool operator<(const AffineHyperplane& a, const AffineHyperplane& b) {
    return a.root != b.root ? a.root < b.root : a.level < b.level;
  }
};

// An alcove element*fa of the affine Coxeter complex. The per-positive-root
// level vector is the canonical form: two alcoves are equal iff levels agree.
// lin/tr give the affine Weyl element x -> lin*x + tr; bary_num is the
// barycenter scaled by rs.bary_den so the hot path stays in integers.
struct Alcove {
  MatI lin;
  VecI tr;
  VecI bary_num;
  LevelVec levels;

  friend bool operator==(const Alcove& a, const Alcove& b) { return same_entries(a.levels, b.levels); }
  friend bool operator!=(const Alcove& a, const Alcove& b) { return !(a == b); }
};

struct Panel {
  std::vector<VecQ> vertices;  // rank many, sorted lexicographically
  AffineHyperplane support;
  int ptype;  // cotype: generator index in 0..rank

  friend bool operator==(const Panel& a, const Panel& b) {
    if (a.ptype != b.ptype || !(a.support == b.support)) return false;
    if (a.vertices.size() != b.vertices.size()) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
      if (!same_entries(a.vertices[i], b.vertices[i])) return false;
    return true;
  }
};

Alcove fundamental_alcove(const RootSystem& rs);
// the neighbor sharing the cotype-g panel (right multiplication by s_g)
Alcove cross(const RootSystem& rs, const Alcove& a, int g);
// support hyperplane of the cotype-g panel of a
AffineHyperplane wall_of(const RootSystem& rs, const Alcove& a, int g);
Panel panel_of(const RootSystem& rs, const Alcove& a, int g);
// true iff a lies on the side <x,alpha^vee> > k, i.e. H separates a from the
// antidominant chamber
bool separates(const RootSystem& rs, const AffineHyperplane& h, const Alcove& a);
// vertex of the alcove with the given type label
VecQ vertex_of_type(const RootSystem& rs, const Alcove& a, int t);
// type label of a vertex of the complex; throws invalid_argument otherwise
int vertex_type(const RootSystem& rs, const VecQ& v);
// all alcoves whose closure contains v, sorted by level vector
std::vector<Alcove> alcoves_containing(const RootSystem& rs, const VecQ& v);
// left-compose with the reflection across h (used by unfold/refold)
Alcove reflect_alcove(const RootSystem& rs, const AffineHyperplane& h, const Alcove& a);

// levels recomputed from scratch off the group element (vertex barycenter
// floor test); the incremental path must agree -- soundness invariant
LevelVec levels_from_element(const RootSystem& rs, const MatI& lin, const VecI& tr);

std::string to_string(const RootSystem& rs, const AffineHyperplane& h);

}  // namespace weylfold
