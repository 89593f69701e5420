#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "weylfold/types.hpp"

namespace weylfold {

struct WeylElement {
  MatI matrix;            // action on simple-root coordinates
  std::vector<int> word;  // reduced word, 0-based generator indices
};

struct RootSystem {
  RootSystemKind kind;
  int rank = 0;

  MatI cartan;      // C(i,j) = <alpha_j, alpha_i^vee>
  VecQ symmetrizer; // d_i with (alpha_i,alpha_j) = d_i * C(i,j); max d_i = 1
  MatQ form;        // B(i,j) = (alpha_i, alpha_j); long roots have length^2 = 2

  std::vector<VecI> positive_roots;  // simple roots first, then by (height, lex)
  PairMat coroot_pairing;            // row a, col i: <alpha_i, alpha_a^vee>
  VecI highest_root;                 // unique root of maximal height
  int highest_root_index = -1;
  VecI affine_root;                  // root whose coroot is the highest coroot;
  int affine_root_index = -1;        // its level-1 hyperplane walls the fundamental alcove

  std::vector<VecQ> fundamental_coweights;  // omega_i = column i of C^{-1}
  VecQ weyl_vector;                         // rho = sum of omega_i

  std::vector<VecQ> fa_vertices;  // fundamental alcove vertices, index = vertex type
  VecI fa_bary_num;               // fa barycenter scaled by bary_den
  i64 bary_den = 1;

  std::vector<MatI> simple_refl;  // S_i acting on simple-root coordinates
  MatI affine_refl_lin;           // linear part of s_0 (reflection across the affine wall)
  VecI affine_refl_tr;            // translation part of s_0 (= affine_root)

  int num_positive() const { return int(positive_roots.size()); }
  // index of r in positive_roots, or -1
  int root_index(const VecI& r) const;
  // <x, alpha^vee> for the a-th positive root, exact
  Rat pairing(const VecQ& x, int a) const;
  // same for integer x: exact integer
  i64 pairing_int(const VecI& x, int a) const;
  bool is_dominant(const VecQ& v) const;
  // (x, y) under the invariant form
  Rat inner(const VecQ& x, const VecQ& y) const;

 private:
  std::map<VecI, int, VecILess> root_lookup_;
  friend RootSystem construct(RootSystemKind kind);
};

RootSystem construct(RootSystemKind kind);

std::vector<WeylElement> weyl_group(const RootSystem& rs);
std::set<VecQ, VecQLess> weyl_orbit(const RootSystem& rs, const VecQ& v);
// (v+, w) with w * v = v+ dominant; w.word reduced
std::pair<VecQ, WeylElement> dominant_rep(const RootSystem& rs, const VecQ& v);
// 2(x,alpha)/(alpha,alpha); alpha must be a root (either sign)
Rat pair_with_coroot(const RootSystem& rs, const VecQ& x, const VecQ& alpha);

}  // namespace weylfold
