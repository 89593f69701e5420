#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "weylfold/affine.hpp"

namespace weylfold {

// one move of a gallery: the cotype-gen panel of the previous alcove is either
// crossed (folded = false) or folded at (folded = true, alcove repeats)
struct GalleryStep {
  int gen;
  AffineHyperplane wall;  // support of the panel in the gallery's current frame
  bool folded;
  Alcove alcove;  // alcove after the move
};

struct Gallery {
  VecQ source;
  VecQ target;
  int target_type = 0;
  bool degenerate = false;  // zero alcoves: source == target, no moves
  Alcove first;             // meaningless when degenerate
  std::vector<GalleryStep> steps;

  // number of alcoves in the sequence (stutters repeat an alcove)
  int length() const { return degenerate ? 0 : 1 + int(steps.size()); }
  const Alcove& last() const { return steps.empty() ? first : steps.back().alcove; }

  friend bool operator==(const Gallery& a, const Gallery& b);
};

struct GalleryType {
  int source_type = 0;
  std::vector<int> panel_types;
  int target_type = 0;

  friend bool operator==(const GalleryType& a, const GalleryType& b) {
    return a.source_type == b.source_type && a.target_type == b.target_type &&
           a.panel_types == b.panel_types;
  }
  friend bool operator<(const GalleryType& a, const GalleryType& b) {
    if (a.source_type != b.source_type) return a.source_type < b.source_type;
    if (a.panel_types != b.panel_types) return a.panel_types < b.panel_types;
    return a.target_type < b.target_type;
  }
};

// ordered (step index, wall) pairs; indices are 1-based and strictly increasing.
// Walls are supports in the gallery the script applies to (the unfolded one).
struct FoldScript {
  std::vector<std::pair<int, AffineHyperplane>> entries;
};

GalleryType gallery_type(const RootSystem& rs, const Gallery& g);

bool is_positively_folded(const RootSystem& rs, const Gallery& g);

// shortest gallery 0 -> x by BFS over the alcove graph; x must be a type-0
// special vertex (root-lattice point). x = 0 gives the degenerate gallery.
Gallery minimal_gallery(const RootSystem& rs, const VecQ& x);

// delta: number of alcoves in a shortest gallery between two vertices
// (1 when a == b)
int gallery_distance(const RootSystem& rs, const VecQ& a, const VecQ& b);

// several BFS-distinct minimal gallery types for 0 -> x, deduplicated and
// sorted; at most `cap` types
std::vector<GalleryType> minimal_gallery_types(const RootSystem& rs, const VecQ& x,
                                               std::size_t cap = 8);

// exhaustive DFS over positively folded galleries of type t with source 0:
// first alcove ranges over alcoves_containing(0); crossing is always allowed,
// folding only where the panel wall separates the alcove from the
// antidominant chamber. Visitor order is deterministic.
void enumerate_positively_folded(const RootSystem& rs, const GalleryType& t,
                                 const std::function<void(const Gallery&)>& visit);
std::vector<Gallery> enumerate_positively_folded(const RootSystem& rs, const GalleryType& t);

// endpoint set of the enumeration
std::set<VecQ, VecQLess> folded_endpoints(const RootSystem& rs, const GalleryType& t);

// left-to-right stutter removal; returns the non-stuttering gallery and the
// fold script that re-creates g. Errors if g is not positively folded.
std::pair<Gallery, FoldScript> unfold(const RootSystem& rs, const Gallery& g);

// fold the tail at each scripted step (increasing index order, across the
// step's current wall); inverse of unfold. Errors on a negative fold or if a
// scripted wall is not the support at that step of the input gallery.
Gallery apply_fold_script(const RootSystem& rs, const Gallery& g, const FoldScript& s);

}  // namespace weylfold
