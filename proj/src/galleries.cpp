#include "weylfold/galleries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace weylfold {

namespace {

VecQ reflect_point(const RootSystem& rs, const AffineHyperplane& h, const VecQ& x) {
  Rat p = rs.pairing(x, h.root) - Rat(h.level);
  const VecI& alpha = rs.positive_roots[h.root];
  VecQ y = x;
  for (int i = 0; i < rs.rank; ++i) y[i] -= p * Rat(alpha[i]);
  return y;
}

void check_lattice_point(const RootSystem& rs, const VecQ& x, const char* what) {
  for (int i = 0; i < rs.rank; ++i)
    if (!x[i].is_integer())
      throw std::invalid_argument(std::string(what) + " must be a root-lattice point");
}

bool is_origin(const VecQ& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) return false;
  return true;
}

// BFS layers over the alcove graph, seeded at the alcoves around the origin,
// until a layer meets `targets`. Every node keeps all of its previous-layer
// predecessors, so shortest paths can be read off backwards. Layers are kept
// in level-vector order for a canonical result.
struct DagNode {
  Alcove alcove;
  std::vector<std::pair<int, int>> preds;  // (node index, generator crossed)
};

std::pair<std::vector<DagNode>, std::vector<int>> alcove_search(
    const RootSystem& rs, const std::set<LevelVec, LevelLess>& targets) {
  std::vector<DagNode> nodes;
  std::map<LevelVec, int, LevelLess> seen;
  for (const auto& a : alcoves_containing(rs, VecQ::Zero(rs.rank))) {
    seen.emplace(a.levels, int(nodes.size()));
    nodes.push_back({a, {}});
  }
  std::size_t lo = 0, hi = nodes.size();
  for (;;) {
    std::vector<int> hits;
    for (std::size_t i = lo; i < hi; ++i)
      if (targets.count(nodes[i].alcove.levels)) hits.push_back(int(i));
    if (!hits.empty()) return {std::move(nodes), std::move(hits)};
    if (nodes.size() > 500000) throw std::logic_error("alcove search exploded");

    std::map<LevelVec, DagNode, LevelLess> layer;
    for (std::size_t i = lo; i < hi; ++i)
      for (int gen = 0; gen <= rs.rank; ++gen) {
        Alcove nb = cross(rs, nodes[i].alcove, gen);
        if (seen.count(nb.levels)) continue;
        DagNode& slot = layer[nb.levels];
        if (slot.preds.empty()) slot.alcove = std::move(nb);
        slot.preds.push_back({int(i), gen});
      }
    if (layer.empty()) throw std::logic_error("alcove search exhausted");
    for (auto& [lv, nd] : layer) {
      seen.emplace(lv, int(nodes.size()));
      nodes.push_back(std::move(nd));
    }
    lo = hi;
    hi = nodes.size();
  }
}

std::set<LevelVec, LevelLess> target_levels(const RootSystem& rs, const VecQ& x) {
  std::set<LevelVec, LevelLess> t;
  for (const auto& a : alcoves_containing(rs, x)) t.insert(a.levels);
  return t;
}

}  // namespace

bool operator==(const Gallery& a, const Gallery& b) {
  if (a.degenerate != b.degenerate || a.target_type != b.target_type) return false;
  if (!same_entries(a.source, b.source) || !same_entries(a.target, b.target)) return false;
  if (a.degenerate) return true;
  if (!(a.first == b.first) || a.steps.size() != b.steps.size()) return false;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    const GalleryStep& x = a.steps[i];
    const GalleryStep& y = b.steps[i];
    if (x.gen != y.gen || x.folded != y.folded || !(x.alcove == y.alcove)) return false;
  }
  return true;
}

GalleryType gallery_type(const RootSystem& rs, const Gallery& g) {
  GalleryType t;
  t.source_type = vertex_type(rs, g.source);
  t.target_type = vertex_type(rs, g.target);
  for (const GalleryStep& s : g.steps) t.panel_types.push_back(s.gen);
  return t;
}

bool is_positively_folded(const RootSystem& rs, const Gallery& g) {
  if (g.degenerate) return true;
  const Alcove* prev = &g.first;
  for (const GalleryStep& s : g.steps) {
    if (s.folded && !separates(rs, s.wall, *prev)) return false;
    prev = &s.alcove;
  }
  return true;
}

Gallery minimal_gallery(const RootSystem& rs, const VecQ& x) {
  check_lattice_point(rs, x, "gallery target");

  Gallery g;
  g.source = VecQ::Zero(rs.rank);
  g.target = x;
  g.target_type = 0;
  if (is_origin(x)) {
    g.degenerate = true;
    return g;
  }

  auto [nodes, hits] = alcove_search(rs, target_levels(rs, x));
  std::vector<int> chain{hits.front()};
  while (!nodes[chain.back()].preds.empty()) chain.push_back(nodes[chain.back()].preds[0].first);
  std::reverse(chain.begin(), chain.end());

  g.first = nodes[chain[0]].alcove;
  const Alcove* prev = &g.first;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const DagNode& nd = nodes[chain[k]];
    int gen = -1;
    for (const auto& [p, pg] : nd.preds)
      if (p == chain[k - 1]) {
        gen = pg;
        break;
      }
    g.steps.push_back({gen, wall_of(rs, *prev, gen), false, nd.alcove});
    prev = &g.steps.back().alcove;
  }
  return g;
}

int gallery_distance(const RootSystem& rs, const VecQ& a, const VecQ& b) {
  check_lattice_point(rs, a, "gallery endpoint");
  check_lattice_point(rs, b, "gallery endpoint");
  if (same_entries(a, b)) return 1;
  VecQ d(rs.rank);
  for (int i = 0; i < rs.rank; ++i) d[i] = b[i] - a[i];
  return minimal_gallery(rs, d).length();
}

std::vector<GalleryType> minimal_gallery_types(const RootSystem& rs, const VecQ& x,
                                               std::size_t cap) {
  check_lattice_point(rs, x, "gallery target");
  if (cap == 0) return {};
  if (is_origin(x)) return {GalleryType{0, {}, 0}};

  auto [nodes, hits] = alcove_search(rs, target_levels(rs, x));

  std::set<std::vector<int>> paths;
  std::vector<int> rev;
  auto dfs = [&](auto&& self, int node) -> void {
    if (paths.size() >= cap) return;
    if (nodes[node].preds.empty()) {
      paths.emplace(rev.rbegin(), rev.rend());
      return;
    }
    for (const auto& [p, gen] : nodes[node].preds) {
      if (paths.size() >= cap) return;
      rev.push_back(gen);
      self(self, p);
      rev.pop_back();
    }
  };
  for (int h : hits) dfs(dfs, h);

  std::vector<GalleryType> out;
  for (const auto& p : paths) out.push_back({0, p, 0});
  std::sort(out.begin(), out.end());
  return out;
}

void enumerate_positively_folded(const RootSystem& rs, const GalleryType& t,
                                 const std::function<void(const Gallery&)>& visit) {
  if (t.source_type != 0)
    throw std::invalid_argument("folded enumeration starts at the origin (source type 0)");
  if (t.target_type < 0 || t.target_type > rs.rank)
    throw std::invalid_argument("bad target vertex type");
  for (int g : t.panel_types)
    if (g < 0 || g > rs.rank) throw std::invalid_argument("bad panel type");

  Gallery g;
  g.source = VecQ::Zero(rs.rank);
  g.target_type = t.target_type;
  if (t.panel_types.empty()) {
    if (t.target_type != 0) throw std::invalid_argument("empty type must end where it starts");
    g.target = g.source;
    g.degenerate = true;
    visit(g);
    return;
  }

  g.steps.reserve(t.panel_types.size());
  auto dfs = [&](auto&& self, const Alcove& a, std::size_t i) -> void {
    if (i == t.panel_types.size()) {
      g.target = vertex_of_type(rs, a, t.target_type);
      visit(g);
      return;
    }
    int gen = t.panel_types[i];
    AffineHyperplane w = wall_of(rs, a, gen);
    Alcove b = cross(rs, a, gen);
    g.steps.push_back({gen, w, false, std::move(b)});
    self(self, g.steps.back().alcove, i + 1);
    g.steps.pop_back();
    // a positive fold bounces off walls separating the alcove from the
    // antidominant chamber
    if (separates(rs, w, a)) {
      g.steps.push_back({gen, w, true, a});
      self(self, g.steps.back().alcove, i + 1);
      g.steps.pop_back();
    }
  };
  for (const Alcove& start : alcoves_containing(rs, g.source)) {
    g.first = start;
    dfs(dfs, start, 0);
  }
}

std::vector<Gallery> enumerate_positively_folded(const RootSystem& rs, const GalleryType& t) {
  std::vector<Gallery> out;
  enumerate_positively_folded(rs, t, [&](const Gallery& g) { out.push_back(g); });
  return out;
}

std::set<VecQ, VecQLess> folded_endpoints(const RootSystem& rs, const GalleryType& t) {
  std::set<VecQ, VecQLess> out;
  enumerate_positively_folded(rs, t, [&](const Gallery& g) { out.insert(g.target); });
  return out;
}

std::pair<Gallery, FoldScript> unfold(const RootSystem& rs, const Gallery& g) {
  if (g.degenerate) return {g, {}};

  Gallery out;
  out.source = g.source;
  out.target_type = g.target_type;
  out.first = g.first;
  out.steps.reserve(g.steps.size());
  FoldScript script;

  // accumulated reflection x -> R x + sft: composition of the straightening
  // reflections applied so far, in fold order
  MatI R = MatI::Identity(rs.rank, rs.rank);
  VecI sft = VecI::Zero(rs.rank);
  bool any_fold = false;

  const Alcove* in_prev = &g.first;
  Alcove prev = g.first;  // alcove before the current step in the output
  for (std::size_t i = 0; i < g.steps.size(); ++i) {
    const GalleryStep& st = g.steps[i];
    if (st.folded && !separates(rs, st.wall, *in_prev))
      throw std::domain_error("negative fold at step " + std::to_string(i + 1) + " across " +
                              to_string(rs, st.wall));
    AffineHyperplane w = wall_of(rs, prev, st.gen);
    Alcove nxt = cross(rs, prev, st.gen);
    if (st.folded) {
      script.entries.push_back({int(i) + 1, w});
      const VecI& alpha = rs.positive_roots[w.root];
      MatI refl = MatI::Identity(rs.rank, rs.rank);
      for (int r = 0; r < rs.rank; ++r)
        for (int c = 0; c < rs.rank; ++c) refl(r, c) -= alpha[r] * rs.coroot_pairing(w.root, c);
      R = refl * R;
      sft = refl * sft + w.level * alpha;
      any_fold = true;
    }
    out.steps.push_back({st.gen, w, false, nxt});
    in_prev = &st.alcove;
    prev = std::move(nxt);
  }

  // the endpoint rides along with every straightened fold
  if (any_fold) {
    VecQ tgt(rs.rank);
    for (int r = 0; r < rs.rank; ++r) {
      Rat s(sft[r]);
      for (int c = 0; c < rs.rank; ++c) s += Rat(R(r, c)) * g.target[c];
      tgt[r] = s;
    }
    out.target = std::move(tgt);
  } else {
    out.target = g.target;
  }
  return {std::move(out), std::move(script)};
}

Gallery apply_fold_script(const RootSystem& rs, const Gallery& g, const FoldScript& s) {
  if (s.entries.empty()) return g;
  if (g.degenerate) throw std::domain_error("cannot fold the empty gallery");

  const int m = int(g.steps.size());
  int prev_idx = 0;
  for (const auto& [idx, wall] : s.entries) {
    if (idx < 1 || idx > m)
      throw std::domain_error("fold script index " + std::to_string(idx) + " out of range");
    if (idx <= prev_idx) throw std::domain_error("fold script indices must strictly increase");
    prev_idx = idx;
  }

  // scripted walls must be panel supports of the gallery the script is for
  {
    const Alcove* prev = &g.first;
    std::size_t e = 0;
    for (int i = 0; i < m && e < s.entries.size(); ++i) {
      if (s.entries[e].first == i + 1) {
        if (g.steps[i].folded)
          throw std::domain_error("step " + std::to_string(i + 1) + " is already folded");
        AffineHyperplane w = wall_of(rs, *prev, g.steps[i].gen);
        if (!(w == s.entries[e].second))
          throw std::domain_error("scripted wall " + to_string(rs, s.entries[e].second) +
                                  " does not support step " + std::to_string(i + 1));
        ++e;
      }
      prev = &g.steps[i].alcove;
    }
  }

  std::vector<Alcove> alcs;
  alcs.reserve(m + 1);
  alcs.push_back(g.first);
  for (const GalleryStep& st : g.steps) alcs.push_back(st.alcove);
  std::vector<char> folded(m);
  for (int i = 0; i < m; ++i) folded[i] = g.steps[i].folded ? 1 : 0;
  VecQ target = g.target;

  // increasing order: each fold reflects the tail across the step's wall as it
  // stands after the earlier folds
  for (const auto& [idx, wall0] : s.entries) {
    AffineHyperplane w = wall_of(rs, alcs[idx - 1], g.steps[idx - 1].gen);
    if (!separates(rs, w, alcs[idx - 1]))
      throw std::domain_error("fold at step " + std::to_string(idx) + " across " +
                              to_string(rs, w) + " is not positive");
    for (int j = idx; j <= m; ++j) alcs[j] = reflect_alcove(rs, w, alcs[j]);
    target = reflect_point(rs, w, target);
    folded[idx - 1] = 1;
  }

  Gallery out;
  out.source = g.source;
  out.target = std::move(target);
  out.target_type = g.target_type;
  out.first = alcs[0];
  out.steps.reserve(m);
  for (int i = 0; i < m; ++i)
    out.steps.push_back(
        {g.steps[i].gen, wall_of(rs, alcs[i], g.steps[i].gen), folded[i] != 0, alcs[i + 1]});
  return out;
}

}  // namespace weylfold
