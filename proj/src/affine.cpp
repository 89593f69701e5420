#include "weylfold/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylfold {

namespace {

i64 floor_div(i64 p, i64 q) {
  i64 d = p / q, r = p % q;
  return (r != 0 && (r < 0) != (q < 0)) ? d - 1 : d;
}

Alcove make_alcove(const RootSystem& rs, MatI lin, VecI tr) {
  Alcove a;
  a.bary_num = lin * rs.fa_bary_num + rs.bary_den * tr;
  a.levels.resize(rs.num_positive());
  for (int p = 0; p < rs.num_positive(); ++p)
    a.levels[p] = floor_div(rs.pairing_int(a.bary_num, p), rs.bary_den);
  a.lin = std::move(lin);
  a.tr = std::move(tr);
  return a;
}

VecQ apply_affine(const RootSystem& rs, const MatI& lin, const VecI& tr, const VecQ& x) {
  VecQ y(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rat s(tr[i]);
    for (int j = 0; j < rs.rank; ++j) s += Rat(lin(i, j)) * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace

Alcove fundamental_alcove(const RootSystem& rs) {
  return make_alcove(rs, MatI::Identity(rs.rank, rs.rank), VecI::Zero(rs.rank));
}

Alcove cross(const RootSystem& rs, const Alcove& a, int g) {
  if (g == 0)
    return make_alcove(rs, a.lin * rs.affine_refl_lin, a.lin * rs.affine_refl_tr + a.tr);
  return make_alcove(rs, a.lin * rs.simple_refl[g - 1], a.tr);
}

AffineHyperplane wall_of(const RootSystem& rs, const Alcove& a, int g) {
  VecI base;
  i64 k;
  if (g == 0) {
    base = rs.affine_root;
    k = 1;
  } else {
    base = VecI::Zero(rs.rank);
    base[g - 1] = 1;
    k = 0;
  }
  VecI img = a.lin * base;
  i64 sign = 1;
  if (img.maxCoeff() <= 0) {
    img = -img;
    sign = -1;
  }
  int idx = rs.root_index(img);
  if (idx < 0) throw std::logic_error("wall image is not a root");
  return {idx, sign * k + rs.pairing_int(a.tr, idx)};
}

Panel panel_of(const RootSystem& rs, const Alcove& a, int g) {
  Panel p;
  for (int t = 0; t <= rs.rank; ++t)
    if (t != g) p.vertices.push_back(apply_affine(rs, a.lin, a.tr, rs.fa_vertices[t]));
  std::sort(p.vertices.begin(), p.vertices.end(), VecQLess{});
  p.support = wall_of(rs, a, g);
  p.ptype = g;
  return p;
}

bool separates(const RootSystem& rs, const AffineHyperplane& h, const Alcove& a) {
  (void)rs;
  return a.levels[h.root] >= h.level;
}

VecQ vertex_of_type(const RootSystem& rs, const Alcove& a, int t) {
  return apply_affine(rs, a.lin, a.tr, rs.fa_vertices[t]);
}

namespace {

// reduce v into the closed fundamental alcove, recording the generators applied
int reduce_to_fa(const RootSystem& rs, VecQ& v, std::vector<int>* ops) {
  for (int guard = 0; guard < 1 << 20; ++guard) {
    int applied = -1;
    for (int i = 0; i < rs.rank && applied < 0; ++i) {
      if (rs.pairing(v, i) < Rat(0)) {
        Rat p = rs.pairing(v, i);
        for (int j = 0; j < rs.rank; ++j) v[j] -= p * Rat(rs.positive_roots[i][j]);
        applied = i + 1;
      }
    }
    if (applied < 0 && Rat(1) < rs.pairing(v, rs.affine_root_index)) {
      Rat p = rs.pairing(v, rs.affine_root_index) - Rat(1);
      for (int j = 0; j < rs.rank; ++j) v[j] -= p * Rat(rs.affine_root[j]);
      applied = 0;
    }
    if (applied < 0) {
      for (int t = 0; t <= rs.rank; ++t)
        if (same_entries(v, rs.fa_vertices[t])) return t;
      return -1;
    }
    if (ops) ops->push_back(applied);
  }
  throw std::logic_error("fundamental-domain reduction did not terminate");
}

}  // namespace

int vertex_type(const RootSystem& rs, const VecQ& v) {
  VecQ w = v;
  int t = reduce_to_fa(rs, w, nullptr);
  if (t < 0) throw std::invalid_argument("not a vertex of the complex");
  return t;
}

std::vector<Alcove> alcoves_containing(const RootSystem& rs, const VecQ& v) {
  VecQ w = v;
  std::vector<int> ops;
  int tv = reduce_to_fa(rs, w, &ops);
  if (tv < 0) throw std::invalid_argument("not a vertex of the complex");

  // the op sequence conjugates v into fa; crossing fa back out along it gives
  // one alcove whose closure contains v
  Alcove seed = fundamental_alcove(rs);
  for (int g : ops) seed = cross(rs, seed, g);

  std::vector<Alcove> out{seed};
  std::set<LevelVec, LevelLess> seen{seed.levels};
  for (std::size_t head = 0; head < out.size(); ++head) {
    Alcove cur = out[head];
    for (int g = 0; g <= rs.rank; ++g) {
      if (g == tv) continue;  // the cotype-tv panel is the one not containing v
      Alcove nb = cross(rs, cur, g);
      if (seen.insert(nb.levels).second) out.push_back(nb);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Alcove& a, const Alcove& b) { return LevelLess{}(a.levels, b.levels); });
  return out;
}

Alcove reflect_alcove(const RootSystem& rs, const AffineHyperplane& h, const Alcove& a) {
  const VecI& alpha = rs.positive_roots[h.root];
  MatI refl = MatI::Identity(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) refl(i, j) -= alpha[i] * rs.coroot_pairing(h.root, j);
  VecI shift = h.level * alpha;
  return make_alcove(rs, refl * a.lin, refl * a.tr + shift);
}

LevelVec levels_from_element(const RootSystem& rs, const MatI& lin, const VecI& tr) {
  VecQ bary = VecQ::Zero(rs.rank);
  for (int t = 0; t <= rs.rank; ++t) bary += apply_affine(rs, lin, tr, rs.fa_vertices[t]);
  bary /= Rat(rs.rank + 1);
  LevelVec lv(rs.num_positive());
  for (int p = 0; p < rs.num_positive(); ++p) lv[p] = rs.pairing(bary, p).floor();
  return lv;
}

std::string to_string(const RootSystem& rs, const AffineHyperplane& h) {
  std::string s = "H{";
  const VecI& r = rs.positive_roots[h.root];
  for (int i = 0; i < rs.rank; ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ";" + std::to_string(h.level) + "}";
}

}  // namespace weylfold
