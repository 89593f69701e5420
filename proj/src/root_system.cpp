#include "weylfold/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylfold {

namespace {

// C(i,j) = <alpha_j, alpha_i^vee>; rows are coroots
std::vector<std::vector<i64>> cartan_table(const RootSystemKind& kind) {
  const auto [fam, n] = kind;
  switch (fam) {
    case Family::A:
      if (n >= 1 && n <= 3) {
        std::vector<std::vector<i64>> c(n, std::vector<i64>(n, 0));
        for (int i = 0; i < n; ++i) {
          c[i][i] = 2;
          if (i > 0) c[i][i - 1] = -1;
          if (i + 1 < n) c[i][i + 1] = -1;
        }
        return c;
      }
      break;
    case Family::B:
      if (n == 2) return {{2, -1}, {-2, 2}};
      if (n == 3) return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
      break;
    case Family::C:
      if (n == 2) return {{2, -2}, {-1, 2}};
      if (n == 3) return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
      break;
    case Family::D:
      if (n == 4)
        return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
      break;
    case Family::G:
      if (n == 2) return {{2, -3}, {-1, 2}};
      break;
    case Family::F:
      if (n == 4)
        return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
  }
  throw std::invalid_argument("unsupported root system kind: " + kind.name());
}

i64 lcm64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

VecI apply_simple(const MatI& cartan, int i, const VecI& x) {
  i64 p = 0;
  for (Eigen::Index j = 0; j < x.size(); ++j) p += cartan(i, j) * x[j];
  VecI y = x;
  y[i] -= p;
  return y;
}

}  // namespace

int RootSystem::root_index(const VecI& r) const {
  auto it = root_lookup_.find(r);
  return it == root_lookup_.end() ? -1 : it->second;
}

Rat RootSystem::pairing(const VecQ& x, int a) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) s += x[i] * Rat(coroot_pairing(a, i));
  return s;
}

i64 RootSystem::pairing_int(const VecI& x, int a) const {
  i64 s = 0;
  for (int i = 0; i < rank; ++i) s += x[i] * coroot_pairing(a, i);
  return s;
}

bool RootSystem::is_dominant(const VecQ& v) const {
  for (int i = 0; i < rank; ++i) {
    Rat p(0);
    for (int j = 0; j < rank; ++j) p += Rat(cartan(i, j)) * v[j];
    if (p < Rat(0)) return false;
  }
  return true;
}

Rat RootSystem::inner(const VecQ& x, const VecQ& y) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += x[i] * form(i, j) * y[j];
  return s;
}

RootSystem construct(RootSystemKind kind) {
  RootSystem rs;
  rs.kind = kind;
  auto table = cartan_table(kind);
  const int n = int(table.size());
  rs.rank = n;

  rs.cartan.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan(i, j) = table[i][j];

  // symmetrizer over the (connected) Dynkin graph, then normalize max to 1
  std::vector<Rat> d(n, Rat(0));
  d[0] = Rat(1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rs.cartan(i, j) != 0 && !d[i].is_zero() && d[j].is_zero()) {
          d[j] = d[i] * Rat(rs.cartan(i, j)) / Rat(rs.cartan(j, i));
          changed = true;
        }
  }
  Rat dmax = d[0];
  for (int i = 1; i < n; ++i)
    if (dmax < d[i]) dmax = d[i];
  rs.symmetrizer.resize(n);
  rs.form.resize(n, n);
  for (int i = 0; i < n; ++i) {
    rs.symmetrizer[i] = d[i] / dmax;
    for (int j = 0; j < n; ++j) rs.form(i, j) = rs.symmetrizer[i] * Rat(rs.cartan(i, j));
  }

  // positive roots: closure of the simple roots under simple reflections,
  // restricted to the positive cone; simple roots first, rest by (height, lex)
  std::set<VecI, VecILess> pos;
  std::vector<VecI> frontier;
  for (int i = 0; i < n; ++i) {
    VecI e = VecI::Zero(n);
    e[i] = 1;
    pos.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<VecI> next;
    for (const auto& r : frontier)
      for (int i = 0; i < n; ++i) {
        VecI s = apply_simple(rs.cartan, i, r);
        if (s.minCoeff() >= 0 && pos.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  for (int i = 0; i < n; ++i) {
    VecI e = VecI::Zero(n);
    e[i] = 1;
    rs.positive_roots.push_back(e);
    pos.erase(e);
  }
  std::vector<VecI> rest(pos.begin(), pos.end());
  std::sort(rest.begin(), rest.end(), [](const VecI& a, const VecI& b) {
    i64 ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return VecILess{}(a, b);
  });
  rs.positive_roots.insert(rs.positive_roots.end(), rest.begin(), rest.end());
  for (int a = 0; a < rs.num_positive(); ++a) rs.root_lookup_[rs.positive_roots[a]] = a;

  // coroot pairing rows: <alpha_i, alpha_a^vee> = 2(alpha_i,alpha_a)/(alpha_a,alpha_a)
  const int np = rs.num_positive();
  rs.coroot_pairing.resize(np, n);
  auto root_norm = [&rs, n](const VecI& r) {
    Rat s(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += Rat(r[i]) * rs.form(i, j) * Rat(r[j]);
    return s;
  };
  for (int a = 0; a < np; ++a) {
    const VecI& r = rs.positive_roots[a];
    Rat nr = root_norm(r);
    for (int i = 0; i < n; ++i) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += rs.form(i, j) * Rat(r[j]);
      Rat p = Rat(2) * s / nr;
      if (!p.is_integer()) throw std::logic_error("non-integral Cartan pairing");
      rs.coroot_pairing(a, i) = p.num();
    }
  }

  // highest root: maximal height (unique); affine root: maximal coroot height
  rs.highest_root_index = 0;
  rs.affine_root_index = 0;
  Rat best_co(0);
  for (int a = 0; a < np; ++a) {
    const VecI& r = rs.positive_roots[a];
    if (r.sum() > rs.positive_roots[rs.highest_root_index].sum()) rs.highest_root_index = a;
    Rat da = root_norm(r) / Rat(2);
    Rat co(0);
    for (int j = 0; j < n; ++j) co += Rat(r[j]) * rs.symmetrizer[j] / da;
    if (best_co < co) {
      best_co = co;
      rs.affine_root_index = a;
    }
  }
  rs.highest_root = rs.positive_roots[rs.highest_root_index];
  rs.affine_root = rs.positive_roots[rs.affine_root_index];

  // coweights = columns of C^{-1}; rho = their sum
  MatQ cq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cq(i, j) = Rat(rs.cartan(i, j));
  MatQ cinv = cq.inverse();
  rs.weyl_vector = VecQ::Zero(n);
  for (int j = 0; j < n; ++j) {
    rs.fundamental_coweights.push_back(cinv.col(j));
    rs.weyl_vector += cinv.col(j);
  }

  // fundamental alcove: vertex of type 0 at the origin, vertex of type i at
  // omega_i / <omega_i, affine_root^vee>
  rs.fa_vertices.push_back(VecQ::Zero(n));
  for (int i = 0; i < n; ++i) {
    Rat comark = rs.pairing(rs.fundamental_coweights[i], rs.affine_root_index);
    if (!comark.is_integer() || comark.num() <= 0)
      throw std::logic_error("bad comark");
    rs.fa_vertices.push_back(rs.fundamental_coweights[i] / comark);
  }

  VecQ bary = VecQ::Zero(n);
  for (const auto& v : rs.fa_vertices) bary += v;
  bary /= Rat(n + 1);
  rs.bary_den = 1;
  for (int i = 0; i < n; ++i) rs.bary_den = lcm64(rs.bary_den, bary[i].den());
  rs.fa_bary_num.resize(n);
  for (int i = 0; i < n; ++i) rs.fa_bary_num[i] = bary[i].num() * (rs.bary_den / bary[i].den());

  // generator matrices
  for (int i = 0; i < n; ++i) {
    MatI s = MatI::Identity(n, n);
    for (int j = 0; j < n; ++j) s(i, j) -= rs.cartan(i, j);
    rs.simple_refl.push_back(s);
  }
  rs.affine_refl_lin = MatI::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.affine_refl_lin(i, j) -= rs.affine_root[i] * rs.coroot_pairing(rs.affine_root_index, j);
  rs.affine_refl_tr = rs.affine_root;

  return rs;
}

namespace {

std::vector<i64> mat_key(const MatI& m) {
  std::vector<i64> k(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) k[i] = m.data()[i];
  return k;
}

}  // namespace

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<WeylElement> out;
  std::set<std::vector<i64>> seen;
  out.push_back({MatI::Identity(n, n), {}});
  seen.insert(mat_key(out[0].matrix));
  std::size_t head = 0;
  while (head < out.size()) {
    WeylElement cur = out[head++];  // copy: out may reallocate
    for (int i = 0; i < n; ++i) {
      MatI m = cur.matrix * rs.simple_refl[i];
      if (seen.insert(mat_key(m)).second) {
        auto word = cur.word;
        word.push_back(i);
        out.push_back({std::move(m), std::move(word)});
      }
    }
  }
  return out;  // BFS order: words are geodesic, hence reduced
}

std::set<VecQ, VecQLess> weyl_orbit(const RootSystem& rs, const VecQ& v) {
  std::set<VecQ, VecQLess> orbit{v};
  std::vector<VecQ> frontier{v};
  while (!frontier.empty()) {
    std::vector<VecQ> next;
    for (const auto& x : frontier)
      for (int i = 0; i < rs.rank; ++i) {
        Rat p(0);
        for (int j = 0; j < rs.rank; ++j) p += Rat(rs.cartan(i, j)) * x[j];
        VecQ y = x;
        y[i] -= p;
        if (orbit.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return orbit;
}

std::pair<VecQ, WeylElement> dominant_rep(const RootSystem& rs, const VecQ& v) {
  const int n = rs.rank;
  VecQ cur = v;
  MatI m = MatI::Identity(n, n);
  MatI inv = MatI::Identity(n, n);  // m^{-1}, maintained alongside
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      Rat p(0);
      for (int j = 0; j < n; ++j) p += Rat(rs.cartan(i, j)) * cur[j];
      if (p < Rat(0)) {
        cur[i] -= p;  // apply s_i
        m = rs.simple_refl[i] * m;
        inv = inv * rs.simple_refl[i];
        moved = true;
        break;
      }
    }
  }
  // reduced word by left descents: s_j shortens cur_m iff cur_m^{-1}(alpha_j) < 0
  WeylElement w;
  w.matrix = m;
  MatI cur_m = m;
  while (!same_entries(cur_m, MatI::Identity(n, n))) {
    int pick = -1;
    for (int j = 0; j < n && pick < 0; ++j) {
      VecI img = inv * VecI(VecI::Unit(n, j));
      if (img.maxCoeff() <= 0 && img.minCoeff() < 0) pick = j;
    }
    if (pick < 0) throw std::logic_error("descent not found");
    w.word.push_back(pick);
    cur_m = rs.simple_refl[pick] * cur_m;
    inv = inv * rs.simple_refl[pick];  // (s_j m)^{-1} = m^{-1} s_j
  }
  return {cur, w};
}

Rat pair_with_coroot(const RootSystem& rs, const VecQ& x, const VecQ& alpha) {
  VecI r(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    if (!alpha[i].is_integer()) throw std::invalid_argument("not a root");
    r[i] = alpha[i].num();
  }
  int idx = rs.root_index(r);
  int sign = 1;
  if (idx < 0) {
    idx = rs.root_index(VecI(-r));
    sign = -1;
  }
  if (idx < 0) throw std::invalid_argument("not a root");
  Rat p = rs.pairing(x, idx);
  return sign < 0 ? -p : p;
}

}  // namespace weylfold
