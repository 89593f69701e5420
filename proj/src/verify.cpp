#include "weylfold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "weylfold/characters.hpp"

namespace weylfold {

namespace {

i64 ms_since(const std::chrono::steady_clock::time_point& t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

std::string join_coords(const VecQ& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

}  // namespace

VerificationReport verify_cell(const RootSystem& rs, const VecQ& lambda, bool all_minimal_types,
                               const VecQ* counterexample_y) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.kind = rs.kind;
  rep.lambda = lambda;

  Gallery mg = minimal_gallery(rs, lambda);
  GalleryType t = gallery_type(rs, mg);
  rep.type_length = int(t.panel_types.size());

  auto ends = folded_endpoints(rs, t);
  auto ats = a_type_set(rs, lambda);
  rep.endpoint_set_size = i64(ends.size());
  rep.a_type_set_size = i64(ats.size());
  for (const VecQ& e : ends)
    if (!ats.count(e)) rep.mismatch_witnesses.push_back(e);
  for (const VecQ& a : ats)
    if (!ends.count(a)) rep.mismatch_witnesses.push_back(a);
  std::sort(rep.mismatch_witnesses.begin(), rep.mismatch_witnesses.end(), VecQLess{});
  rep.match = rep.mismatch_witnesses.empty();

  if (all_minimal_types) {
    MinimalTypesReport mt;
    auto types = minimal_gallery_types(rs, lambda, 8);
    mt.types_found = int(types.size());
    for (const GalleryType& ty : types)
      if (!(folded_endpoints(rs, ty) == ends)) mt.endpoint_sets_equal = false;
    rep.minimal_types = mt;
  }

  if (counterexample_y) {
    CounterexampleReport ce;
    ce.y = *counterexample_y;
    ce.wconv = wconv_membership(rs, lambda, ce.y);
    ce.in_a_type_set = ats.count(ce.y) > 0;
    ce.delta_x = gallery_distance(rs, VecQ::Zero(rs.rank), lambda);
    ce.delta_y = gallery_distance(rs, VecQ::Zero(rs.rank), ce.y);
    rep.counterexample = ce;
  }

  rep.wall_clock_ms = ms_since(t0);
  return rep;
}

OracleReport oracle_cell(const RootSystem& rs, const VecQ& lambda) {
  auto t0 = std::chrono::steady_clock::now();
  OracleReport rep;
  rep.kind = rs.kind;
  rep.lambda = lambda;
  rep.support_ok = support_check(rs, lambda);
  MultiplicityTable table = freudenthal(rs, lambda);
  rep.table_size = i64(table.entries.size());
  rep.dimension = weyl_dim(rs, lambda);
  rep.dimension_ok = table_dimension(rs, table) == rep.dimension;
  rep.wall_clock_ms = ms_since(t0);
  return rep;
}

VecQ lambda_from_pairing(const RootSystem& rs, const std::vector<i64>& a) {
  if (int(a.size()) != rs.rank)
    throw std::invalid_argument("expected " + std::to_string(rs.rank) +
                                " lambda coordinates for " + rs.kind.name());
  VecQ v = VecQ::Zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    if (a[i] < 0) throw std::invalid_argument("lambda coordinates must be nonnegative");
    v += Rat(a[i]) * rs.fundamental_coweights[i];
  }
  for (int i = 0; i < rs.rank; ++i)
    if (!v[i].is_integer())
      throw std::invalid_argument("lambda is not in the root lattice (simple-root coordinate " +
                                  std::to_string(i + 1) + " is " + v[i].to_string() + ")");
  return v;
}

std::vector<VecQ> lattice_grid(const RootSystem& rs, int cap) {
  std::vector<VecQ> out;
  std::vector<i64> a(rs.rank, 0);
  for (;;) {
    i64 sum = 0;
    for (i64 x : a) sum += x;
    if (sum <= cap) {
      VecQ lam = VecQ::Zero(rs.rank);
      for (int i = 0; i < rs.rank; ++i) lam += Rat(a[i]) * rs.fundamental_coweights[i];
      bool lattice = true;
      for (int i = 0; i < rs.rank; ++i)
        if (!lam[i].is_integer()) lattice = false;
      if (lattice) out.push_back(lam);
    }
    // odometer over [0, cap]^rank, most significant coordinate first
    int i = rs.rank - 1;
    for (; i >= 0; --i) {
      if (a[i] < cap) {
        ++a[i];
        break;
      }
      a[i] = 0;
    }
    if (i < 0) break;
  }
  return out;  // ascending lexicographic in pairing coordinates
}

std::vector<GridCell> default_grid_for(const RootSystemKind& kind, int cap_override) {
  int cap;
  if (cap_override >= 0) {
    cap = cap_override;
  } else if (kind.name() == "G2") {
    cap = 3;
  } else if (kind.name() == "A3") {
    cap = 2;
  } else {
    cap = 4;
  }
  RootSystem rs = construct(kind);
  std::vector<GridCell> out;
  for (const VecQ& lam : lattice_grid(rs, cap)) out.push_back({kind, lam});
  return out;
}

std::vector<GridCell> default_grid(int cap_override) {
  std::vector<GridCell> out;
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    auto cells = default_grid_for(parse_kind(name), cap_override);
    out.insert(out.end(), cells.begin(), cells.end());
  }
  return out;
}

std::string gallery_line(const RootSystem& rs, const Gallery& g) {
  std::string s = rs.kind.name() + " | src=" + join_coords(g.source) + " | start=";
  if (!g.degenerate) {
    for (Eigen::Index i = 0; i < g.first.levels.size(); ++i)
      s += (i ? "," : "") + std::to_string(g.first.levels[i]);
  }
  s += " | moves=";
  for (const GalleryStep& st : g.steps) s += st.folded ? 'F' : 'C';
  s += " | end=" + join_coords(g.target);
  return s;
}

}  // namespace weylfold
