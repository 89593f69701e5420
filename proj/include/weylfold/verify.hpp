#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylfold/convexity.hpp"
#include "weylfold/galleries.hpp"

namespace weylfold {

struct MinimalTypesReport {
  int types_found = 0;
  bool endpoint_sets_equal = true;
};

struct CounterexampleReport {
  VecQ y;
  bool wconv = false;
  bool in_a_type_set = false;
  int delta_x = 0;
  int delta_y = 0;
};

struct VerificationReport {
  RootSystemKind kind{Family::A, 1};
  VecQ lambda;          // simple-root coordinates
  int type_length = 0;  // panel entries in the verified gallery type
  i64 endpoint_set_size = 0;
  i64 a_type_set_size = 0;
  bool match = false;
  std::vector<VecQ> mismatch_witnesses;  // symmetric difference, sorted
  i64 wall_clock_ms = 0;
  std::optional<MinimalTypesReport> minimal_types;
  std::optional<CounterexampleReport> counterexample;
};

struct OracleReport {
  RootSystemKind kind{Family::A, 1};
  VecQ lambda;
  bool support_ok = false;
  bool dimension_ok = false;
  i64 dimension = 0;
  i64 table_size = 0;
  i64 wall_clock_ms = 0;
};

// the theorem check for one highest weight:
// endpoints(enumerate_positively_folded(type of minimal_gallery(0, lambda)))
//   ?= a_type_set(lambda)
VerificationReport verify_cell(const RootSystem& rs, const VecQ& lambda,
                               bool all_minimal_types = false,
                               const VecQ* counterexample_y = nullptr);

OracleReport oracle_cell(const RootSystem& rs, const VecQ& lambda);

// lambda from command-line coordinates a_i = <lambda, alpha_i^vee>
VecQ lambda_from_pairing(const RootSystem& rs, const std::vector<i64>& a);

// dominant root-lattice points with pairing-coordinate sum <= cap, in
// ascending lexicographic pairing-coordinate order
std::vector<VecQ> lattice_grid(const RootSystem& rs, int cap);

struct GridCell {
  RootSystemKind kind{Family::A, 1};
  VecQ lambda;
};

// the verification grid: A1/A2/B2 up to sum 4, G2 up to 3, A3 up to 2;
// cap_override >= 0 replaces every per-kind cap
std::vector<GridCell> default_grid(int cap_override = -1);
std::vector<GridCell> default_grid_for(const RootSystemKind& kind, int cap_override = -1);

// one-line dump format:
// <kind> | src=<coords> | start=<levels> | moves=<C|F>* | end=<coords>
std::string gallery_line(const RootSystem& rs, const Gallery& g);

}  // namespace weylfold
