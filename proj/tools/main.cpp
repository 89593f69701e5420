#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "weylfold/characters.hpp"
#include "weylfold/render.hpp"
#include "weylfold/report_json.hpp"
#include "weylfold/verify.hpp"

namespace {

using namespace weylfold;

std::string alpha_coords(const VecQ& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::string pairing_coords(const RootSystem& rs, const VecQ& v) {
  std::string s = "<";
  for (int i = 0; i < rs.rank; ++i) s += (i ? "," : "") + rs.pairing(v, i).to_string();
  return s + ">";
}

// fan cells out to a small pool; results keep canonical (input) order
template <typename Cell, typename Fn>
auto run_cells(const std::vector<Cell>& cells, int threads, Fn fn) {
  using R = decltype(fn(cells.front()));
  std::vector<R> out(cells.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) out[i] = fn(cells[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      out[i] = fn(cells[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

void emit(const std::string& json, const std::string& json_path, const std::string& human) {
  std::cerr << human;
  if (json_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream f(json_path);
    if (!f) throw std::runtime_error("cannot write " + json_path);
    f << json;
  }
}

VecQ parse_counterexample(const RootSystem& rs, const std::string& spec) {
  const std::string suffix = "-in-alpha";
  if (spec.size() <= suffix.size() || spec.substr(spec.size() - suffix.size()) != suffix)
    throw std::invalid_argument("counterexample spec must look like 4,2-in-alpha");
  std::stringstream ss(spec.substr(0, spec.size() - suffix.size()));
  VecQ y = VecQ::Zero(rs.rank);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= rs.rank) throw std::invalid_argument("too many counterexample coordinates");
    y[i++] = Rat(std::stoll(tok));
  }
  if (i != rs.rank) throw std::invalid_argument("expected " + std::to_string(rs.rank) +
                                                " counterexample coordinates");
  return y;
}

struct CommonOpts {
  std::string kind;
  std::vector<i64> lambda;
  bool lambda_set = false;
  int max_height = -1;
  std::string json_path;
  bool no_timing = false;
  int threads = 1;
  unsigned long long seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool grid_capable) {
  cmd->add_option("--kind", o.kind, "root system kind (A1..A3, B2, B3, C2, C3, D4, G2, F4)");
  cmd->add_option("--lambda", o.lambda,
                  "highest weight in <lambda,alpha_i^vee> coordinates, e.g. 1,1")
      ->delimiter(',')
      ->each([&o](const std::string&) { o.lambda_set = true; });
  if (grid_capable)
    cmd->add_option("--max-height", o.max_height,
                    "override the per-kind coordinate-sum cap of the grid");
  cmd->add_option("--json", o.json_path, "write the JSON report to this file");
  cmd->add_flag("--no-timing", o.no_timing, "omit wall-clock fields (diffable reports)");
  cmd->add_option("--threads", o.threads, "worker threads for grid runs")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--seed", o.seed, "reserved; exact algorithms ignore it")
      ->each([&o](const std::string&) { o.seed_set = true; });
}

std::vector<GridCell> cells_for(const CommonOpts& o) {
  if (o.lambda_set) {
    if (o.kind.empty()) throw std::invalid_argument("--lambda requires --kind");
    RootSystem rs = construct(parse_kind(o.kind));
    return {{rs.kind, lambda_from_pairing(rs, o.lambda)}};
  }
  if (!o.kind.empty()) return default_grid_for(parse_kind(o.kind), o.max_height);
  return default_grid(o.max_height);
}

void note_seed(const CommonOpts& o) {
  if (o.seed_set)
    std::cerr << "seed " << o.seed << " recorded; all algorithms are exact and ignore it\n";
}

int cmd_verify(const CommonOpts& o, bool all_types, const std::string& ce_spec) {
  note_seed(o);
  auto cells = cells_for(o);
  VecQ ce_y;
  bool have_ce = false;
  if (!ce_spec.empty()) {
    if (cells.size() != 1)
      throw std::invalid_argument("--check-counterexample needs --kind and --lambda");
    ce_y = parse_counterexample(construct(cells[0].kind), ce_spec);
    have_ce = true;
  }

  auto reports = run_cells(cells, o.threads, [&](const GridCell& c) {
    RootSystem rs = construct(c.kind);
    return verify_cell(rs, c.lambda, all_types, have_ce ? &ce_y : nullptr);
  });

  std::string human;
  bool ok = true;
  for (const auto& r : reports) {
    RootSystem rs = construct(r.kind);
    human += r.kind.name() + " lambda" + pairing_coords(rs, r.lambda) + " = alpha" +
             alpha_coords(r.lambda) + ": " + (r.match ? "match" : "MISMATCH") + " (" +
             std::to_string(r.endpoint_set_size) + " endpoints, " +
             std::to_string(r.a_type_set_size) + " a-type, type length " +
             std::to_string(r.type_length) + ")" +
             (o.no_timing ? "" : " [" + std::to_string(r.wall_clock_ms) + " ms]");
    if (!r.match) ok = false;
    if (r.minimal_types) {
      human += "; " + std::to_string(r.minimal_types->types_found) + " minimal types, endpoints " +
               (r.minimal_types->endpoint_sets_equal ? "equal" : "DIFFER");
      if (!r.minimal_types->endpoint_sets_equal) ok = false;
    }
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      human += "; y=alpha" + alpha_coords(c.y) + ": wconv=" + (c.wconv ? "yes" : "no") +
               " a-type=" + (c.in_a_type_set ? "yes" : "no") +
               " delta_x=" + std::to_string(c.delta_x) + " delta_y=" + std::to_string(c.delta_y);
    }
    human += "\n";
  }
  human += (ok ? "verified " : "FAILED ") + std::to_string(reports.size()) + " cell(s)\n";
  emit(reports_to_json(reports, !o.no_timing), o.json_path, human);
  return ok ? 0 : 1;
}

int cmd_oracle(const CommonOpts& o) {
  note_seed(o);
  auto cells = cells_for(o);
  auto reports = run_cells(cells, o.threads, [&](const GridCell& c) {
    return oracle_cell(construct(c.kind), c.lambda);
  });

  std::string human;
  bool ok = true;
  for (const auto& r : reports) {
    bool pass = r.support_ok && r.dimension_ok;
    ok = ok && pass;
    human += r.kind.name() + " lambda=alpha" + alpha_coords(r.lambda) + ": " +
             (pass ? "pass" : "FAIL") + " (dim " + std::to_string(r.dimension) + ", " +
             std::to_string(r.table_size) + " dominant weights)" +
             (o.no_timing ? "" : " [" + std::to_string(r.wall_clock_ms) + " ms]") + "\n";
  }
  human += (ok ? "oracle agreed on " : "oracle FAILED on ") + std::to_string(reports.size()) +
           " cell(s)\n";
  emit(oracle_reports_to_json(reports, !o.no_timing), o.json_path, human);
  return ok ? 0 : 1;
}

int cmd_dump(const CommonOpts& o, const std::string& out_path) {
  if (o.kind.empty() || !o.lambda_set)
    throw std::invalid_argument("dump-galleries needs --kind and --lambda");
  RootSystem rs = construct(parse_kind(o.kind));
  VecQ lam = lambda_from_pairing(rs, o.lambda);
  GalleryType t = gallery_type(rs, minimal_gallery(rs, lam));
  std::vector<std::string> lines;
  enumerate_positively_folded(rs, t,
                              [&](const Gallery& g) { lines.push_back(gallery_line(rs, g)); });
  std::sort(lines.begin(), lines.end());
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
  }
  std::cerr << lines.size() << " galleries\n";
  return 0;
}

int cmd_render(const CommonOpts& o, const std::string& out_path) {
  if (o.kind.empty() || !o.lambda_set)
    throw std::invalid_argument("render needs --kind and --lambda");
  RootSystem rs = construct(parse_kind(o.kind));
  VecQ lam = lambda_from_pairing(rs, o.lambda);
  render_svg(rs, lam, out_path);
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positively folded galleries and dual convexity in affine Coxeter complexes"};
  app.require_subcommand(1);

  CommonOpts vo, oo, dn, rn;
  bool all_types = false;
  std::string ce_spec, dump_out, render_out = "weylfold.svg";

  CLI::App* verify = app.add_subcommand(
      "verify", "check folded-gallery endpoints against the dual-convexity target set");
  add_common(verify, vo, true);
  verify->add_flag("--all-minimal-types", all_types,
                   "repeat for every BFS-distinct minimal gallery type");
  verify->add_option("--check-counterexample", ce_spec,
                     "extra vertex in simple-root coordinates, e.g. 4,2-in-alpha");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "cross-check the weight-multiplicity support and dimension oracles");
  add_common(oracle, oo, true);

  CLI::App* dump = app.add_subcommand("dump-galleries", "write the sorted gallery list");
  add_common(dump, dn, false);
  dump->add_option("--out", dump_out, "output path (default: stdout)");

  CLI::App* render = app.add_subcommand("render", "draw a rank-2 figure as SVG");
  add_common(render, rn, false);
  render->add_option("--out", render_out, "output SVG path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(vo, all_types, ce_spec);
    if (oracle->parsed()) return cmd_oracle(oo);
    if (dump->parsed()) return cmd_dump(dn, dump_out);
    if (render->parsed()) return cmd_render(rn, render_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
