#include "weylfold/report_json.hpp"

#include <json.hpp>

namespace weylfold {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_value(const Rat& r) {
  if (r.is_integer()) return r.num();
  return r.to_string();
}

ordered_json vec_value(const VecQ& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rat_value(v[i]));
  return a;
}

ordered_json verification_value(const VerificationReport& r, bool include_wall_clock) {
  ordered_json j;
  j["kind"] = r.kind.name();
  j["lambda"] = vec_value(r.lambda);
  j["type_length"] = r.type_length;
  j["endpoint_set_size"] = r.endpoint_set_size;
  j["a_type_set_size"] = r.a_type_set_size;
  j["verdict"] = r.match ? "match" : "mismatch";
  ordered_json w = ordered_json::array();
  for (const VecQ& v : r.mismatch_witnesses) w.push_back(vec_value(v));
  j["mismatch_witnesses"] = w;
  if (r.minimal_types) {
    j["minimal_types"] = {{"types_found", r.minimal_types->types_found},
                          {"endpoint_sets_equal", r.minimal_types->endpoint_sets_equal}};
  }
  if (r.counterexample) {
    const CounterexampleReport& c = *r.counterexample;
    j["counterexample"] = {{"y", vec_value(c.y)},
                           {"wconv_membership", c.wconv},
                           {"in_a_type_set", c.in_a_type_set},
                           {"delta_x", c.delta_x},
                           {"delta_y", c.delta_y}};
  }
  if (include_wall_clock) j["wall_clock_ms"] = r.wall_clock_ms;
  return j;
}

ordered_json oracle_value(const OracleReport& r, bool include_wall_clock) {
  ordered_json j;
  j["kind"] = r.kind.name();
  j["lambda"] = vec_value(r.lambda);
  j["support_ok"] = r.support_ok;
  j["dimension_ok"] = r.dimension_ok;
  j["dimension"] = r.dimension;
  j["table_size"] = r.table_size;
  if (include_wall_clock) j["wall_clock_ms"] = r.wall_clock_ms;
  return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool include_wall_clock) {
  ordered_json arr = ordered_json::array();
  for (const VerificationReport& r : reports) arr.push_back(verification_value(r, include_wall_clock));
  return arr.dump(2) + "\n";
}

std::string oracle_reports_to_json(const std::vector<OracleReport>& reports,
                                   bool include_wall_clock) {
  ordered_json arr = ordered_json::array();
  for (const OracleReport& r : reports) arr.push_back(oracle_value(r, include_wall_clock));
  return arr.dump(2) + "\n";
}

}  // namespace weylfold
