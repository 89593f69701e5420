#pragma once

#include <string>
#include <vector>

#include "weylfold/verify.hpp"

namespace weylfold {

// Reports as a JSON array, stable key order, 2-space indent, trailing
// newline. Integer values are JSON numbers; non-integer rationals are "p/q"
// strings. include_wall_clock=false drops the timing field (golden tests).
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            bool include_wall_clock = true);
std::string oracle_reports_to_json(const std::vector<OracleReport>& reports,
                                   bool include_wall_clock = true);

}  // namespace weylfold
