#pragma once

#include <string>

#include "gentle/json_io.hpp"

namespace gentle {

// Report JSON, schema "gentle-silt/report@1". Key order and contents are deterministic.
Json report_to_json(const VerificationReport& r);

// Aligned text table of forms, gl.dim and component shapes; validates the report first.
std::string classify_table(const Json& report);

std::string quiver_dot(const Presentation& p, const std::string& name);
// Nodes are pair indices, edges mutations.
std::string exchange_dot(const Json& report);
// Endomorphism quiver of object k of a report.
std::string endo_dot(const Json& report, int k);

}  // namespace gentle
