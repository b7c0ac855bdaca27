#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "doublet/cyclotomic.hpp"

namespace doublet {

using Json = nlohmann::ordered_json;

// {"conductor": N, "coeffs": ["p/q", ...]} plus "display" when the value
// lies in Q or Q(zeta_3).
Json cyclotomic_json(const Cyclotomic& c);

Json make_document(const std::string& command, Json payload);

// Nonnegative-integer invariant matrix rendered in partition-function form,
// e.g. "|x0+x3+x6|^2" or "(x1+x3)x6^*+x6(x1+x3)^*"; falls back to a plain
// sum of x_i x_j^* terms if no rank-one peeling exists.
std::string partition_function_string(const std::vector<std::vector<long long>>& m);

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

}  // namespace doublet
