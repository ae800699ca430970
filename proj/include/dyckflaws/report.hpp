#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dyckflaws/enumeration.hpp"
#include "dyckflaws/generating_functions.hpp"
#include "dyckflaws/path.hpp"

namespace dyck {

using Json = nlohmann::ordered_json;

/// {"n": .., "stat": .., "rows": {"<m>": {"<k>": "<count>"}}}; keys in
/// numeric order, zero counts omitted, counts as decimal strings.
Json count_table_json(const CountTable& table);
/// Same, restricted to a single flaw count.
Json count_table_json(const CountTable& table, int m);

/// "m,k,count" header followed by one line per nonzero entry.
std::string count_table_csv(const CountTable& table);
std::string count_table_csv(const CountTable& table, int m);

Json stat_vector_json(const StatVector& s);

/// [{"identity", "status", "first_failure"}...]
Json identity_report_json(const std::vector<IdentityResult>& results);

/// [{"n", "xexp", "yexp", "coeff"}...] over nonzero coefficients.
Json series_json(const TruncSeries& s);

}  // namespace dyck
