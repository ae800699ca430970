#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyckflaws/report.hpp"

namespace dyck {

enum class Suite { Oracle, Formulas, Bijections, Series };

std::string_view suite_name(Suite s);
/// "all" expands to every suite.
std::optional<std::vector<Suite>> parse_suites(std::string_view name);

struct Check {
  std::string name;
  bool pass = true;
  Json detail = Json::object();
};

struct SuiteReport {
  Suite suite;
  std::vector<Check> checks;
  bool pass() const;
};

struct VerifyOptions {
  int n_max = 10;
  int order = 8;
  unsigned threads = 1;
};

/// Runs the suites in the given order. With threads > 1 the suites run
/// concurrently; the returned reports keep the requested order.
std::vector<SuiteReport> run_verification(std::span<const Suite> suites,
                                          const VerifyOptions& options);

Json suite_report_json(const SuiteReport& r);

}  // namespace dyck
