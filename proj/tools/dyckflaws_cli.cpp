// Command-line front end: count tables, bijections, verification suites and
// generating-function dumps. Reports go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dyckflaws/bijections.hpp"
#include "dyckflaws/enumeration.hpp"
#include "dyckflaws/generating_functions.hpp"
#include "dyckflaws/report.hpp"
#include "dyckflaws/verify.hpp"

namespace {

using dyck::Json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string out;
  bool timing = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "Also write the report to this file");
  cmd->add_flag("--timing", o.timing, "Include elapsed_ms in JSON reports");
}

unsigned thread_count() {
  const char* env = std::getenv("DYCKFLAWS_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  try {
    const int t = std::stoi(env);
    if (t >= 1) return static_cast<unsigned>(t);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("DYCKFLAWS_THREADS must be a positive integer, got '") + env + "'");
}

class Emitter {
 public:
  explicit Emitter(const OutputOptions& o) : opts_(o), start_(std::chrono::steady_clock::now()) {}

  void text(const std::string& s) const {
    std::cout << s;
    if (!opts_.out.empty()) std::ofstream(opts_.out) << s;
  }

  void report(const std::string& command, Json parameters, bool pass, Json payload,
              const char* ok_status = "ok") const {
    Json r = {{"command", command},
              {"parameters", std::move(parameters)},
              {"status", pass ? ok_status : "fail"},
              {"payload", std::move(payload)}};
    if (opts_.timing) {
      r["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    }
    text(r.dump(2) + "\n");
  }

 private:
  const OutputOptions& opts_;
  std::chrono::steady_clock::time_point start_;
};

dyck::Path parse_word_flag(const std::string& word) {
  try {
    return dyck::parse_path(word);
  } catch (const dyck::ParseError& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
}

int run_table(int n, std::optional<int> m, const std::string& stat_flag, const std::string& format,
              const OutputOptions& out) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  const auto stat = dyck::parse_stat(stat_flag);
  if (!stat) {
    throw UsageError("--stat: unknown statistic '" + stat_flag +
                     "' (expected peak, valley, double_ascent or double_descent)");
  }
  if (m && (*m < 0 || *m > n)) {
    throw UsageError("--m: flaw count " + std::to_string(*m) + " outside 0.." + std::to_string(n));
  }
  const Emitter emit(out);
  const dyck::CountTable table = dyck::count_table(n, *stat, thread_count());
  if (format == "csv") {
    emit.text(m ? dyck::count_table_csv(table, *m) : dyck::count_table_csv(table));
  } else if (format == "json") {
    Json params = {{"n", n}, {"stat", dyck::stat_name(*stat)}};
    params["m"] = m ? Json(*m) : Json(nullptr);
    emit.report("table", std::move(params), true,
                m ? dyck::count_table_json(table, *m) : dyck::count_table_json(table));
  } else {
    if (m) {
      emit.text(dyck::table_polynomial(table, *m).to_string() + "\n");
    } else {
      std::string s;
      for (int row = 0; row <= n; ++row) {
        s += "(" + std::to_string(n) + "," + std::to_string(row) + ") " +
             dyck::table_polynomial(table, row).to_string() + "\n";
      }
      emit.text(s);
    }
  }
  return kExitOk;
}

int run_biject(const std::string& map, const std::string& word, bool show_decomposition,
               const std::string& format, const OutputOptions& out) {
  const dyck::Path input = parse_word_flag(word);
  const dyck::StatVector before = dyck::stats(input);
  dyck::Path image;
  std::optional<dyck::CfDecomposition> decomposition;
  try {
    if (map == "phi") {
      image = dyck::complement(input);
    } else if (map == "psi") {
      image = dyck::reverse_complement(input);
    } else if (map == "cf") {
      decomposition = dyck::cf_decompose_forward(input);
      image = dyck::cf_step(input);
    } else {
      decomposition = dyck::cf_decompose_inverse(input);
      image = dyck::cf_step_inverse(input);
    }
  } catch (const std::domain_error& e) {
    throw UsageError("--map " + map + ": " + e.what());
  }
  const dyck::StatVector after = dyck::stats(image);
  const Emitter emit(out);
  if (format == "json") {
    Json payload = {{"input", dyck::render_path(input)},
                    {"image", dyck::render_path(image)},
                    {"before", dyck::stat_vector_json(before)},
                    {"after", dyck::stat_vector_json(after)}};
    if (show_decomposition && decomposition) payload["decomposition"] = decomposition->to_string();
    emit.report("biject", Json{{"map", map}, {"word", dyck::render_path(input)}}, true,
                std::move(payload));
  } else {
    std::string s = dyck::render_path(image) + "\n";
    s += "before: " + dyck::to_string(before) + "\n";
    s += "after:  " + dyck::to_string(after) + "\n";
    if (show_decomposition && decomposition) s += "S|R|U|Q|D|T: " + decomposition->to_string() + "\n";
    emit.text(s);
  }
  return kExitOk;
}

int run_verify(const std::string& suite, int n_max, int order, const OutputOptions& out) {
  const auto suites = dyck::parse_suites(suite);
  if (!suites) throw UsageError("--suite: unknown suite '" + suite + "'");
  if (n_max < 1) throw UsageError("--n-max must be at least 1");
  if (order < 0) throw UsageError("--order must be nonnegative");

  const Emitter emit(out);
  const auto reports = dyck::run_verification(*suites, {n_max, order, thread_count()});
  bool pass = true;
  Json payload = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    payload.push_back(dyck::suite_report_json(r));
    for (const auto& c : r.checks) {
      std::cerr << (c.pass ? "PASS " : "FAIL ") << dyck::suite_name(r.suite) << "/" << c.name
                << "\n";
    }
  }
  emit.report("verify", Json{{"suite", suite}, {"n_max", n_max}, {"order", order}}, pass,
              std::move(payload), "pass");
  return pass ? kExitOk : kExitFail;
}

int run_series(const std::string& name, int order, const std::string& format,
               const OutputOptions& out) {
  if (order < 0) throw UsageError("--order must be nonnegative");
  const auto s = dyck::named_series(name, order);
  if (!s) throw UsageError("--name: unknown generating function '" + name + "'");
  const Emitter emit(out);
  if (format == "json") {
    emit.report("series", Json{{"name", name}, {"order", order}}, true, dyck::series_json(*s));
  } else {
    std::string text;
    for (int n = 0; n <= order; ++n) {
      text += "z^" + std::to_string(n) + ": " + (*s)[n].to_string() + "\n";
    }
    emit.text(text);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck paths with flaws: refined counts, bijections and identity checks"};
  app.require_subcommand(1);

  OutputOptions table_out, biject_out, verify_out, series_out;

  auto* table = app.add_subcommand("table", "Count paths by flaws and a statistic");
  int table_n = 0;
  std::optional<int> table_m;
  std::string table_stat = "peak", table_format = "pretty";
  table->add_option("--n", table_n, "Semilength")->required();
  table->add_option("--m", table_m, "Restrict to this number of flaws");
  table->add_option("--stat", table_stat, "peak | valley | double_ascent | double_descent");
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv", "pretty"}));
  add_output_options(table, table_out);

  auto* biject = app.add_subcommand("biject", "Apply a path bijection");
  std::string biject_map, biject_word, biject_format = "pretty";
  bool show_decomposition = false;
  biject->add_option("--map", biject_map)->required()->check(
      CLI::IsMember({"phi", "psi", "cf", "cf_inv"}));
  biject->add_option("--word", biject_word, "Path as a U/D word")->required();
  biject->add_flag("--show-decomposition", show_decomposition, "Print S|R|U|Q|D|T");
  biject->add_option("--format", biject_format)->check(CLI::IsMember({"json", "pretty"}));
  add_output_options(biject, biject_out);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string verify_suite = "all";
  int n_max = 10, verify_order = 8;
  verify->add_option("--suite", verify_suite, "oracle | formulas | bijections | series | all");
  verify->add_option("--n-max", n_max, "Largest semilength for exhaustive checks");
  verify->add_option("--order", verify_order, "Series truncation order");
  add_output_options(verify, verify_out);

  auto* series = app.add_subcommand("series", "Dump coefficients of a generating function");
  std::string series_name, series_format = "pretty";
  int series_order = 8;
  series->add_option("--name", series_name, "P0 | V0 | A0 | P | A | f | alpha | R")->required();
  series->add_option("--order", series_order, "Truncation order");
  series->add_option("--format", series_format)->check(CLI::IsMember({"json", "pretty"}));
  add_output_options(series, series_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return run_table(table_n, table_m, table_stat, table_format, table_out);
    if (*biject) {
      return run_biject(biject_map, biject_word, show_decomposition, biject_format, biject_out);
    }
    if (*verify) return run_verify(verify_suite, n_max, verify_order, verify_out);
    if (*series) return run_series(series_name, series_order, series_format, series_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
