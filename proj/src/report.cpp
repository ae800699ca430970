#include "dyckflaws/report.hpp"

#include <sstream>

namespace dyck {

namespace {

Json row_json(const CountTable& table, int m) {
  Json row = Json::object();
  for (int k = 0; k <= table.semilength(); ++k) {
    const Integer& c = table.entry(m, k);
    if (c != 0) row[std::to_string(k)] = to_decimal(c);
  }
  return row;
}

Json table_json(const CountTable& table, int m_first, int m_last) {
  Json rows = Json::object();
  for (int m = m_first; m <= m_last; ++m) rows[std::to_string(m)] = row_json(table, m);
  return Json{{"n", table.semilength()}, {"stat", stat_name(table.stat())}, {"rows", rows}};
}

void csv_rows(std::ostringstream& os, const CountTable& table, int m) {
  for (int k = 0; k <= table.semilength(); ++k) {
    const Integer& c = table.entry(m, k);
    if (c != 0) os << m << ',' << k << ',' << c << '\n';
  }
}

void check_row(const CountTable& table, int m) {
  if (m < 0 || m > table.semilength()) {
    throw std::domain_error("flaw count " + std::to_string(m) + " outside 0.." +
                            std::to_string(table.semilength()));
  }
}

}  // namespace

Json count_table_json(const CountTable& table) { return table_json(table, 0, table.semilength()); }

Json count_table_json(const CountTable& table, int m) {
  check_row(table, m);
  return table_json(table, m, m);
}

std::string count_table_csv(const CountTable& table) {
  std::ostringstream os;
  os << "m,k,count\n";
  for (int m = 0; m <= table.semilength(); ++m) csv_rows(os, table, m);
  return os.str();
}

std::string count_table_csv(const CountTable& table, int m) {
  check_row(table, m);
  std::ostringstream os;
  os << "m,k,count\n";
  csv_rows(os, table, m);
  return os.str();
}

Json stat_vector_json(const StatVector& s) {
  return Json{{"n", s.semilength},
              {"m", s.flaws},
              {"peaks", s.peaks},
              {"valleys", s.valleys},
              {"double_ascents", s.double_ascents},
              {"double_descents", s.double_descents}};
}

Json identity_report_json(const std::vector<IdentityResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json failure = nullptr;
    if (r.first_failure) {
      const auto& f = *r.first_failure;
      failure = Json{{"n", f.n},
                     {"xexp", f.xexp},
                     {"yexp", f.yexp},
                     {"expected", to_decimal(f.expected)},
                     {"got", to_decimal(f.got)}};
    }
    out.push_back(Json{{"identity", r.id},
                       {"status", r.pass ? "pass" : "fail"},
                       {"first_failure", failure}});
  }
  return out;
}

Json series_json(const TruncSeries& s) {
  Json out = Json::array();
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [e, c] : s[n].terms()) {
      out.push_back(Json{{"n", n}, {"xexp", e.first}, {"yexp", e.second}, {"coeff", to_decimal(c)}});
    }
  }
  return out;
}

}  // namespace dyck
