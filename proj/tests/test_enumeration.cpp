#include <doctest.h>

#include <algorithm>

#include "dyckflaws/closed_forms.hpp"
#include "dyckflaws/enumeration.hpp"
#include "oracle.hpp"

using namespace dyck;

namespace {

std::vector<std::string> words(const std::vector<Path>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render_path(p));
  return out;
}

}  // namespace

TEST_CASE("enumerate_paths examples") {
  CHECK(enumerate_paths(2).size() == 6);
  CHECK(words(enumerate_paths(2, 1)) == std::vector<std::string>{"DUUD", "UDDU"});
  CHECK(words(enumerate_paths(0)) == std::vector<std::string>{""});
  CHECK(enumerate_paths(3, 4).empty());
  CHECK(words(enumerate_paths(2)) ==
        std::vector<std::string>{"DDUU", "DUDU", "DUUD", "UDDU", "UDUD", "UUDD"});
}

TEST_CASE("enumeration is lexicographic, complete and flaw-filtered") {
  for (int n = 0; n <= 7; ++n) {
    const auto all = words(enumerate_paths(n));
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
      // 'D' < 'U' already in ASCII
      return a < b;
    }));
    CHECK(all.size() == static_cast<std::size_t>(oracle::pascal(2 * n, n)));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (int m = 0; m <= n; ++m) {
      const auto with_m = enumerate_paths(n, m);
      CHECK(with_m.size() == static_cast<std::size_t>(oracle::pascal(2 * n, n) / (n + 1)));
      for (const auto& p : with_m) CHECK(stats(p).flaws == m);
    }
  }
}

TEST_CASE("count_table examples") {
  const CountTable p4 = count_table(4, StatKind::Peak);
  CHECK(p4.entry(2, 0) == 0);
  CHECK(p4.entry(2, 1) == 3);
  CHECK(p4.entry(2, 2) == 8);
  CHECK(p4.entry(2, 3) == 3);
  CHECK(p4.entry(2, 4) == 0);

  CHECK(table_polynomial(6, 3, StatKind::Peak) == IntPolynomial{0, 4, 32, 60, 32, 4});

  const CountTable a3 = count_table(3, StatKind::DoubleAscent);
  for (int m = 0; m <= 3; ++m) {
    CHECK(table_polynomial(a3, m) == IntPolynomial{1, 3, 1});
  }
}

TEST_CASE("table_polynomial examples and domain") {
  CHECK(table_polynomial(5, 2, StatKind::Peak).to_string() == "4x^4+18x^3+17x^2+3x");
  CHECK(table_polynomial(1, 1, StatKind::Peak).to_string() == "1");
  CHECK(table_polynomial(5, 3, StatKind::Valley) == table_polynomial(5, 2, StatKind::Peak));
  CHECK_THROWS_AS(table_polynomial(3, 4, StatKind::Peak), std::domain_error);
}

TEST_CASE("count tables match the bitmask oracle for n <= 9") {
  for (int n = 0; n <= 9; ++n) {
    const auto tables = count_tables(n);
    const oracle::Counts want = oracle::counts(n);
    for (int s = 0; s < 4; ++s) {
      CHECK(tables[s].stat() == kAllStats[s]);
      for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= n; ++k) CHECK(tables[s].entry(m, k) == want[s][m][k]);
      }
    }
  }
}

TEST_CASE("threaded counting gives identical tables") {
  for (int n : {4, 7, 9}) {
    const auto serial = count_tables(n, 1);
    for (unsigned threads : {2u, 3u, 8u}) CHECK(count_tables(n, threads) == serial);
  }
}

TEST_CASE("table invariants for n <= 10") {
  for (int n = 0; n <= 10; ++n) {
    const auto t = count_tables(n);
    for (const auto& table : t) {
      CHECK(table.total() == binomial(2 * n, n));
      for (int m = 0; m <= n; ++m) CHECK(table.row_sum(m) == catalan(n));
    }
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) {
        CHECK(t[0].entry(m, k) == t[0].entry(n - m, n - k));  // reciprocity
        CHECK(t[1].entry(m, k) == t[0].entry(n - m, k));      // complement
        CHECK(t[3].entry(m, k) == t[2].entry(m, k));          // reverse complement
      }
    }
    if (n >= 1) {
      for (int k = 0; k < n; ++k) CHECK(t[1].entry(0, k) == t[0].entry(0, k + 1));
    }
  }
}

TEST_CASE("stat names") {
  for (StatKind s : kAllStats) CHECK(parse_stat(stat_name(s)) == s);
  CHECK_FALSE(parse_stat("peaks").has_value());
}
