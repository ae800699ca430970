#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyckflaws/integer.hpp"
#include "dyckflaws/path.hpp"
#include "dyckflaws/polynomial.hpp"

namespace dyck {

enum class StatKind { Peak, Valley, DoubleAscent, DoubleDescent };

inline constexpr std::array<StatKind, 4> kAllStats = {StatKind::Peak, StatKind::Valley,
                                                      StatKind::DoubleAscent,
                                                      StatKind::DoubleDescent};

std::string_view stat_name(StatKind s);
/// Accepts "peak", "valley", "double_ascent", "double_descent".
std::optional<StatKind> parse_stat(std::string_view name);
int stat_value(const StatVector& v, StatKind s);

/// Calls visit(steps) for every path of semilength n (restricted to the
/// given flaw count, if any) in lexicographic order with D < U. The span is
/// only valid for the duration of the call.
void for_each_path(int n, std::optional<int> flaws,
                   const std::function<void(std::span<const Step>)>& visit);

std::vector<Path> enumerate_paths(int n, std::optional<int> flaws = std::nullopt);

/// Brute-force distribution of one statistic: entry(m, k) is the number of
/// paths of semilength n with m flaws and statistic value k.
class CountTable {
 public:
  CountTable(int n, StatKind stat);

  int semilength() const noexcept { return n_; }
  StatKind stat() const noexcept { return stat_; }
  const Integer& entry(int m, int k) const;
  void add(int m, int k, const Integer& count);

  /// Sum over k of row m.
  Integer row_sum(int m) const;
  Integer total() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  int n_;
  StatKind stat_;
  // rows_[m][k], m and k both in 0..n
  std::vector<std::vector<Integer>> rows_;
};

/// All four tables from one pass over the 2n-step words. threads > 1
/// partitions the work on word prefixes; the result does not depend on it.
std::array<CountTable, 4> count_tables(int n, unsigned threads = 1);
CountTable count_table(int n, StatKind stat, unsigned threads = 1);

/// Polynomial sum_k entry(m, k) x^k. Throws std::domain_error if m > n.
IntPolynomial table_polynomial(const CountTable& table, int m);
IntPolynomial table_polynomial(int n, int m, StatKind stat);

}  // namespace dyck
