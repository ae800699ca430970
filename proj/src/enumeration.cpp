#include "dyckflaws/enumeration.hpp"

#include <stdexcept>
#include <thread>

namespace dyck {

std::string_view stat_name(StatKind s) {
  switch (s) {
    case StatKind::Peak:
      return "peak";
    case StatKind::Valley:
      return "valley";
    case StatKind::DoubleAscent:
      return "double_ascent";
    case StatKind::DoubleDescent:
      return "double_descent";
  }
  return "?";
}

std::optional<StatKind> parse_stat(std::string_view name) {
  for (StatKind s : kAllStats) {
    if (stat_name(s) == name) return s;
  }
  return std::nullopt;
}

int stat_value(const StatVector& v, StatKind s) {
  switch (s) {
    case StatKind::Peak:
      return v.peaks;
    case StatKind::Valley:
      return v.valleys;
    case StatKind::DoubleAscent:
      return v.double_ascents;
    case StatKind::DoubleDescent:
      return v.double_descents;
  }
  return 0;
}

namespace {

// Depth-first word generator. Only the U/D budgets and the flaw budget
// prune; height never does, so flawed paths are all reached.
class Walker {
 public:
  using Visit = std::function<void(std::span<const Step>)>;

  Walker(int n, std::optional<int> flaws, const Visit& visit)
      : n_(n), target_flaws_(flaws), visit_(visit), word_(2 * static_cast<std::size_t>(n)) {}

  // Walks all completions of the given prefix.
  void run(std::span<const Step> prefix) {
    int ups = 0, height = 0, flaws = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      word_[i] = prefix[i];
      if (prefix[i] == Step::Up) {
        if (height < 0) ++flaws;
        ++ups;
        ++height;
      } else {
        --height;
      }
    }
    const int downs = static_cast<int>(prefix.size()) - ups;
    if (ups > n_ || downs > n_) return;
    if (target_flaws_ && flaws > *target_flaws_) return;
    recurse(prefix.size(), n_ - ups, n_ - downs, height, flaws);
  }

 private:
  void recurse(std::size_t pos, int ups_left, int downs_left, int height, int flaws) {
    if (pos == word_.size()) {
      if (!target_flaws_ || flaws == *target_flaws_) visit_(word_);
      return;
    }
    if (downs_left > 0) {
      word_[pos] = Step::Down;
      recurse(pos + 1, ups_left, downs_left - 1, height - 1, flaws);
    }
    if (ups_left > 0) {
      const int f = flaws + (height < 0 ? 1 : 0);
      if (target_flaws_ && f > *target_flaws_) return;
      word_[pos] = Step::Up;
      recurse(pos + 1, ups_left - 1, downs_left, height + 1, f);
    }
  }

  int n_;
  std::optional<int> target_flaws_;
  const Visit& visit_;
  std::vector<Step> word_;
};

}  // namespace

void for_each_path(int n, std::optional<int> flaws,
                   const std::function<void(std::span<const Step>)>& visit) {
  if (n < 0) throw std::domain_error("semilength must be nonnegative");
  if (flaws && (*flaws < 0 || *flaws > n)) return;
  Walker(n, flaws, visit).run({});
}

std::vector<Path> enumerate_paths(int n, std::optional<int> flaws) {
  std::vector<Path> out;
  for_each_path(n, flaws, [&](std::span<const Step> w) {
    out.emplace_back(std::vector<Step>(w.begin(), w.end()));
  });
  return out;
}

CountTable::CountTable(int n, StatKind stat)
    : n_(n), stat_(stat), rows_(n + 1, std::vector<Integer>(n + 1, Integer(0))) {}

const Integer& CountTable::entry(int m, int k) const {
  static const Integer kZero = 0;
  if (m < 0 || m > n_ || k < 0 || k > n_) return kZero;
  return rows_[m][k];
}

void CountTable::add(int m, int k, const Integer& count) {
  if (m < 0 || m > n_ || k < 0 || k > n_) throw std::out_of_range("count table index");
  rows_[m][k] += count;
}

Integer CountTable::row_sum(int m) const {
  Integer s = 0;
  for (int k = 0; k <= n_; ++k) s += entry(m, k);
  return s;
}

Integer CountTable::total() const {
  Integer s = 0;
  for (int m = 0; m <= n_; ++m) s += row_sum(m);
  return s;
}

namespace {

// Native counters; an explicit enumeration can never overflow 64 bits.
struct RawCounts {
  explicit RawCounts(int n) : n(n), cells(4 * (n + 1) * (n + 1), 0) {}
  std::uint64_t& at(int stat, int m, int k) { return cells[(stat * (n + 1) + m) * (n + 1) + k]; }
  int n;
  std::vector<std::uint64_t> cells;
};

void tally(RawCounts& counts, std::span<const Step> w) {
  const StatVector s = stats(w);
  for (int i = 0; i < 4; ++i) ++counts.at(i, s.flaws, stat_value(s, kAllStats[i]));
}

}  // namespace

std::array<CountTable, 4> count_tables(int n, unsigned threads) {
  if (n < 0) throw std::domain_error("semilength must be nonnegative");
  RawCounts total(n);

  if (threads <= 1 || n < 4) {
    for_each_path(n, std::nullopt, [&](std::span<const Step> w) { tally(total, w); });
  } else {
    // Split on every 6-step prefix and deal prefixes round-robin.
    constexpr int kPrefix = 6;
    std::vector<std::vector<Step>> prefixes;
    for (int bits = 0; bits < (1 << kPrefix); ++bits) {
      std::vector<Step> p(kPrefix);
      for (int i = 0; i < kPrefix; ++i) p[i] = (bits >> (kPrefix - 1 - i)) & 1 ? Step::Up : Step::Down;
      prefixes.push_back(std::move(p));
    }
    std::vector<RawCounts> partial(threads, RawCounts(n));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        auto visit = [&](std::span<const Step> w) { tally(partial[t], w); };
        std::function<void(std::span<const Step>)> fn = visit;
        for (std::size_t i = t; i < prefixes.size(); i += threads) {
          Walker(n, std::nullopt, fn).run(prefixes[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) {
      for (std::size_t i = 0; i < total.cells.size(); ++i) total.cells[i] += p.cells[i];
    }
  }

  std::array<CountTable, 4> tables = {CountTable(n, StatKind::Peak), CountTable(n, StatKind::Valley),
                                      CountTable(n, StatKind::DoubleAscent),
                                      CountTable(n, StatKind::DoubleDescent)};
  for (int i = 0; i < 4; ++i) {
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) {
        if (auto c = total.at(i, m, k)) tables[i].add(m, k, Integer(c));
      }
    }
  }
  return tables;
}

CountTable count_table(int n, StatKind stat, unsigned threads) {
  auto all = count_tables(n, threads);
  return std::move(all[static_cast<int>(stat)]);
}

IntPolynomial table_polynomial(const CountTable& table, int m) {
  if (m < 0 || m > table.semilength()) {
    throw std::domain_error("flaw count " + std::to_string(m) + " outside 0.." +
                            std::to_string(table.semilength()));
  }
  std::vector<Integer> coeffs(table.semilength() + 1);
  for (int k = 0; k <= table.semilength(); ++k) coeffs[k] = table.entry(m, k);
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial table_polynomial(int n, int m, StatKind stat) {
  if (m < 0 || m > n) {
    throw std::domain_error("flaw count " + std::to_string(m) + " outside 0.." + std::to_string(n));
  }
  return table_polynomial(count_table(n, stat), m);
}

}  // namespace dyck
