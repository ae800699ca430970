#pragma once

// Test-only reference computations that share no code with the library:
// paths are bitmasks (bit i set = step i is up), binomials come from Pascal's
// triangle, statistics are read off the height sequence.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

struct Stats {
  int m = 0, peaks = 0, valleys = 0, da = 0, dd = 0;
};

inline bool up(std::uint32_t mask, int i) { return (mask >> i) & 1u; }

inline Stats stats_of(std::uint32_t mask, int n) {
  Stats s;
  std::vector<int> h(2 * n + 1, 0);
  for (int i = 0; i < 2 * n; ++i) h[i + 1] = h[i] + (up(mask, i) ? 1 : -1);
  for (int i = 0; i < 2 * n; ++i) {
    if (h[i + 1] > h[i] && h[i + 1] <= 0) ++s.m;  // up step ending at or below the axis
  }
  for (int i = 1; i < 2 * n; ++i) {
    const int before = h[i] - h[i - 1], after = h[i + 1] - h[i];
    if (before > 0 && after < 0) ++s.peaks;
    if (before < 0 && after > 0) ++s.valleys;
    if (before > 0 && after > 0) ++s.da;
    if (before < 0 && after < 0) ++s.dd;
  }
  return s;
}

inline std::string word_of(std::uint32_t mask, int n) {
  std::string w;
  for (int i = 0; i < 2 * n; ++i) w.push_back(up(mask, i) ? 'U' : 'D');
  return w;
}

/// All balanced masks of 2n bits.
inline std::vector<std::uint32_t> balanced_masks(int n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
    if (__builtin_popcount(mask) == n) out.push_back(mask);
  }
  return out;
}

/// counts[stat][m][k] with stat order peak, valley, double ascent, double descent.
using Counts = std::array<std::vector<std::vector<long long>>, 4>;

inline Counts counts(int n) {
  Counts c;
  for (auto& t : c) t.assign(n + 1, std::vector<long long>(n + 1, 0));
  for (auto mask : balanced_masks(n)) {
    const Stats s = stats_of(mask, n);
    ++c[0][s.m][s.peaks];
    ++c[1][s.m][s.valleys];
    ++c[2][s.m][s.da];
    ++c[3][s.m][s.dd];
  }
  return c;
}

inline long long pascal(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  static std::vector<std::vector<long long>> rows;
  while (static_cast<int>(rows.size()) <= n) {
    const int r = static_cast<int>(rows.size());
    std::vector<long long> row(r + 1, 1);
    for (int j = 1; j < r; ++j) row[j] = rows[r - 1][j - 1] + rows[r - 1][j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

}  // namespace oracle
