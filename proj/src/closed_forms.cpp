#include "dyckflaws/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace dyck {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

Integer catalan(int n) {
  require(n >= 0, "catalan: n must be nonnegative");
  return exact_div(binomial(2 * n, n), n + 1);
}

Integer narayana_peak(int n, int k) {
  require(n >= 1, "narayana_peak: n must be positive");
  if (k < 1 || k > n) return 0;
  return exact_div(binomial(n - 1, k - 1) * binomial(n, k - 1), k);
}

Integer narayana_ascent(int n, int k) {
  require(n >= 1, "narayana_ascent: n must be positive");
  if (k < 0 || k > n - 1) return 0;
  return exact_div(binomial(n - 1, k) * binomial(n, k), k + 1);
}

Integer one_flaw_peak(int n, int k) {
  require(n >= 2, "one_flaw_peak: n must be at least 2");
  if (k < 1 || k > n - 1) return 0;
  return exact_div(Integer(2 * (n - k)) * binomial(n, k - 1) * binomial(n, k),
                   Integer(n) * (n - 1));
}

Integer peak_pair_sum(int n, int k) {
  require(n >= 2, "peak_pair_sum: n must be at least 2");
  require(k >= 1 && k <= n / 2,
          "peak_pair_sum: k=" + std::to_string(k) + " outside 1.." + std::to_string(n / 2));
  return exact_div(Integer(2 * (n + 2)) * binomial(n, k - 1) * binomial(n, k + 1),
                   Integer(n) * (n - 1));
}

Integer central_peak(int n) {
  require(n >= 1, "central_peak: n must be positive");
  return exact_div(binomial(2 * n, n - 1) * binomial(2 * n, n), 2 * n - 1);
}

IntPolynomial valley_base_poly(int n) {
  require(n >= 0, "valley_base_poly: n must be nonnegative");
  if (n == 0) return IntPolynomial{1};
  std::vector<Integer> c(n);
  for (int k = 1; k <= n; ++k) c[k - 1] = narayana_peak(n, k);
  return IntPolynomial(std::move(c));
}

std::vector<std::vector<IntPolynomial>> recurrence_peak_table(int n_max) {
  require(n_max >= 0, "recurrence_peak_table: n_max must be nonnegative");
  std::vector<IntPolynomial> b(n_max + 1);
  for (int r = 0; r <= n_max; ++r) b[r] = valley_base_poly(r);

  const IntPolynomial x = IntPolynomial::monomial(1, 1);
  std::vector<std::vector<IntPolynomial>> t(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    t[n].resize(n + 1);
    t[n][n] = b[n];
    for (int m = 0; m < n; ++m) {
      IntPolynomial acc;
      for (int i = 0; i <= m; ++i) {
        for (int j = i; j <= n - m + i - 1; ++j) acc += b[m - i] * b[n - m + i - j - 1] * t[j][i];
      }
      t[n][m] = acc * x;
    }
  }
  return t;
}

std::vector<std::vector<IntPolynomial>> recurrence_peak_table_shifted(int n_max) {
  require(n_max >= 0, "recurrence_peak_table_shifted: n_max must be nonnegative");
  const IntPolynomial x = IntPolynomial::monomial(1, 1);
  std::vector<std::vector<IntPolynomial>> t(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    t[n].resize(n + 1);
    t[n][n] = valley_base_poly(n);
    for (int m = 0; m < n; ++m) {
      const int r = n - m;
      IntPolynomial acc;
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= r - 1; ++j) {
          acc += t[m - i][m - i] * t[r - j - 1][r - j - 1] * t[j + i][i];
        }
      }
      t[n][m] = acc * x;
    }
  }
  return t;
}

IntPolynomial recurrence_peak_poly(int n, int m) {
  require(n >= 0 && m >= 0 && m <= n,
          "recurrence_peak_poly: need 0 <= m <= n, got n=" + std::to_string(n) +
              " m=" + std::to_string(m));
  return recurrence_peak_table(n)[n][m];
}

}  // namespace dyck
