#include <doctest.h>

#include "dyckflaws/closed_forms.hpp"
#include "dyckflaws/enumeration.hpp"
#include "oracle.hpp"

using namespace dyck;

TEST_CASE("binomial and exact division") {
  for (int n = 0; n <= 40; ++n) {
    for (int k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  }
  CHECK(exact_div(12, 4) == 3);
  CHECK_THROWS_AS(exact_div(7, 2), std::logic_error);
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(6) == 132);
  CHECK(catalan(40).str() == "2622127042276492108820");
  CHECK(catalan(3) == static_cast<long>(enumerate_paths(3, 0).size()));
}

TEST_CASE("narayana numbers") {
  CHECK(narayana_peak(4, 2) == 6);
  CHECK(narayana_peak(5, 3) == 20);
  CHECK(narayana_peak(4, 0) == 0);
  CHECK(narayana_peak(4, 5) == 0);
  CHECK(narayana_ascent(3, 1) == 3);
  CHECK(narayana_ascent(3, 0) == 1);
  CHECK(narayana_ascent(6, 2) == 50);
  CHECK(narayana_ascent(3, 3) == 0);
  for (int n = 1; n <= 25; ++n) {
    Integer a = 0, b = 0;
    for (int k = -1; k <= n + 1; ++k) {
      a += narayana_peak(n, k);
      b += narayana_ascent(n, k);
    }
    CHECK(a == catalan(n));
    CHECK(b == catalan(n));
  }
}

TEST_CASE("one_flaw_peak") {
  CHECK(one_flaw_peak(5, 2) == 15);
  CHECK(one_flaw_peak(6, 1) == 2);
  CHECK(one_flaw_peak(4, 3) == 4);  // row (4,1): 4x^3+8x^2+2x
  CHECK(one_flaw_peak(4, 1) == 2);
  CHECK(one_flaw_peak(4, 4) == 0);
  CHECK(one_flaw_peak(4, 0) == 0);
  CHECK_THROWS_AS(one_flaw_peak(1, 1), std::domain_error);
  // exact division is asserted inside; make sure it holds over a wide range
  for (int n = 2; n <= 60; ++n) {
    for (int k = 1; k < n; ++k) CHECK_NOTHROW(one_flaw_peak(n, k));
  }
}

TEST_CASE("peak_pair_sum") {
  CHECK(peak_pair_sum(5, 1) == 7);
  CHECK(peak_pair_sum(5, 2) == 35);
  // Rows (6,1) and (6,3): 24+40 and 32+32.
  CHECK(peak_pair_sum(6, 2) == 64);
  // k = n/2 counts the middle coefficient twice: 2*8 and 2*60.
  CHECK(peak_pair_sum(4, 2) == 16);
  CHECK(peak_pair_sum(6, 3) == 120);
  CHECK_THROWS_AS(peak_pair_sum(6, 0), std::domain_error);
  CHECK_THROWS_AS(peak_pair_sum(6, 4), std::domain_error);
  CHECK_THROWS_AS(peak_pair_sum(1, 1), std::domain_error);
}

TEST_CASE("central_peak") {
  CHECK(central_peak(1) == 2);
  CHECK(central_peak(2) == 8);
  CHECK(central_peak(3) == 60);
  for (int h = 1; h <= 30; ++h) CHECK(2 * central_peak(h) == peak_pair_sum(2 * h, h));
}

TEST_CASE("recurrence examples") {
  CHECK(recurrence_peak_poly(0, 0) == IntPolynomial{1});
  CHECK(recurrence_peak_poly(2, 2).to_string() == "x+1");
  CHECK(recurrence_peak_poly(4, 1).to_string() == "4x^3+8x^2+2x");
  CHECK(recurrence_peak_poly(6, 4).to_string() == "3x^5+29x^4+60x^3+35x^2+5x");
  CHECK_THROWS_AS(recurrence_peak_poly(3, 4), std::domain_error);
}

TEST_CASE("both recurrence index forms agree") {
  const auto a = recurrence_peak_table(14);
  const auto b = recurrence_peak_table_shifted(14);
  CHECK(a == b);
}

TEST_CASE("closed forms against the bitmask oracle, n <= 10") {
  const auto rec = recurrence_peak_table(10);
  for (int n = 1; n <= 10; ++n) {
    const oracle::Counts c = oracle::counts(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(narayana_peak(n, k) == c[0][0][k]);
      for (int m = 0; m <= n; ++m) CHECK(narayana_ascent(n, k) == c[2][m][k]);
      if (n >= 2) CHECK(one_flaw_peak(n, k) == c[0][1][k]);
    }
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) CHECK(rec[n][m].coefficient(k) == c[0][m][k]);
    }
    for (int k = 1; n >= 2 && k <= n / 2; ++k) {
      for (int m = 1; m <= n - 1; ++m) {
        CHECK(peak_pair_sum(n, k) == c[0][m][k] + c[0][m][n - k]);
        CHECK(peak_pair_sum(n, k) == c[0][m][k] + c[0][n - m][k]);
      }
    }
  }
}

TEST_CASE("valley base polynomials") {
  CHECK(valley_base_poly(0) == IntPolynomial{1});
  CHECK(valley_base_poly(1) == IntPolynomial{1});
  CHECK(valley_base_poly(3) == IntPolynomial{1, 3, 1});
  CHECK(valley_base_poly(5) == IntPolynomial{1, 10, 20, 10, 1});
}

TEST_CASE("polynomial printing and arithmetic") {
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{0, 1, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{1, -2, 1}.to_string() == "x^2-2x+1");
  CHECK(IntPolynomial{-1}.to_string() == "-1");
  CHECK((IntPolynomial{1, 1} * IntPolynomial{-1, 1}) == IntPolynomial{-1, 0, 1});
  CHECK(IntPolynomial{0, 1, 2}.evaluate(3) == 21);
}
