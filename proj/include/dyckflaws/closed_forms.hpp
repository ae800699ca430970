#pragma once

#include <vector>

#include "dyckflaws/integer.hpp"
#include "dyckflaws/polynomial.hpp"

namespace dyck {

Integer catalan(int n);

/// Catalan paths of semilength n with k peaks; 0 outside 1 <= k <= n.
Integer narayana_peak(int n, int k);

/// Catalan paths of semilength n with k double ascents; 0 outside 0 <= k <= n-1.
Integer narayana_ascent(int n, int k);

/// Paths of semilength n >= 2 with exactly one flaw and k peaks.
/// 0 outside 1 <= k <= n-1.
Integer one_flaw_peak(int n, int k);

/// p(n,m,k) + p(n,m,n-k), which does not depend on m for 1 <= m <= n-1.
/// Requires n >= 2 and 1 <= k <= n/2, otherwise std::domain_error.
Integer peak_pair_sum(int n, int k);

/// Peak count k = n at semilength 2n for any flaw count 1..2n-1.
Integer central_peak(int n);

/// b_n(x): valley polynomial of Catalan paths, also P_{n,n}(x).
IntPolynomial valley_base_poly(int n);

/// P_{n,m}(x) from the flaw recurrence alone (no enumeration).
IntPolynomial recurrence_peak_poly(int n, int m);

/// Triangle P_{n,m}(x) for 0 <= m <= n <= n_max, indexed [n][m].
std::vector<std::vector<IntPolynomial>> recurrence_peak_table(int n_max);

/// Same triangle through the alternative index form
/// P_{m+r,m} = x sum_i sum_{j<r} P_{m-i,m-i} P_{r-j-1,r-j-1} P_{j+i,i}.
std::vector<std::vector<IntPolynomial>> recurrence_peak_table_shifted(int n_max);

}  // namespace dyck
