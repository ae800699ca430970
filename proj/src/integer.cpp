#include "dyckflaws/integer.hpp"

#include <stdexcept>

namespace dyck {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  // After step i the running value is C(n-k+i, i), so each division is exact.
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer exact_div(const Integer& num, const Integer& den) {
  if (den == 0) throw std::logic_error("exact_div: division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error("exact_div: " + num.str() + " is not divisible by " + den.str());
  }
  return q;
}

}  // namespace dyck
