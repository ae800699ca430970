#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& v) { return v.str(); }

/// Exact binomial coefficient; zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Divides num by den and throws std::logic_error if the division is not exact.
Integer exact_div(const Integer& num, const Integer& den);

}  // namespace dyck
