#include "dyckflaws/generating_functions.hpp"

namespace dyck {

namespace {

const LaurentPoly2 kX = LaurentPoly2::x();
const LaurentPoly2 kY = LaurentPoly2::y();
const LaurentPoly2 kOne = 1;

// P(x, 1/y, yz): the z^n x^k y^m coefficient moves to y^(n-m).
TruncSeries reflect_flaws(const TruncSeries& s) {
  return s.remap_exponents([](int n, int xe, int ye) { return Exponent2{xe, n - ye}; });
}

// Coefficient of y^m as a series in x and z.
TruncSeries y_slice(const TruncSeries& s, int m) {
  TruncSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [e, c] : s[n].terms()) {
      if (e.second == m) out[n].add_term(e.first, 0, c);
    }
  }
  return out;
}

}  // namespace

// Each pass of the fixed-point maps below fixes one more z-coefficient,
// since every right-hand side is 1 plus a multiple of z.

TruncSeries solve_P0(int order) {
  TruncSeries p = TruncSeries::constant(order, 1);
  for (int it = 0; it <= order; ++it) {
    p = shift_z(p * (p + (kX - kOne)), 1) + kOne;
  }
  return p;
}

TruncSeries solve_V0(int order) {
  TruncSeries v = TruncSeries::constant(order, 1);
  const TruncSeries z = TruncSeries::z(order);
  for (int it = 0; it <= order; ++it) {
    v = shift_z((v - kOne) * (kX * v + kOne), 1) + z + kOne;
  }
  return v;
}

TruncSeries solve_A0(int order) {
  TruncSeries a = TruncSeries::constant(order, 1);
  for (int it = 0; it <= order; ++it) {
    const TruncSeries denom = TruncSeries::constant(order, 1) - shift_z(kX * a, 1);
    a = shift_z(a * series_invert(denom), 1) + kOne;
  }
  return a;
}

TruncSeries radicand_f(int order) {
  TruncSeries f(order);
  f[0] = 1;
  if (order >= 1) f[1] = LaurentPoly2(-2) * (kOne + kX);
  if (order >= 2) f[2] = (kOne - kX) * (kOne - kX);
  return f;
}

TruncSeries build_P(int order) {
  const TruncSeries p0 = solve_P0(order);
  const TruncSeries v0y = substitute_yz(solve_V0(order));
  const TruncSeries denom =
      TruncSeries::constant(order, 1) - shift_z((p0 + (kX - kOne)) * v0y, 1);
  return v0y * series_invert(denom);
}

TruncSeries build_A(int order) {
  const TruncSeries a0 = solve_A0(order);
  const TruncSeries a0y = substitute_yz(a0);
  const TruncSeries denom =
      TruncSeries::constant(order, 1) - kX * ((a0 - kOne) * (a0y - kOne));
  return a0 * a0y * series_invert(denom);
}

TruncSeries build_alpha(const TruncSeries& P0, const TruncSeries& V0) {
  const int order = std::min(P0.order(), V0.order());
  const LaurentPoly2 inv_x = LaurentPoly2::x(-1);
  TruncSeries prefactor(order);
  prefactor[0] = (kOne + kX) * inv_x;
  if (order >= 1) prefactor[1] = -((kOne - kX) * inv_x);
  return prefactor * P0 - P0 * series_invert(V0) - inv_x;
}

TruncSeries build_R(const TruncSeries& P, const TruncSeries& P0, const TruncSeries& V0) {
  return P + reflect_flaws(P) + LaurentPoly2(2) - V0 - substitute_yz(V0) - P0 -
         substitute_yz(P0);
}

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {"P0", "V0", "A0", "P", "A", "f", "alpha", "R"};
  return names;
}

std::optional<TruncSeries> named_series(std::string_view name, int order) {
  if (name == "P0") return solve_P0(order);
  if (name == "V0") return solve_V0(order);
  if (name == "A0") return solve_A0(order);
  if (name == "P") return build_P(order);
  if (name == "A") return build_A(order);
  if (name == "f") return radicand_f(order);
  if (name == "alpha") return build_alpha(solve_P0(order), solve_V0(order));
  if (name == "R") return build_R(build_P(order), solve_P0(order), solve_V0(order));
  return std::nullopt;
}

IdentityInputs build_identity_inputs(int order) {
  IdentityInputs in;
  in.order = order;
  in.P0 = solve_P0(order);
  in.V0 = solve_V0(order);
  in.A0 = solve_A0(order);
  in.P = build_P(order);
  in.A = build_A(order);
  return in;
}

std::optional<CoefficientMismatch> first_mismatch(const TruncSeries& got,
                                                  const TruncSeries& expected) {
  const int order = std::min(got.order(), expected.order());
  for (int n = 0; n <= order; ++n) {
    const LaurentPoly2 diff = got[n] - expected[n];
    if (diff.is_zero()) continue;
    const auto [xe, ye] = diff.terms().begin()->first;
    return CoefficientMismatch{n, xe, ye, expected[n].coefficient(xe, ye),
                               got[n].coefficient(xe, ye)};
  }
  return std::nullopt;
}

namespace {

IdentityResult compare(std::string id, std::string description, const TruncSeries& lhs,
                       const TruncSeries& rhs) {
  IdentityResult r{std::move(id), std::move(description), true, first_mismatch(lhs, rhs)};
  r.pass = !r.first_failure;
  return r;
}

// First term with a negative exponent, reported against an expected zero.
std::optional<CoefficientMismatch> first_negative_exponent(const TruncSeries& s) {
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [e, c] : s[n].terms()) {
      if (e.first < 0 || e.second < 0) return CoefficientMismatch{n, e.first, e.second, 0, c};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<IdentityResult> verify_identities(const IdentityInputs& in) {
  const int N = in.order;
  const TruncSeries one = TruncSeries::constant(N, 1);
  const TruncSeries z = TruncSeries::z(N);
  std::vector<IdentityResult> out;

  {
    const TruncSeries root = LaurentPoly2(2) * shift_z(in.P0, 1) - kOne - (kOne - kX) * z;
    out.push_back(compare("a", "(2z P0 - 1 - (1-x)z)^2 = f(x,z)", root * root, radicand_f(N)));
  }
  {
    const TruncSeries f = radicand_f(N);
    const TruncSeries sum = series_sqrt(f) + series_sqrt(substitute_yz(f)) +
                            ((kOne - kX) * (kOne - kY)) * z;
    out.push_back(compare("b", "P (sqrt f(x,z) + sqrt f(x,yz) + (1-x)(1-y)z) = 2", in.P * sum,
                          TruncSeries::constant(N, 2)));
  }
  {
    const TruncSeries reflected =
        in.P.remap_exponents([](int n, int xe, int ye) { return Exponent2{n - xe, n - ye}; });
    out.push_back(compare("c", "P(x,y,z) = P(1/x,1/y,xyz)", in.P, reflected));
  }
  {
    const TruncSeries rhs = (z + kOne - kX * z) * in.P0 - kOne;
    out.push_back(compare("d", "[y^1]P = (1 + z - xz) P0 - 1", y_slice(in.P, 1), rhs));
  }
  {
    const TruncSeries alpha = build_alpha(in.P0, in.V0);
    const TruncSeries R = build_R(in.P, in.P0, in.V0);
    IdentityResult r = compare("e", "(1-y) R = y alpha(x,z) - alpha(x,yz)", (kOne - kY) * R,
                               kY * alpha - substitute_yz(alpha));
    if (r.pass) {
      r.first_failure = first_negative_exponent(alpha);
      r.pass = !r.first_failure;
    }
    out.push_back(std::move(r));
  }
  const TruncSeries a0y = substitute_yz(in.A0);
  {
    const TruncSeries bracket = one - kX * ((in.A0 - kOne) * (a0y - kOne));
    const TruncSeries lhs = z * bracket * (kY * a0y - in.A0);
    const TruncSeries rhs = z * (kY - kOne) * in.A0 * a0y;
    out.push_back(compare(
        "f", "z(1 - x(A0(x,z)-1)(A0(x,yz)-1))(y A0(x,yz) - A0(x,z)) = z(y-1) A0(x,z) A0(x,yz)",
        lhs, rhs));
  }
  out.push_back(compare("g", "(y-1) A = y A0(x,yz) - A0(x,z)", (kY - kOne) * in.A,
                        kY * a0y - in.A0));
  out.push_back(compare("h", "x V0 = x + P0 - 1", kX * in.V0, in.P0 + (kX - kOne)));
  return out;
}

std::vector<IdentityResult> verify_identity_suite(int order) {
  return verify_identities(build_identity_inputs(order));
}

}  // namespace dyck
