#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyckflaws/series.hpp"

namespace dyck {

// Generating functions of flawed paths, truncated after z^order. In every
// series x marks the statistic, y the number of flaws and z the semilength.

/// Catalan paths by peaks: P0 = 1 + z P0 (x + P0 - 1).
TruncSeries solve_P0(int order);
/// Catalan paths by valleys: V0 = 1 + z + z (V0 - 1)(1 + x V0).
TruncSeries solve_V0(int order);
/// Catalan paths by double ascents: A0 = 1 + z A0 / (1 - x z A0).
TruncSeries solve_A0(int order);

/// f(x, z) = 1 - 2(1+x) z + (1-x)^2 z^2.
TruncSeries radicand_f(int order);

/// All paths by peaks and flaws, from the first-return decomposition
/// P = V0(x,yz) / (1 - z (x + P0 - 1) V0(x,yz)).
TruncSeries build_P(int order);
/// All paths by double ascents and flaws:
/// A = A0(x,z) A0(x,yz) / (1 - x (A0(x,z) - 1)(A0(x,yz) - 1)).
TruncSeries build_A(int order);

/// alpha = ((1 + x - (1-x) z) / x) P0 - P0 / V0 - 1/x.
TruncSeries build_alpha(const TruncSeries& P0, const TruncSeries& V0);
/// Pair-sum series R = P(x,y,z) + P(x,1/y,yz) + 2 - V0(x,z) - V0(x,yz)
///                     - P0(x,z) - P0(x,yz).
TruncSeries build_R(const TruncSeries& P, const TruncSeries& P0, const TruncSeries& V0);

/// Names accepted by named_series: P0 V0 A0 P A f alpha R.
const std::vector<std::string>& series_names();
std::optional<TruncSeries> named_series(std::string_view name, int order);

/// Series the identity checks run on. Tests may corrupt members before
/// calling verify_identities.
struct IdentityInputs {
  int order = 0;
  TruncSeries P0{0}, V0{0}, A0{0}, P{0}, A{0};
};

IdentityInputs build_identity_inputs(int order);

struct CoefficientMismatch {
  int n = 0;
  int xexp = 0;
  int yexp = 0;
  Integer expected;
  Integer got;
};

struct IdentityResult {
  std::string id;  // "a" .. "h"
  std::string description;
  bool pass = false;
  std::optional<CoefficientMismatch> first_failure;
};

/// First coefficient (by n, then x-exponent, then y-exponent) where got and
/// expected differ, over z-degrees up to the smaller order.
std::optional<CoefficientMismatch> first_mismatch(const TruncSeries& got,
                                                  const TruncSeries& expected);

/// Identities (a)..(h) in fixed order:
///  a  (2z P0 - 1 - (1-x) z)^2 = f(x,z)
///  b  P (sqrt f(x,z) + sqrt f(x,yz) + (1-x)(1-y) z) = 2
///  c  P(x,y,z) = P(1/x, 1/y, xyz)
///  d  [y^1] P = (1 + z - x z) P0 - 1
///  e  (1-y) R = y alpha(x,z) - alpha(x,yz), alpha free of negative powers
///  f  z (1 - x (A0(x,z)-1)(A0(x,yz)-1)) (y A0(x,yz) - A0(x,z))
///       = z (y-1) A0(x,z) A0(x,yz)
///  g  (y-1) A = y A0(x,yz) - A0(x,z)
///  h  x V0 = x + P0 - 1
std::vector<IdentityResult> verify_identities(const IdentityInputs& in);
std::vector<IdentityResult> verify_identity_suite(int order);

}  // namespace dyck
