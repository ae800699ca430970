#include "dyckflaws/series.hpp"

#include <algorithm>

namespace dyck {

LaurentPoly2::LaurentPoly2(long c) : LaurentPoly2(Integer(c)) {}

LaurentPoly2::LaurentPoly2(Integer c) {
  if (c != 0) terms_.emplace(Exponent2{0, 0}, std::move(c));
}

LaurentPoly2 LaurentPoly2::monomial(Integer c, int xexp, int yexp) {
  LaurentPoly2 p;
  p.add_term(xexp, yexp, c);
  return p;
}

Integer LaurentPoly2::coefficient(int xexp, int yexp) const {
  auto it = terms_.find({xexp, yexp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly2::add_term(int xexp, int yexp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({xexp, yexp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) { return *this = *this * o; }

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly2 LaurentPoly2::shifted(int dx, int dy) const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent2{e.first + dx, e.second + dy}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::divided_exactly(const Integer& d) const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) {
    Integer q, r;
    boost::multiprecision::divide_qr(c, d, q, r);
    if (r != 0) {
      throw std::domain_error("coefficient " + c.str() + " is not divisible by " + d.str());
    }
    out.terms_.emplace(e, std::move(q));
  }
  return out;
}

bool LaurentPoly2::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.first >= 0 && t.first.second >= 0; });
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [xe, ye] = it->first;
    const Integer& c = it->second;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    std::string vars;
    auto factor = [&](char v, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += '*';
      vars += v;
      if (e != 1) vars += '^' + std::to_string(e);
    };
    factor('x', xe);
    factor('y', ye);
    if (mag != 1 || vars.empty()) out += mag.str();
    out += vars;
  }
  return out;
}

TruncSeries::TruncSeries(int order) : coeffs_(std::max(order, 0) + 1) {
  if (order < 0) throw std::domain_error("series order must be nonnegative");
}

TruncSeries::TruncSeries(int order, std::vector<LaurentPoly2> coeffs) : TruncSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) {
    coeffs_[i] = std::move(coeffs[i]);
  }
}

TruncSeries TruncSeries::constant(int order, LaurentPoly2 c) {
  TruncSeries s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

TruncSeries TruncSeries::z(int order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (int n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TruncSeries operator+(TruncSeries a, const LaurentPoly2& c) {
  a.coeffs_[0] += c;
  return a;
}

TruncSeries operator-(TruncSeries a, const LaurentPoly2& c) {
  a.coeffs_[0] -= c;
  return a;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncSeries operator*(const LaurentPoly2& c, const TruncSeries& a) {
  TruncSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out.coeffs_[n] = c * a.coeffs_[n];
  return out;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > this->order()) throw std::domain_error("cannot raise truncation order");
  return TruncSeries(order, std::vector<LaurentPoly2>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::remap_exponents(
    const std::function<Exponent2(int, int, int)>& remap) const {
  TruncSeries out(order());
  for (int n = 0; n <= order(); ++n) {
    for (const auto& [e, c] : coeffs_[n].terms()) {
      const auto [xe, ye] = remap(n, e.first, e.second);
      out.coeffs_[n].add_term(xe, ye, c);
    }
  }
  return out;
}

bool TruncSeries::is_polynomial() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const LaurentPoly2& c) { return c.is_polynomial(); });
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) { return a + b; }
TruncSeries mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }
TruncSeries scale(const TruncSeries& a, const LaurentPoly2& c) { return c * a; }

TruncSeries shift_z(const TruncSeries& a, int j) {
  if (j < 0) throw std::domain_error("shift_z: negative shift");
  TruncSeries out(a.order());
  for (int n = 0; n + j <= a.order(); ++n) out[n + j] = a[n];
  return out;
}

TruncSeries substitute_yz(const TruncSeries& a) {
  return a.remap_exponents([](int n, int xe, int ye) { return Exponent2{xe, ye + n}; });
}

namespace {

void require_unit_constant(const TruncSeries& a, const char* op) {
  if (a[0] != LaurentPoly2(1)) {
    throw std::domain_error(std::string(op) + ": constant coefficient is " + a[0].to_string() +
                            ", expected 1");
  }
}

}  // namespace

TruncSeries series_invert(const TruncSeries& a) {
  require_unit_constant(a, "series_invert");
  TruncSeries b(a.order());
  b[0] = 1;
  for (int n = 1; n <= a.order(); ++n) {
    LaurentPoly2 acc;
    for (int i = 1; i <= n; ++i) {
      if (!a[i].is_zero() && !b[n - i].is_zero()) acc -= a[i] * b[n - i];
    }
    b[n] = std::move(acc);
  }
  return b;
}

TruncSeries series_sqrt(const TruncSeries& a) {
  require_unit_constant(a, "series_sqrt");
  TruncSeries s(a.order());
  s[0] = 1;
  // (s^2)_n = 2 s_n + sum_{0<i<n} s_i s_{n-i}
  for (int n = 1; n <= a.order(); ++n) {
    LaurentPoly2 rest = a[n];
    for (int i = 1; i < n; ++i) rest -= s[i] * s[n - i];
    s[n] = rest.divided_exactly(2);
  }
  return s;
}

}  // namespace dyck
