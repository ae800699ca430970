#include "dyckflaws/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "dyckflaws/bijections.hpp"
#include "dyckflaws/closed_forms.hpp"

namespace dyck {

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Oracle:
      return "oracle";
    case Suite::Formulas:
      return "formulas";
    case Suite::Bijections:
      return "bijections";
    case Suite::Series:
      return "series";
  }
  return "?";
}

std::optional<std::vector<Suite>> parse_suites(std::string_view name) {
  const std::vector<Suite> all = {Suite::Oracle, Suite::Formulas, Suite::Bijections, Suite::Series};
  if (name == "all") return all;
  for (Suite s : all) {
    if (suite_name(s) == name) return std::vector<Suite>{s};
  }
  return std::nullopt;
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

using Tables = std::vector<std::array<CountTable, 4>>;

const CountTable& peaks(const Tables& t, int n) { return t[n][0]; }
const CountTable& valleys(const Tables& t, int n) { return t[n][1]; }
const CountTable& ascents(const Tables& t, int n) { return t[n][2]; }
const CountTable& descents(const Tables& t, int n) { return t[n][3]; }

// Counts cases and keeps the first failing one.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) : name_(std::move(name)) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases_;
    if (!ok && !failure_) failure_ = describe();
  }

  void expect_equal(const Integer& got, const Integer& want, const std::string& where) {
    expect(got == want, [&] { return where + ": got " + got.str() + ", expected " + want.str(); });
  }

  Check finish() {
    Check c{name_, !failure_};
    c.detail["cases"] = cases_;
    c.detail["failure"] = failure_ ? Json(*failure_) : Json(nullptr);
    return c;
  }

 private:
  std::string name_;
  long cases_ = 0;
  std::optional<std::string> failure_;
};

std::string at(int n, int m, int k) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

std::vector<Check> oracle_suite(const Tables& t, int n_max) {
  CheckBuilder rows("chung_feller_row_sums"), total("total_paths"), joints("joint_node_count"),
      recip("peak_reciprocity"), vrecip("valley_reciprocity"), phi("valley_peak_duality"),
      psi("descent_ascent_duality"), shift("catalan_valley_peak_shift");

  for (int n = 0; n <= n_max; ++n) {
    for (int s = 0; s < 4; ++s) {
      total.expect_equal(t[n][s].total(), binomial(2 * n, n), "n=" + std::to_string(n));
      for (int m = 0; m <= n; ++m) {
        rows.expect_equal(t[n][s].row_sum(m), catalan(n),
                          std::string(stat_name(kAllStats[s])) + " n=" + std::to_string(n) +
                              " m=" + std::to_string(m));
      }
    }
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) {
        recip.expect_equal(peaks(t, n).entry(m, k), peaks(t, n).entry(n - m, n - k), at(n, m, k));
        if (n >= 1) {
          vrecip.expect_equal(valleys(t, n).entry(m, k), valleys(t, n).entry(n - m, n - k),
                              at(n, m, k));
        }
        phi.expect_equal(valleys(t, n).entry(m, k), peaks(t, n).entry(n - m, k), at(n, m, k));
        psi.expect_equal(descents(t, n).entry(m, k), ascents(t, n).entry(m, k), at(n, m, k));
      }
    }
    if (n >= 1) {
      for (int k = 0; k < n; ++k) {
        shift.expect_equal(valleys(t, n).entry(0, k), peaks(t, n).entry(0, k + 1), at(n, 0, k));
      }
    }
    for_each_path(n, std::nullopt, [&](std::span<const Step> w) {
      const StatVector s = stats(w);
      const int sum = s.peaks + s.valleys + s.double_ascents + s.double_descents;
      bool ok = s.flaws >= 0 && s.flaws <= n && (n == 0 ? sum == 0 : sum == 2 * n - 1);
      if (s.flaws == 0 && n >= 1) ok = ok && s.peaks == s.valleys + 1;
      joints.expect(ok, [&] { return render_steps(w) + ": " + to_string(s); });
    });
  }
  return {rows.finish(),  total.finish(), joints.finish(), recip.finish(),
          vrecip.finish(), phi.finish(),  psi.finish(),    shift.finish()};
}

std::vector<Check> formulas_suite(const Tables& t, int n_max) {
  CheckBuilder nar("narayana_peak"), sums("narayana_row_sums"), one("one_flaw_peak"),
      pair("peak_pair_sum"), central("central_peak"), vpair("valley_pair_sum"),
      vcentral("central_valley"), rec("peak_recurrence"), ascent("ascent_chung_feller"),
      descent("descent_chung_feller");

  const auto rec_table = recurrence_peak_table(n_max);
  const auto rec_shifted = recurrence_peak_table_shifted(n_max);

  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      const IntPolynomial oracle = table_polynomial(peaks(t, n), m);
      rec.expect(rec_table[n][m] == oracle && rec_shifted[n][m] == oracle, [&] {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": recurrence " +
               rec_table[n][m].to_string() + ", shifted form " + rec_shifted[n][m].to_string() +
               ", oracle " + oracle.to_string();
      });
    }
    if (n == 0) {
      ascent.expect_equal(ascents(t, 0).entry(0, 0), 1, at(0, 0, 0));
      descent.expect_equal(descents(t, 0).entry(0, 0), 1, at(0, 0, 0));
      continue;
    }
    Integer peak_sum = 0, ascent_sum = 0;
    for (int k = 0; k <= n; ++k) {
      nar.expect_equal(peaks(t, n).entry(0, k), narayana_peak(n, k), at(n, 0, k));
      peak_sum += narayana_peak(n, k);
      ascent_sum += narayana_ascent(n, k);
      for (int m = 0; m <= n; ++m) {
        ascent.expect_equal(ascents(t, n).entry(m, k), narayana_ascent(n, k), at(n, m, k));
        descent.expect_equal(descents(t, n).entry(m, k), narayana_ascent(n, k), at(n, m, k));
      }
    }
    sums.expect(peak_sum == catalan(n) && ascent_sum == catalan(n), [&] {
      return "n=" + std::to_string(n) + ": peak sum " + peak_sum.str() + ", ascent sum " +
             ascent_sum.str();
    });
    if (n < 2) continue;
    for (int k = 0; k <= n; ++k) {
      one.expect_equal(peaks(t, n).entry(1, k), one_flaw_peak(n, k), at(n, 1, k));
    }
    for (int k = 1; k <= n / 2; ++k) {
      const Integer want = peak_pair_sum(n, k);
      for (int m = 1; m <= n - 1; ++m) {
        const auto& p = peaks(t, n);
        const auto& v = valleys(t, n);
        pair.expect_equal(p.entry(m, k) + p.entry(m, n - k), want, at(n, m, k));
        pair.expect_equal(p.entry(m, k) + p.entry(n - m, k), want, at(n, m, k) + " (reflected)");
        vpair.expect_equal(v.entry(m, k) + v.entry(m, n - k), want, at(n, m, k));
        vpair.expect_equal(v.entry(m, k) + v.entry(n - m, k), want, at(n, m, k) + " (reflected)");
      }
    }
    if (n % 2 == 0) {
      const int h = n / 2;
      for (int m = 1; m <= n - 1; ++m) {
        central.expect_equal(peaks(t, n).entry(m, h), central_peak(h), at(n, m, h));
        vcentral.expect_equal(valleys(t, n).entry(m, h), central_peak(h), at(n, m, h));
      }
    }
  }
  return {nar.finish(),   sums.finish(),     one.finish(), pair.finish(),   central.finish(),
          vpair.finish(), vcentral.finish(), rec.finish(), ascent.finish(), descent.finish()};
}

std::vector<Check> bijections_suite(int n_max) {
  CheckBuilder inv("involutions"), phi("complement_stat_transport"),
      psi("reverse_complement_stat_transport"), cf("cf_step_bijection"),
      cf_inv("cf_step_two_sided_inverse");
  Json class_sizes = Json::object();

  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::vector<Path>> by_flaws(n + 1);
    for (Path& p : enumerate_paths(n)) {
      const StatVector s = stats(p);
      const Path c = complement(p);
      const Path rc = reverse_complement(p);
      inv.expect(complement(c) == p && reverse_complement(rc) == p,
                 [&] { return render_path(p); });
      const StatVector sc = stats(c);
      phi.expect(sc == StatVector{n, n - s.flaws, s.valleys, s.peaks, s.double_descents,
                                  s.double_ascents},
                 [&] { return render_path(p) + " -> " + to_string(sc); });
      const StatVector src = stats(rc);
      psi.expect(src == StatVector{n, s.flaws, s.peaks, s.valleys, s.double_descents,
                                   s.double_ascents},
                 [&] { return render_path(p) + " -> " + to_string(src); });
      by_flaws[s.flaws].push_back(std::move(p));
    }
    if (n == 0) continue;

    Json sizes = Json::array();
    for (int m = 0; m < n; ++m) {
      std::vector<Path> images;
      images.reserve(by_flaws[m].size());
      for (const Path& p : by_flaws[m]) {
        Path img = cf_step(p);
        const StatVector before = stats(p), after = stats(img);
        cf.expect(after.flaws == m + 1 && after.double_ascents == before.double_ascents &&
                      after.semilength == n,
                  [&] { return render_path(p) + " -> " + render_path(img); });
        cf_inv.expect(cf_step_inverse(img) == p, [&] { return render_path(p); });
        images.push_back(std::move(img));
      }
      std::sort(images.begin(), images.end());
      const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
      cf.expect(distinct && images.size() == by_flaws[m + 1].size(), [&] {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
               std::to_string(images.size()) + " images, distinct=" + (distinct ? "yes" : "no") +
               ", target class size " + std::to_string(by_flaws[m + 1].size());
      });
      sizes.push_back(images.size());
    }
    for (int m = 1; m <= n; ++m) {
      for (const Path& p : by_flaws[m]) {
        cf_inv.expect(cf_step(cf_step_inverse(p)) == p, [&] { return render_path(p); });
      }
    }
    class_sizes[std::to_string(n)] = std::move(sizes);
  }
  Check cf_check = cf.finish();
  cf_check.detail["class_sizes"] = std::move(class_sizes);
  return {inv.finish(), phi.finish(), psi.finish(), std::move(cf_check), cf_inv.finish()};
}

// Series whose z^n x^k y^m coefficient is table(n).entry(m, k).
TruncSeries oracle_series(const Tables& t, int order, int stat) {
  TruncSeries s(order);
  for (int n = 0; n <= order; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int k = 0; k <= n; ++k) s[n].add_term(k, m, t[n][stat].entry(m, k));
    }
  }
  return s;
}

Json mismatch_json(const std::optional<CoefficientMismatch>& mm) {
  if (!mm) return nullptr;
  return Json{{"n", mm->n},
              {"xexp", mm->xexp},
              {"yexp", mm->yexp},
              {"expected", to_decimal(mm->expected)},
              {"got", to_decimal(mm->got)}};
}

Check series_match(std::string name, const TruncSeries& got, const TruncSeries& want) {
  Check c{std::move(name)};
  const auto mm = first_mismatch(got, want);
  c.pass = !mm;
  c.detail["first_failure"] = mismatch_json(mm);
  return c;
}

std::vector<Check> series_suite(const Tables& t, int order) {
  std::vector<Check> out;
  const IdentityInputs in = build_identity_inputs(order);
  for (const IdentityResult& r : verify_identities(in)) {
    Check c{"identity_" + r.id, r.pass};
    c.detail["description"] = r.description;
    c.detail["first_failure"] = mismatch_json(r.first_failure);
    out.push_back(std::move(c));
  }
  out.push_back(series_match("P_matches_oracle", in.P, oracle_series(t, order, 0)));
  out.push_back(series_match("A_matches_oracle", in.A, oracle_series(t, order, 2)));

  const LaurentPoly2 x = LaurentPoly2::x();
  const TruncSeries one = TruncSeries::constant(order, 1);
  const TruncSeries v0y = substitute_yz(in.V0);
  const TruncSeries a0y = substitute_yz(in.A0);
  const std::vector<TruncSeries> inverted = {
      in.V0, one - shift_z((in.P0 + (x - LaurentPoly2(1))) * v0y, 1),
      one - x * ((in.A0 - LaurentPoly2(1)) * (a0y - LaurentPoly2(1)))};
  bool inv_ok = true;
  for (const auto& a : inverted) inv_ok = inv_ok && a * series_invert(a) == one;
  out.push_back(Check{"invert_multiplies_back", inv_ok});

  const TruncSeries f = radicand_f(order);
  bool sqrt_ok = true;
  for (const auto& a : {f, substitute_yz(f)}) {
    const TruncSeries r = series_sqrt(a);
    sqrt_ok = sqrt_ok && r * r == a;
  }
  out.push_back(Check{"sqrt_squares_back", sqrt_ok});

  Check nonneg{"final_series_nonnegative_exponents"};
  nonneg.pass = in.P.is_polynomial() && in.A.is_polynomial() &&
                build_alpha(in.P0, in.V0).is_polynomial() &&
                build_R(in.P, in.P0, in.V0).is_polynomial();
  out.push_back(std::move(nonneg));
  return out;
}

}  // namespace

std::vector<SuiteReport> run_verification(std::span<const Suite> suites,
                                          const VerifyOptions& options) {
  if (options.n_max < 0 || options.order < 0) {
    throw std::domain_error("n_max and order must be nonnegative");
  }
  int needed = -1;
  for (Suite s : suites) {
    if (s == Suite::Oracle || s == Suite::Formulas) needed = std::max(needed, options.n_max);
    if (s == Suite::Series) needed = std::max(needed, options.order);
  }
  Tables tables;
  for (int n = 0; n <= needed; ++n) tables.push_back(count_tables(n, options.threads));

  auto run_one = [&](Suite s) {
    switch (s) {
      case Suite::Oracle:
        return SuiteReport{s, oracle_suite(tables, options.n_max)};
      case Suite::Formulas:
        return SuiteReport{s, formulas_suite(tables, options.n_max)};
      case Suite::Bijections:
        return SuiteReport{s, bijections_suite(options.n_max)};
      case Suite::Series:
        return SuiteReport{s, series_suite(tables, options.order)};
    }
    return SuiteReport{s, {}};
  };

  std::vector<SuiteReport> out;
  if (options.threads <= 1) {
    for (Suite s : suites) out.push_back(run_one(s));
    return out;
  }
  std::vector<std::future<SuiteReport>> pending;
  for (Suite s : suites) pending.push_back(std::async(std::launch::async, run_one, s));
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

Json suite_report_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json entry = {{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    for (const auto& [key, value] : c.detail.items()) entry[key] = value;
    checks.push_back(std::move(entry));
  }
  return Json{{"suite", suite_name(r.suite)},
              {"status", r.pass() ? "pass" : "fail"},
              {"checks", std::move(checks)}};
}

}  // namespace dyck
