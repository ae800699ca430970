#include "dyckflaws/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyck {

Path complement(const Path& p) {
  std::vector<Step> out(p.steps().begin(), p.steps().end());
  for (Step& s : out) s = flip(s);
  return Path(std::move(out));
}

Path reverse_complement(const Path& p) {
  std::vector<Step> out(p.steps().rbegin(), p.steps().rend());
  for (Step& s : out) s = flip(s);
  return Path(std::move(out));
}

namespace {

using Range = CfDecomposition::Range;

// Maximal factors between consecutive returns to the axis.
std::vector<Range> excursions(const Path& p) {
  std::vector<Range> out;
  int height = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    height += p[i] == Step::Up ? 1 : -1;
    if (height == 0) {
      out.push_back({start, i + 1});
      start = i + 1;
    }
  }
  return out;
}

bool is_above(const Path& p, const Range& e) { return p[e.begin] == Step::Up; }

void append(std::vector<Step>& out, const Path& p, const Range& r) {
  out.insert(out.end(), p.steps().begin() + r.begin, p.steps().begin() + r.end);
}

}  // namespace

Path CfDecomposition::segment(const Range& range) const {
  return Path(std::vector<Step>(source.steps().begin() + range.begin,
                                source.steps().begin() + range.end));
}

std::string CfDecomposition::to_string() const {
  auto show = [&](const Range& r) {
    return r.empty() ? std::string("·") : render_steps(source.steps().subspan(r.begin, r.size()));
  };
  return show(s) + "|" + show(r) + "|U|" + show(q) + "|D|" + show(t);
}

CfDecomposition cf_decompose_forward(const Path& p) {
  const auto ex = excursions(p);
  auto last_above = std::find_if(ex.rbegin(), ex.rend(),
                                 [&](const Range& e) { return is_above(p, e); });
  if (last_above == ex.rend()) {
    throw std::domain_error("path " + render_path(p) +
                            " has no excursion above the axis (all steps flawed)");
  }
  CfDecomposition d;
  d.source = p;
  const Range prime = *last_above;
  d.up_index = prime.begin;
  d.down_index = prime.end - 1;
  d.q = {prime.begin + 1, prime.end - 1};
  d.t = {prime.end, p.size()};

  // R: the below-axis excursions immediately left of the prime factor.
  auto it = std::next(last_above);
  std::size_t r_begin = prime.begin;
  while (it != ex.rend() && !is_above(p, *it)) {
    r_begin = it->begin;
    ++it;
  }
  d.r = {r_begin, prime.begin};
  d.s = {0, r_begin};
  return d;
}

CfDecomposition cf_decompose_inverse(const Path& p) {
  const auto ex = excursions(p);
  auto last_below = std::find_if(ex.rbegin(), ex.rend(),
                                 [&](const Range& e) { return !is_above(p, e); });
  if (last_below == ex.rend()) {
    throw std::domain_error("path " + render_path(p) + " has no flaws");
  }
  CfDecomposition d;
  d.source = p;
  const Range low = *last_below;
  d.down_index = low.begin;
  d.up_index = low.end - 1;
  d.r = {low.begin + 1, low.end - 1};
  d.q = {low.end, p.size()};

  auto it = std::next(last_below);
  std::size_t t_begin = low.begin;
  while (it != ex.rend() && !is_above(p, *it)) {
    t_begin = it->begin;
    ++it;
  }
  d.t = {t_begin, low.begin};
  d.s = {0, t_begin};
  return d;
}

Path cf_step(const Path& p) {
  const CfDecomposition d = cf_decompose_forward(p);
  std::vector<Step> out;
  out.reserve(p.size());
  append(out, p, d.s);
  append(out, p, d.t);
  out.push_back(Step::Down);
  append(out, p, d.r);
  out.push_back(Step::Up);
  append(out, p, d.q);
  return Path(std::move(out));
}

Path cf_step_inverse(const Path& p) {
  const CfDecomposition d = cf_decompose_inverse(p);
  std::vector<Step> out;
  out.reserve(p.size());
  append(out, p, d.s);
  append(out, p, d.r);
  out.push_back(Step::Up);
  append(out, p, d.q);
  out.push_back(Step::Down);
  append(out, p, d.t);
  return Path(std::move(out));
}

}  // namespace dyck
