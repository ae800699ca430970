#include "dyckflaws/path.hpp"

#include <algorithm>
#include <sstream>

namespace dyck {

Path::Path(std::vector<Step> steps) : steps_(std::move(steps)) {
  auto ups = std::count(steps_.begin(), steps_.end(), Step::Up);
  if (2 * static_cast<std::size_t>(ups) != steps_.size()) {
    throw ParseError(ParseError::Kind::Unbalanced,
                     "path has " + std::to_string(ups) + " up steps and " +
                         std::to_string(steps_.size() - ups) + " down steps");
  }
}

Path parse_path(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'U':
      case 'u':
        steps.push_back(Step::Up);
        break;
      case 'D':
      case 'd':
        steps.push_back(Step::Down);
        break;
      default:
        throw ParseError(ParseError::Kind::ForeignCharacter,
                         "invalid character '" + std::string(1, word[i]) + "' at position " +
                             std::to_string(i) + "; expected U or D");
    }
  }
  if (steps.size() % 2 != 0) {
    throw ParseError(ParseError::Kind::OddLength,
                     "path word has odd length " + std::to_string(steps.size()));
  }
  return Path(std::move(steps));
}

std::string render_steps(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

std::string render_path(const Path& p) { return render_steps(p.steps()); }

std::vector<int> height_profile(const Path& p) {
  std::vector<int> h(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) h[i + 1] = h[i] + (p[i] == Step::Up ? 1 : -1);
  return h;
}

StatVector stats(std::span<const Step> steps) {
  StatVector s;
  s.semilength = static_cast<int>(steps.size() / 2);
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::Up) {
      if (height < 0) ++s.flaws;
      ++height;
    } else {
      --height;
    }
    if (i + 1 == steps.size()) break;
    const Step a = steps[i], b = steps[i + 1];
    if (a == Step::Up) {
      ++(b == Step::Down ? s.peaks : s.double_ascents);
    } else {
      ++(b == Step::Up ? s.valleys : s.double_descents);
    }
  }
  return s;
}

bool is_catalan(const Path& p) {
  int height = 0;
  for (Step s : p.steps()) {
    height += s == Step::Up ? 1 : -1;
    if (height < 0) return false;
  }
  return true;
}

std::string to_string(const StatVector& s) {
  std::ostringstream os;
  os << "n=" << s.semilength << " m=" << s.flaws << " peaks=" << s.peaks
     << " valleys=" << s.valleys << " da=" << s.double_ascents << " dd=" << s.double_descents;
  return os.str();
}

}  // namespace dyck
