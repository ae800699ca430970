#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

enum class Step : std::uint8_t { Down = 0, Up = 1 };

inline Step flip(Step s) { return s == Step::Up ? Step::Down : Step::Up; }

class ParseError : public std::invalid_argument {
 public:
  enum class Kind { OddLength, Unbalanced, ForeignCharacter };

  ParseError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A word over {U, D} with as many up steps as down steps. Immutable.
class Path {
 public:
  Path() = default;

  /// Throws ParseError(Unbalanced) if the step counts differ.
  explicit Path(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Step> steps_;
};

struct StatVector {
  int semilength = 0;
  int flaws = 0;
  int peaks = 0;
  int valleys = 0;
  int double_ascents = 0;
  int double_descents = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

/// Case-insensitive parse of a U/D word.
Path parse_path(std::string_view word);
std::string render_path(const Path& p);
std::string render_steps(std::span<const Step> steps);

/// Heights after each prefix; length size()+1, starting at 0.
std::vector<int> height_profile(const Path& p);

// A flaw is an up step starting strictly below the axis. Joint nodes are
// counted at every height.
StatVector stats(std::span<const Step> steps);
inline StatVector stats(const Path& p) { return stats(p.steps()); }

bool is_catalan(const Path& p);

std::string to_string(const StatVector& s);

}  // namespace dyck
