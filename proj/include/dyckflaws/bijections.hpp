#pragma once

#include <cstddef>
#include <string>

#include "dyckflaws/path.hpp"

namespace dyck {

/// Flip every step. Sends m flaws to n-m, swaps peaks/valleys and
/// double ascents/double descents.
Path complement(const Path& p);

/// Reverse the word, then flip every step. Keeps n, m, peaks and valleys,
/// swaps double ascents with double descents.
Path reverse_complement(const Path& p);

/// Split of a path into S R U Q D T where U Q D is the right-most excursion
/// above the axis, R the run of below-axis excursions directly before it,
/// S the (possibly empty) prefix ending on the axis after a down step, and
/// T the below-axis tail. Segments are half-open index ranges into the path.
struct CfDecomposition {
  struct Range {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t size() const noexcept { return end - begin; }
    bool empty() const noexcept { return begin == end; }
    friend bool operator==(const Range&, const Range&) = default;
  };

  Path source;
  Range s, r, q, t;
  std::size_t up_index = 0;    // the U in front of Q
  std::size_t down_index = 0;  // the D closing Q

  Path segment(const Range& range) const;

  /// "S|R|U|Q|D|T" with "·" for empty segments.
  std::string to_string() const;
};

/// Throws std::domain_error if p has no excursion above the axis.
CfDecomposition cf_decompose_forward(const Path& p);

/// Decomposition S T D R U Q of a path with at least one flaw, where D R U
/// is its right-most excursion below the axis. Returned in the same S R Q T
/// naming so that reassembling S R U Q D T yields the preimage.
CfDecomposition cf_decompose_inverse(const Path& p);

/// S R U Q D T -> S T D R U Q. Adds exactly one flaw and keeps the number of
/// double ascents. Throws std::domain_error when flaws == semilength.
Path cf_step(const Path& p);

/// Inverse of cf_step. Throws std::domain_error when p has no flaws.
Path cf_step_inverse(const Path& p);

}  // namespace dyck
