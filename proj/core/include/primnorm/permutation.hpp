#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "primnorm/types.hpp"

namespace primnorm {

/// A bijection of {0, ..., n-1} stored as an image table.
///
/// Permutations act on the right: `p * q` first applies `p`, then `q`, so
/// that `(x^p)^q == x^(p*q)`. Conjugation follows the same convention:
/// `p.conjugate(s) == s^-1 * p * s`.
class Permutation {
 public:
  Permutation() = default;

  /// The identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image table; throws InvalidArgument unless it is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation pow(std::int64_t e) const;

  /// s^-1 * this * s; maps x^s to (x^this)^s.
  Permutation conjugate(const Permutation& s) const;

  /// Cycle lengths (including fixed points) in non-increasing order.
  std::vector<std::size_t> cycle_type() const;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  std::optional<Point> smallest_moved_point() const noexcept;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  bool is_even() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace primnorm
