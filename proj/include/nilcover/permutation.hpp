#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilcover {

using Point = std::uint32_t;

/// A bijection of {0, ..., d-1}. Products act on the right: (x * y)(i) = y(x(i)),
/// so x * y means "apply x, then y".
class Permutation {
 public:
  Permutation() = default;

  /// Throws ParseError if `images` is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  /// Throws DegreeMismatch when degrees differ.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& rhs) const {
    return images_ <=> rhs.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses a product of disjoint cycles over 1-based points, e.g. "(1,2)(3,4,5)".
/// Points inside a cycle are separated by commas and/or whitespace; "()" is the
/// identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical 1-based cycle notation: cycles ordered by smallest moved point,
/// each rotated to start at its smallest point, fixed points omitted.
std::string format_cycles(const Permutation& p);

/// Parses a comma-separated list of elements, e.g. "(3,4,5), (2,3,4),(1,2)(3,4)".
std::vector<Permutation> parse_cycle_list(std::string_view text, std::size_t degree);

/// Places the given permutations on consecutive disjoint blocks of points.
Permutation concatenate(std::span<const Permutation> parts);

}  // namespace nilcover
