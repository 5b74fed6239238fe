#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permcore {

using Point = std::uint32_t;
using u64 = std::uint64_t;

/// A bijection on {0, ..., n-1} stored as an image table. Points are
/// 0-based internally; all textual formats use 1-based points.
class Perm {
 public:
  Perm() = default;
  explicit Perm(Point degree);  // identity
  explicit Perm(std::vector<Point> images);  // validates bijection

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;

  /// Apply *this first, then other: (a * b)[x] == b[a[x]].
  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g
  Perm power(long long e) const;

  bool operator==(const Perm& other) const { return img_ == other.img_; }
  bool operator!=(const Perm& other) const { return img_ != other.img_; }
  bool operator<(const Perm& other) const { return img_ < other.img_; }

  u64 order() const;  // lcm of cycle lengths
  Point smallest_moved() const;  // degree() if identity

  /// Disjoint-cycle form with 1-based points; identity prints as "()".
  std::string cycle_string() const;

 private:
  std::vector<Point> img_;
};

/// Parse 1-based disjoint cycle notation, e.g. "(1,2,3)(4,5)". Whitespace is
/// ignored; fixed points may be omitted; "()" is the identity. Throws
/// std::invalid_argument on malformed input or out-of-range points.
Perm parse_cycles(std::string_view text, Point degree);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

size_t hash_images(std::span<const Point> img);

}  // namespace permcore
