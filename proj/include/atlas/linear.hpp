#pragma once

#include "atlas/field.hpp"
#include "permcore/group.hpp"

namespace atlas {

using permcore::GroupRef;
using permcore::Perm;
using permcore::Point;

/// Projective points of PG(n-1, q): canonical representatives with the first
/// nonzero coordinate equal to 1, enumerated in a fixed order.
class ProjectiveSpace {
 public:
  ProjectiveSpace(FieldRef k, unsigned n);

  Point size() const { return static_cast<Point>(points_.size()); }
  const std::vector<u64>& point(Point i) const { return points_[i]; }
  Point index_of(const std::vector<u64>& v) const;  // normalizes first

  /// Permutation induced by v -> v * M.
  Perm perm_of(const Mat& m) const;
  /// Permutation induced by the coordinatewise Frobenius x -> x^p.
  Perm frobenius_perm() const;

  const Field& field() const { return *k_; }
  unsigned dim() const { return n_; }

 private:
  FieldRef k_;
  unsigned n_;
  std::vector<std::vector<u64>> points_;
  std::unordered_map<u64, Point> index_;  // packed vector code -> index

  u64 pack(const std::vector<u64>& v) const;
  std::vector<u64> normalize(std::vector<u64> v) const;
};

enum class LinearFlavor { psl, pgl, psigmal, pgammal };

/// PSL/PGL/PSigmaL/PGammaL(n, q) acting on the (q^n-1)/(q-1) projective
/// points.
GroupRef linear_group(LinearFlavor flavor, unsigned n, u64 p, unsigned f);

/// Extension of a projective linear group by the inverse-transpose duality,
/// acting on points and hyperplanes together (degree doubles). Requires
/// n >= 3. `with_frobenius` and `with_diagonal` control the other outer
/// parts, as in linear_group.
GroupRef linear_group_dual(unsigned n, u64 p, unsigned f, bool with_diagonal,
                           bool with_frobenius);

/// AGL(n, p) on the p^n affine vectors.
GroupRef affine_group(unsigned n, u64 p);

/// PSp(4, q) on projective points (symplectic transvections modulo scalars).
GroupRef symplectic_group_psp4(u64 p, unsigned f);

/// Exponent of the full unitriangular group of degree n over GF(p^f),
/// by direct enumeration. Test witness for the p-element order bound.
u64 unitriangular_exponent(unsigned n, u64 p, unsigned f);

u64 order_gl(unsigned n, u64 q);
u64 order_sl(unsigned n, u64 q);
u64 order_psl(unsigned n, u64 q);

}  // namespace atlas
