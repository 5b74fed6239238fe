#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "permcore/perm.hpp"

namespace atlas {

using u64 = std::uint64_t;

/// GF(p^f) in polynomial basis. Elements are encoded as base-p digit strings
/// packed into a u64: code = c0 + c1*p + ... + c_{f-1}*p^{f-1}. The modulus
/// is the lexicographically smallest monic primitive polynomial of degree f
/// over GF(p) (coefficient tuples compared as base-p integers), so encodings
/// are stable across runs and builds.
class Field {
 public:
  Field(u64 p, unsigned f);

  u64 p() const { return p_; }
  unsigned f() const { return f_; }
  u64 q() const { return q_; }
  const std::vector<u64>& modulus() const { return poly_; }  // c0..cf, monic

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;  // throws on 0
  u64 pow(u64 a, u64 e) const;
  u64 frobenius(u64 a) const { return pow(a, p_); }

  /// The class of x, a generator of the multiplicative group.
  u64 generator() const { return f_ == 1 ? gen1_ : p_; }

  u64 element_order(u64 a) const;

 private:
  u64 p_;
  unsigned f_;
  u64 q_;
  std::vector<u64> poly_;
  u64 gen1_ = 0;  // smallest primitive root when f == 1
  // log/antilog tables for q up to 1<<16
  std::vector<u64> exp_, log_;

  u64 mul_slow(u64 a, u64 b) const;
};

using FieldRef = std::shared_ptr<const Field>;
FieldRef get_field(u64 p, unsigned f);  // cached, thread-safe

/// Small dense matrix over a shared field, row-major field codes. Rows act
/// from the right: the natural action is v -> v * M on row vectors.
struct Mat {
  FieldRef k;
  unsigned n = 0;
  std::vector<u64> a;

  Mat() = default;
  Mat(FieldRef field, unsigned dim);  // zero matrix
  static Mat identity(FieldRef field, unsigned dim);

  u64& at(unsigned i, unsigned j) { return a[i * n + j]; }
  u64 at(unsigned i, unsigned j) const { return a[i * n + j]; }

  Mat operator*(const Mat& o) const;
  Mat transposed() const;
  Mat inverse() const;  // throws on singular
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

/// Row vector * matrix.
std::vector<u64> apply_row(const Mat& m, const std::vector<u64>& v);

}  // namespace atlas
