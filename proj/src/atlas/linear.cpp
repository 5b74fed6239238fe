#include "atlas/linear.hpp"

#include <algorithm>
#include <unordered_map>

#include "numtheory/numtheory.hpp"

namespace atlas {

ProjectiveSpace::ProjectiveSpace(FieldRef k, unsigned n) : k_(std::move(k)), n_(n) {
  // Canonical reps: leading coordinate 1 at position i, free coordinates
  // after it, zeros before.
  u64 q = k_->q();
  for (unsigned lead = 0; lead < n_; ++lead) {
    unsigned free = n_ - lead - 1;
    u64 count = 1;
    for (unsigned i = 0; i < free; ++i) count *= q;
    for (u64 code = 0; code < count; ++code) {
      std::vector<u64> v(n_, 0);
      v[lead] = 1;
      u64 c = code;
      for (unsigned i = lead + 1; i < n_; ++i) {
        v[i] = c % q;
        c /= q;
      }
      index_.emplace(pack(v), static_cast<Point>(points_.size()));
      points_.push_back(std::move(v));
    }
  }
}

u64 ProjectiveSpace::pack(const std::vector<u64>& v) const {
  u64 code = 0;
  for (unsigned i = n_; i-- > 0;) code = code * k_->q() + v[i];
  return code;
}

std::vector<u64> ProjectiveSpace::normalize(std::vector<u64> v) const {
  for (unsigned i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    u64 s = k_->inv(v[i]);
    for (unsigned j = 0; j < n_; ++j) v[j] = k_->mul(v[j], s);
    return v;
  }
  throw std::invalid_argument("ProjectiveSpace: zero vector");
}

Point ProjectiveSpace::index_of(const std::vector<u64>& v) const {
  auto it = index_.find(pack(normalize(v)));
  if (it == index_.end()) throw std::logic_error("ProjectiveSpace: point not found");
  return it->second;
}

Perm ProjectiveSpace::perm_of(const Mat& m) const {
  std::vector<Point> img(points_.size());
  for (Point i = 0; i < size(); ++i) img[i] = index_of(apply_row(m, points_[i]));
  return Perm(std::move(img));
}

Perm ProjectiveSpace::frobenius_perm() const {
  std::vector<Point> img(points_.size());
  for (Point i = 0; i < size(); ++i) {
    std::vector<u64> v = points_[i];
    for (u64& x : v) x = k_->frobenius(x);
    img[i] = index_of(v);
  }
  return Perm(std::move(img));
}

namespace {

std::vector<Mat> sl_generators(const FieldRef& k, unsigned n) {
  std::vector<Mat> gens;
  u64 alpha = k->generator();
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      u64 a = 1;
      for (unsigned e = 0; e < k->f(); ++e) {
        Mat t = Mat::identity(k, n);
        t.at(i, j) = a;
        gens.push_back(t);
        a = k->mul(a, alpha);
      }
    }
  }
  return gens;
}

}  // namespace

u64 order_gl(unsigned n, u64 q) {
  u64 r = 1;
  u64 qn = numtheory::pow_checked(q, n);
  u64 qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    r = r * (qn - qi);  // overflow guarded by the callers' small parameters
    qi *= q;
  }
  return r;
}

u64 order_sl(unsigned n, u64 q) { return order_gl(n, q) / (q - 1); }

u64 order_psl(unsigned n, u64 q) { return order_sl(n, q) / std::gcd<u64>(n, q - 1); }

GroupRef linear_group(LinearFlavor flavor, unsigned n, u64 p, unsigned f) {
  FieldRef k = get_field(p, f);
  ProjectiveSpace ps(k, n);
  std::vector<Perm> gens;
  for (const Mat& m : sl_generators(k, n)) gens.push_back(ps.perm_of(m));
  if (flavor == LinearFlavor::pgl || flavor == LinearFlavor::pgammal) {
    Mat d = Mat::identity(k, n);
    d.at(0, 0) = k->generator();
    gens.push_back(ps.perm_of(d));
  }
  if (flavor == LinearFlavor::psigmal || flavor == LinearFlavor::pgammal) {
    if (f > 1) gens.push_back(ps.frobenius_perm());
  }
  const char* name = flavor == LinearFlavor::psl       ? "PSL"
                     : flavor == LinearFlavor::pgl     ? "PGL"
                     : flavor == LinearFlavor::psigmal ? "PSigmaL"
                                                       : "PGammaL";
  std::string label = std::string(name) + "(" + std::to_string(n) + "," +
                      std::to_string(k->q()) + ")";
  return permcore::make_group(ps.size(), std::move(gens), label);
}

GroupRef linear_group_dual(unsigned n, u64 p, unsigned f, bool with_diagonal,
                           bool with_frobenius) {
  if (n < 3) throw std::invalid_argument("linear_group_dual: needs n >= 3");
  FieldRef k = get_field(p, f);
  ProjectiveSpace ps(k, n);
  Point half = ps.size();
  auto doubled = [&](const Perm& on_points, const Perm& on_lines) {
    std::vector<Point> img(2 * half);
    for (Point i = 0; i < half; ++i) {
      img[i] = on_points[i];
      img[half + i] = half + on_lines[i];
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  auto add_matrix = [&](const Mat& m) {
    // Hyperplanes are indexed by normal vectors; v -> v*M sends the
    // hyperplane with normal w to the one with normal w * (M^-1)^T.
    gens.push_back(doubled(ps.perm_of(m), ps.perm_of(m.inverse().transposed())));
  };
  for (const Mat& m : sl_generators(k, n)) add_matrix(m);
  if (with_diagonal) {
    Mat d = Mat::identity(k, n);
    d.at(0, 0) = k->generator();
    add_matrix(d);
  }
  if (with_frobenius && f > 1) {
    Perm fr = ps.frobenius_perm();
    gens.push_back(doubled(fr, fr));
  }
  // The duality swaps each point with the hyperplane having the same
  // coordinates; it conjugates the linear action to inverse-transpose.
  {
    std::vector<Point> img(2 * half);
    for (Point i = 0; i < half; ++i) {
      img[i] = half + i;
      img[half + i] = i;
    }
    gens.push_back(Perm(std::move(img)));
  }
  std::string label = "PSL(" + std::to_string(n) + "," + std::to_string(k->q()) + ").dual";
  return permcore::make_group(2 * half, std::move(gens), label);
}

GroupRef affine_group(unsigned n, u64 p) {
  FieldRef k = get_field(p, 1);
  u64 deg64 = numtheory::pow_checked(p, n);
  if (deg64 > (1u << 24)) throw std::invalid_argument("affine_group: degree too large");
  Point deg = static_cast<Point>(deg64);

  auto decode = [&](Point c) {
    std::vector<u64> v(n);
    u64 x = c;
    for (unsigned i = 0; i < n; ++i) {
      v[i] = x % p;
      x /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<u64>& v) {
    u64 c = 0;
    for (unsigned i = n; i-- > 0;) c = c * p + v[i];
    return static_cast<Point>(c);
  };

  std::vector<Perm> gens;
  // translation by e_0
  {
    std::vector<Point> img(deg);
    for (Point c = 0; c < deg; ++c) {
      auto v = decode(c);
      v[0] = (v[0] + 1) % p;
      img[c] = encode(v);
    }
    gens.push_back(Perm(std::move(img)));
  }
  auto add_matrix = [&](const Mat& m) {
    std::vector<Point> img(deg);
    for (Point c = 0; c < deg; ++c) img[c] = encode(apply_row(m, decode(c)));
    gens.push_back(Perm(std::move(img)));
  };
  for (const Mat& m : sl_generators(k, n)) add_matrix(m);
  if (p > 2) {
    Mat d = Mat::identity(k, n);
    d.at(0, 0) = k->generator();
    add_matrix(d);
  }
  std::string label = "AGL(" + std::to_string(n) + "," + std::to_string(p) + ")";
  return permcore::make_group(deg, std::move(gens), label);
}

GroupRef symplectic_group_psp4(u64 p, unsigned f) {
  FieldRef k = get_field(p, f);
  const unsigned n = 4;
  ProjectiveSpace ps(k, n);
  // Alternating form with Gram matrix [[0,1],[-1,0]] x 2.
  auto form = [&](const std::vector<u64>& x, const std::vector<u64>& y) {
    u64 s = 0;
    s = k->add(s, k->sub(k->mul(x[0], y[1]), k->mul(x[1], y[0])));
    s = k->add(s, k->sub(k->mul(x[2], y[3]), k->mul(x[3], y[2])));
    return s;
  };
  std::vector<Perm> gens;
  for (Point vi = 0; vi < ps.size(); ++vi) {
    const auto& v = ps.point(vi);
    // transvection x -> x + B(x, v) v
    std::vector<Point> img(ps.size());
    for (Point i = 0; i < ps.size(); ++i) {
      std::vector<u64> x = ps.point(i);
      u64 c = form(x, v);
      for (unsigned j = 0; j < n; ++j) x[j] = k->add(x[j], k->mul(c, v[j]));
      img[i] = ps.index_of(x);
    }
    gens.push_back(Perm(std::move(img)));
  }
  std::string label = "PSp(4," + std::to_string(k->q()) + ")";
  return permcore::make_group(ps.size(), std::move(gens), label);
}

u64 unitriangular_exponent(unsigned n, u64 p, unsigned f) {
  FieldRef k = get_field(p, f);
  unsigned cells = n * (n - 1) / 2;
  u64 total = 1;
  for (unsigned i = 0; i < cells; ++i) total *= k->q();
  u64 best = 1;
  for (u64 code = 0; code < total; ++code) {
    Mat m = Mat::identity(k, n);
    u64 c = code;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) {
        m.at(i, j) = c % k->q();
        c /= k->q();
      }
    Mat acc = m;
    u64 ord = 1;
    Mat id = Mat::identity(k, n);
    while (!(acc == id)) {
      acc = acc * m;
      ++ord;
    }
    best = std::max(best, ord);
  }
  return best;
}

}  // namespace atlas
