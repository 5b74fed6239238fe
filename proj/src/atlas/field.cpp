#include "atlas/field.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "numtheory/numtheory.hpp"

namespace atlas {

namespace {

// Polynomials over GF(p) as coefficient vectors c0..cd with digits < p.

std::vector<u64> poly_from_code(u64 code, u64 p) {
  std::vector<u64> c;
  while (code) {
    c.push_back(code % p);
    code /= p;
  }
  if (c.empty()) c.push_back(0);
  return c;
}

unsigned poly_deg(const std::vector<u64>& a) {
  unsigned d = static_cast<unsigned>(a.size());
  while (d > 1 && a[d - 1] == 0) --d;
  return d - 1;
}

std::vector<u64> poly_mul_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                              const std::vector<u64>& m, u64 p) {
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  unsigned dm = poly_deg(m);
  u64 lead_inv = 1;  // m is monic
  for (size_t i = prod.size(); i-- > dm;) {
    if (!prod[i]) continue;
    u64 c = (prod[i] * lead_inv) % p;
    for (unsigned j = 0; j <= dm; ++j) {
      u64 sub = (c * m[j]) % p;
      size_t k = i - dm + j;
      prod[k] = (prod[k] + p - sub) % p;
    }
  }
  prod.resize(dm);
  return prod;
}

std::vector<u64> poly_pow_mod(std::vector<u64> base, u64 e, const std::vector<u64>& m, u64 p) {
  std::vector<u64> acc(poly_deg(m), 0);
  acc[0] = 1;
  while (e) {
    if (e & 1) acc = poly_mul_mod(acc, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return acc;
}

bool poly_is_one(const std::vector<u64>& a) {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

u64 mod_inverse(u64 a, u64 p) {
  // Fermat
  u64 r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Remainder of a modulo b, with exact digit arithmetic mod p.
std::vector<u64> poly_rem(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
  unsigned db = poly_deg(b);
  u64 li = mod_inverse(b[db], p);
  while (true) {
    unsigned da = poly_deg(a);
    if (da < db || (da == 0 && a[0] == 0)) break;
    u64 c = (a[da] * li) % p;
    for (unsigned j = 0; j <= db; ++j) {
      u64 sub = (c * b[j]) % p;
      a[da - db + j] = (a[da - db + j] + p - sub) % p;
    }
  }
  return a;
}

bool is_irreducible(const std::vector<u64>& m, u64 p) {
  unsigned d = poly_deg(m);
  if (d == 1) return true;
  // no divisor of degree <= d/2
  for (unsigned e = 1; e <= d / 2; ++e) {
    u64 count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (u64 code = count; code < 2 * count; ++code) {  // monic of degree e
      auto cand = poly_from_code(code, p);
      auto r = poly_rem(m, cand, p);
      bool zero = true;
      for (u64 c : r)
        if (c) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

bool is_primitive_poly(const std::vector<u64>& m, u64 p, u64 q) {
  if (!is_irreducible(m, p)) return false;
  // order of x modulo m must be exactly q-1
  std::vector<u64> x(poly_deg(m), 0);
  if (x.size() < 2) return false;
  x[1] = 1;
  auto fac = numtheory::arith(q - 1);
  for (auto [r, e] : fac.prime_powers) {
    (void)e;
    if (poly_is_one(poly_pow_mod(x, (q - 1) / r, m, p))) return false;
  }
  return poly_is_one(poly_pow_mod(x, q - 1, m, p));
}

}  // namespace

Field::Field(u64 p, unsigned f) : p_(p), f_(f) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("Field: p must be prime");
  if (f == 0) throw std::invalid_argument("Field: f must be positive");
  q_ = 1;
  for (unsigned i = 0; i < f; ++i) {
    if (q_ > (1ull << 32) / p) throw std::invalid_argument("Field: p^f exceeds 2^32");
    q_ *= p;
  }

  if (f_ == 1) {
    poly_ = {0, 1};  // placeholder; arithmetic is plain residues
    // smallest primitive root
    auto fac = numtheory::arith(p - 1);
    for (u64 g = 1; g < p; ++g) {
      bool ok = p == 2 || true;
      for (auto [r, e] : fac.prime_powers) {
        (void)e;
        u64 t = 1, b = g, ee = (p - 1) / r;
        while (ee) {
          if (ee & 1) t = t * b % p;
          b = b * b % p;
          ee >>= 1;
        }
        if (t == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen1_ = g;
        break;
      }
    }
  } else {
    // smallest monic primitive polynomial of degree f, by coefficient code
    u64 lead = 1;
    for (unsigned i = 0; i < f; ++i) lead *= p;
    bool found = false;
    for (u64 code = lead; code < 2 * lead; ++code) {
      auto cand = poly_from_code(code, p);
      if (is_primitive_poly(cand, p, q_)) {
        poly_ = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("Field: no primitive polynomial found");
  }

  if (q_ <= (1ull << 16)) {
    // discrete-log tables over the generator
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    u64 cur = 1;
    for (u64 k = 0; k < q_ - 1; ++k) {
      exp_[k] = cur;
      log_[cur] = k;
      cur = mul_slow(cur, generator());
    }
    if (cur != 1) throw std::logic_error("Field: generator order mismatch");
  }
}

u64 Field::add(u64 a, u64 b) const {
  if (f_ == 1) return (a + b) % p_;
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < f_; ++i) {
    u64 da = a % p_, db = b % p_;
    r += ((da + db) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

u64 Field::neg(u64 a) const {
  if (f_ == 1) return (p_ - a % p_) % p_;
  u64 r = 0, mult = 1;
  for (unsigned i = 0; i < f_; ++i) {
    u64 da = a % p_;
    r += ((p_ - da) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::mul_slow(u64 a, u64 b) const {
  if (f_ == 1) return a * b % p_;
  std::vector<u64> pa = poly_from_code(a, p_), pb = poly_from_code(b, p_);
  pa.resize(f_, 0);
  pb.resize(f_, 0);
  auto r = poly_mul_mod(pa, pb, poly_, p_);
  u64 code = 0, mult = 1;
  for (unsigned i = 0; i < f_; ++i) {
    code += r[i] * mult;
    mult *= p_;
  }
  return code;
}

u64 Field::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  return mul_slow(a, b);
}

u64 Field::inv(u64 a) const {
  if (a == 0) throw std::invalid_argument("Field: inverse of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

u64 Field::pow(u64 a, u64 e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (!exp_.empty()) {
    u64 k = log_[a];
    return exp_[static_cast<u64>((static_cast<unsigned __int128>(k) * (e % (q_ - 1))) % (q_ - 1))];
  }
  u64 r = 1;
  e %= (q_ - 1);
  u64 b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

u64 Field::element_order(u64 a) const {
  if (a == 0) throw std::invalid_argument("Field: order of zero");
  auto fac = numtheory::arith(q_ - 1);
  u64 ord = q_ - 1;
  for (auto [r, e] : fac.prime_powers) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, ord / r) == 1)
        ord /= r;
      else
        break;
    }
  }
  return ord;
}

FieldRef get_field(u64 p, unsigned f) {
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldRef> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(p, f);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const Field>(p, f);
  cache.emplace(key, field);
  return field;
}

Mat::Mat(FieldRef field, unsigned dim) : k(std::move(field)), n(dim), a(dim * dim, 0) {}

Mat Mat::identity(FieldRef field, unsigned dim) {
  Mat m(std::move(field), dim);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(k, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      u64 s = 0;
      for (unsigned l = 0; l < n; ++l) s = k->add(s, k->mul(at(i, l), o.at(l, j)));
      r.at(i, j) = s;
    }
  return r;
}

Mat Mat::transposed() const {
  Mat r(k, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::inverse() const {
  Mat aug = *this;
  Mat inv = Mat::identity(k, n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && aug.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("Mat: singular matrix");
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(aug.a[pivot * n + j], aug.a[col * n + j]);
        std::swap(inv.a[pivot * n + j], inv.a[col * n + j]);
      }
    }
    u64 pi = k->inv(aug.at(col, col));
    for (unsigned j = 0; j < n; ++j) {
      aug.at(col, j) = k->mul(aug.at(col, j), pi);
      inv.at(col, j) = k->mul(inv.at(col, j), pi);
    }
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || aug.at(i, col) == 0) continue;
      u64 c = aug.at(i, col);
      for (unsigned j = 0; j < n; ++j) {
        aug.at(i, j) = k->sub(aug.at(i, j), k->mul(c, aug.at(col, j)));
        inv.at(i, j) = k->sub(inv.at(i, j), k->mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

std::vector<u64> apply_row(const Mat& m, const std::vector<u64>& v) {
  std::vector<u64> r(m.n, 0);
  for (unsigned j = 0; j < m.n; ++j) {
    u64 s = 0;
    for (unsigned i = 0; i < m.n; ++i) s = m.k->add(s, m.k->mul(v[i], m.at(i, j)));
    r[j] = s;
  }
  return r;
}

}  // namespace atlas
