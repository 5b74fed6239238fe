#include "numtheory/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace numtheory {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent-style rho with a fixed polynomial and seed sequence, so results are
// reproducible.
u64 pollard_rho(u64 n) {
  if (!(n & 1)) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // This witness set is deterministic for all 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

Factored arith(u64 n) {
  if (n == 0) throw std::invalid_argument("arith: n must be positive");
  Factored f;
  f.value = n;
  u64 m = n;
  for (u64 p = 2; p <= 61 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++f.prime_powers[p];
      m /= p;
    }
  }
  factor_into(m, f.prime_powers);
  return f;
}

u64 Factored::phi() const {
  u64 r = 1;
  for (auto [p, e] : prime_powers) {
    r *= p - 1;
    for (unsigned i = 1; i < e; ++i) r *= p;
  }
  return r;
}

u64 Factored::p_part(u64 p) const {
  auto it = prime_powers.find(p);
  if (it == prime_powers.end()) return 1;
  u64 r = 1;
  for (unsigned i = 0; i < it->second; ++i) r *= p;
  return r;
}

std::vector<u64> Factored::divisors() const {
  std::vector<u64> divs{1};
  for (auto [p, e] : prime_powers) {
    size_t sz = divs.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

u64 phi(u64 n) { return arith(n).phi(); }

u64 p_part(u64 n, u64 p) { return arith(n).p_part(p); }

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_checked(u64 a, u64 b) {
  u64 g = std::gcd(a, b);
  u128 r = u128(a / g) * b;
  if (r > u128(INT64_MAX)) throw std::overflow_error("lcm exceeds 2^63-1");
  return static_cast<u64>(r);
}

u64 pow_checked(u64 base, unsigned exp) {
  u128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > u128(INT64_MAX)) throw std::overflow_error("power exceeds 2^63-1");
  }
  return static_cast<u64>(r);
}

namespace {

// Moebius function on small arguments.
int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_m(a) as an exact integer, via prod_{d|m} (a^d - 1)^{mu(m/d)}.
u64 cyclotomic_value(u64 a, unsigned m) {
  u128 num = 1, den = 1;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = moebius(m / d);
    if (mu == 0) continue;
    u128 t = 1;
    for (unsigned i = 0; i < d; ++i) {
      t *= a;
      if (t > (u128(1) << 126) / a) throw std::overflow_error("zsigmondy: a^m too large");
    }
    t -= 1;
    if (mu == 1)
      num *= t;
    else
      den *= t;
  }
  u128 q = num / den;
  if (q * den != num) throw std::logic_error("cyclotomic_value: inexact division");
  if (q > u128(UINT64_MAX)) throw std::overflow_error("zsigmondy: cyclotomic value too large");
  return static_cast<u64>(q);
}

}  // namespace

std::optional<u64> zsigmondy(u64 a, unsigned m) {
  if (a < 2 || m < 1) throw std::invalid_argument("zsigmondy: need a >= 2, m >= 1");
  // Every primitive prime divisor of a^m - 1 divides Phi_m(a); a prime
  // divisor of Phi_m(a) is primitive precisely when it does not divide m.
  u64 c = cyclotomic_value(a, m);
  auto f = arith(c == 0 ? 1 : c);
  std::optional<u64> best;
  for (auto [p, e] : f.prime_powers) {
    (void)e;
    if (m % p == 0) continue;
    if (!best || p < *best) best = p;
  }
  return best;
}

u64 lemma_exponent_bound(u64 n, u64 p) {
  if (n < 1 || p < 2) throw std::invalid_argument("lemma_exponent_bound: need n >= 1, p >= 2");
  u64 q = 1;
  while (q < n) {
    if (q > UINT64_MAX / p) throw std::overflow_error("lemma_exponent_bound overflow");
    q *= p;
  }
  return q;
}

std::vector<std::pair<unsigned, u64>> affine_dimension_pairs() {
  std::vector<std::pair<unsigned, u64>> out;
  for (unsigned n = 3; n <= 64; ++n) {
    for (u64 p = 2; p <= 64; ++p) {
      if (!is_prime(p)) continue;
      u64 half = (n + 1) / 2;  // ceil(n/2)
      // ceil(log_p(n+1)) = k with p^(k-1) < n+1 <= p^k
      u64 k = 0, q = 1;
      while (q < n + 1) {
        q *= p;
        ++k;
      }
      if (half <= k) out.emplace_back(n, p);
    }
  }
  return out;
}

bool wreath_filter(u64 n, unsigned k, WreathTop variant) {
  if (n < 5) throw std::invalid_argument("wreath_filter: requires n >= 5");
  if (k < 2) throw std::invalid_argument("wreath_filter: requires k >= 2");
  u128 lhs = 1;
  for (unsigned i = 0; i < k; ++i) lhs *= n;
  u128 rhs;
  if (variant == WreathTop::transitive) {
    u64 nk = n * k;
    rhs = u128(nk) * nk * phi(nk);
  } else {
    u64 m = 2 * n;
    rhs = u128(m) * m * phi(m);
  }
  return rhs % lhs == 0;
}

}  // namespace numtheory
