#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace numtheory {

using u64 = std::uint64_t;

/// Exact prime factorization of a 63-bit integer, with the derived
/// quantities (totient, p-parts, divisor list) the rest of the engine needs.
struct Factored {
  u64 value = 1;
  std::map<u64, unsigned> prime_powers;  // prime -> exponent

  u64 phi() const;
  u64 p_part(u64 p) const;
  std::vector<u64> divisors() const;  // ascending
};

bool is_prime(u64 n);

/// Factor n by trial division plus Pollard rho. Throws std::invalid_argument
/// on n == 0.
Factored arith(u64 n);

u64 phi(u64 n);
u64 p_part(u64 n, u64 p);
u64 gcd(u64 a, u64 b);
u64 lcm_checked(u64 a, u64 b);  // throws std::overflow_error past 2^63-1

u64 pow_checked(u64 base, unsigned exp);  // throws std::overflow_error

/// Smallest primitive prime divisor of a^m - 1, i.e. the least prime r
/// dividing a^m - 1 but no a^l - 1 with l < m. Empty exactly when no such
/// prime exists.
std::optional<u64> zsigmondy(u64 a, unsigned m);

/// Smallest power of p that is >= n.
u64 lemma_exponent_bound(u64 n, u64 p);

/// All pairs (n, p) with n >= 3, p prime, satisfying
/// ceil(n/2) <= ceil(log_p(n+1)), searched exhaustively over n <= 64,
/// p <= 64 (far beyond where the inequality can still hold).
std::vector<std::pair<unsigned, u64>> affine_dimension_pairs();

enum class WreathTop { transitive, intransitive };

/// Divisibility feasibility for a degree-n^k product action hosting a
/// transitive metacyclic subgroup: n^k | (nk)^2 phi(nk) when the top action
/// is transitive, n^k | (2n)^2 phi(2n) otherwise. Requires n >= 5.
bool wreath_filter(u64 n, unsigned k, WreathTop variant);

}  // namespace numtheory
