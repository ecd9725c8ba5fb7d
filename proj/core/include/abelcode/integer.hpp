#pragma once

// Exact integer helpers used by the field and orbit layers.
//
// Everything here works on 64-bit operands with 128-bit intermediates, which
// is exact for every field that passes the size policy (at most 2^64 elements).

#include <cstdint>
#include <optional>
#include <vector>

namespace abelcode {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// base^exp, or nullopt on overflow.
std::optional<u64> checked_pow(u64 base, unsigned exp);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);

/// Distinct prime factors in increasing order (small trial division, then
/// Pollard-Brent rho).
std::vector<u64> prime_factors(u64 n);

/// Multiplicative order of q modulo r (r >= 1, gcd(q, r) = 1). ord mod 1 is 1.
u64 multiplicative_order(u64 q, u64 r);

/// Binomial coefficient, saturating at UINT64_MAX.
u64 binomial(u64 n, u64 k);

/// Returns (p, s) with q = p^s, or nullopt if q is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

}  // namespace abelcode
