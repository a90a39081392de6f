#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cdg::nt {

using Integer = mpz_class;

/// Deterministic Miller-Rabin below 2^64, BPSW + >=40 probabilistic rounds above.
bool is_prime(const Integer& n);

/// n = base^exponent * coprime_part with base prime and base not dividing coprime_part.
struct PPart {
    Integer base;
    unsigned exponent = 0;
    Integer p_part;
    Integer coprime_part;
};

/// Unique decomposition n = p^a * m with p prime, p ∤ m. Rejects n < 1 and non-prime p.
PPart p_part(const Integer& n, const Integer& p);

/// Largest odd divisor of n (n >= 1).
Integer odd_part(const Integer& n);

/// (p, e) with n = p^e, e >= 1, if n is a prime power; empty for 1 and non-prime-power n.
std::optional<std::pair<Integer, unsigned>> prime_power(const Integer& n);

inline bool is_prime_power(const Integer& n) { return prime_power(n).has_value(); }

/// Largest r with r^k <= n. Requires n >= 0, k >= 1.
Integer nth_root(const Integer& n, unsigned k);

/// 2-adic valuation.
unsigned v2(const Integer& n);

Integer pow_u(const Integer& base, unsigned e);

/// Trial-division factorization (primes ascending, exponents positive). Intended for
/// smooth or small inputs; throws if a cofactor survives that is neither prime nor a
/// detectable prime power.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

/// "2^4·3^2·7"-style rendering of a positive integer; "1" for one.
std::string factored_string(const Integer& n);

/// All prime powers in [lo, hi], ascending.
std::vector<Integer> prime_powers_in(const Integer& lo, const Integer& hi);

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64_checked(uint64_t a, uint64_t b);  // throws on 64-bit overflow

}  // namespace cdg::nt
