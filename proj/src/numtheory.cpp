#include "cdg/numtheory.hpp"

#include <algorithm>
#include <sstream>

namespace cdg::nt {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic witness set for all n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // Extract low 64 bits exactly.
        uint64_t v = mpz_get_ui(n.get_mpz_t());
        if (mpz_sizeinbase(n.get_mpz_t(), 2) > 32) {
            Integer hi = n >> 32;
            v = (static_cast<uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
                (mpz_get_ui(n.get_mpz_t()) & 0xffffffffull);
        }
        return miller_rabin_u64(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PPart p_part(const Integer& n, const Integer& p) {
    if (n < 1) throw std::invalid_argument("p_part: n must be positive");
    if (!is_prime(p)) throw std::invalid_argument("p_part: p must be prime");
    PPart out;
    out.base = p;
    out.coprime_part = n;
    out.p_part = 1;
    while (mpz_divisible_p(out.coprime_part.get_mpz_t(), p.get_mpz_t())) {
        out.coprime_part /= p;
        out.p_part *= p;
        ++out.exponent;
    }
    return out;
}

Integer odd_part(const Integer& n) {
    if (n < 1) throw std::invalid_argument("odd_part: n must be positive");
    Integer m = n;
    while (mpz_even_p(m.get_mpz_t())) m >>= 1;
    return m;
}

unsigned v2(const Integer& n) {
    if (n == 0) throw std::invalid_argument("v2: n must be nonzero");
    return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

Integer nth_root(const Integer& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("nth_root: n must be nonnegative");
    if (k < 1) throw std::invalid_argument("nth_root: k must be positive");
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Integer pow_u(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::optional<std::pair<Integer, unsigned>> prime_power(const Integer& n) {
    if (n < 2) return std::nullopt;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        // n = m^k for some k >= 2; find the maximal exponent, then the base must be prime.
        for (unsigned k = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)); k >= 2; --k) {
            Integer r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                if (is_prime(r)) return std::make_pair(r, k);
                return std::nullopt;  // maximal-exponent base composite => not a prime power
            }
        }
        return std::nullopt;
    }
    if (is_prime(n)) return std::make_pair(n, 1u);
    return std::nullopt;
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
    if (n < 1) throw std::invalid_argument("factor: n must be positive");
    std::vector<std::pair<Integer, unsigned>> out;
    Integer m = n;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) { m /= p; ++e; }
        if (e) out.emplace_back(p, e);
    };
    strip(Integer(2));
    Integer d = 3;
    while (d * d <= m && d < 2000000) {
        strip(d);
        d += 2;
    }
    if (m > 1) {
        if (is_prime(m)) {
            out.emplace_back(m, 1u);
        } else if (auto pp = prime_power(m)) {
            out.emplace_back(pp->first, pp->second);
        } else {
            throw std::runtime_error("factor: unfactored composite cofactor " + m.get_str());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string factored_string(const Integer& n) {
    if (n == 1) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factor(n)) {
        if (!first) os << "·";
        first = false;
        os << p.get_str();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::vector<Integer> prime_powers_in(const Integer& lo, const Integer& hi) {
    std::vector<Integer> out;
    for (Integer n = std::max(Integer(2), lo); n <= hi; ++n)
        if (is_prime_power(n)) out.push_back(n);
    return out;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

uint64_t lcm_u64_checked(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
    uint64_t g = gcd_u64(a, b);
    uint64_t q = a / g;
    if (q > UINT64_MAX / b) throw std::overflow_error("lcm overflows 64 bits");
    return q * b;
}

}  // namespace cdg::nt
