#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdg {

/// GF(p^e). Elements are encoded as integers in [0, p^e): the base-p digits of the
/// code are the coefficients of the residue polynomial (digit i = coefficient of x^i)
/// modulo the defining polynomial — the lexicographically least monic irreducible of
/// degree e, so element codes are deterministic.
class Gf {
public:
    Gf(uint32_t p, uint32_t e);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws on 0
    uint32_t pow(uint32_t a, uint64_t k) const;
    uint32_t frobenius(uint32_t a) const { return frob_[a]; }  // a^p

    /// Embedding of the prime field: n mod p as a field element.
    uint32_t from_int(int64_t n) const;

    /// A fixed multiplicative generator (smallest element code of order q-1).
    uint32_t generator() const { return generator_; }

    /// Defining polynomial as "x^e + ... " text.
    std::string defining_poly_string() const;
    const std::vector<uint32_t>& defining_poly() const { return def_poly_; }

private:
    uint32_t p_, e_, q_;
    std::vector<uint32_t> def_poly_;  // coefficients c_0..c_e of the monic defining polynomial
    std::vector<uint32_t> frob_;
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> mul_table_;  // q*q when q <= 512, else empty
    uint32_t generator_ = 0;

    uint32_t mul_poly(uint32_t a, uint32_t b) const;
};

}  // namespace cdg
