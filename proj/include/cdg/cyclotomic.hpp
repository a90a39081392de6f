#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cdg {

/// Canonical integral basis of Z[zeta_e]. Writing e = prod p^a, the basis roots are
/// the zeta_e^u whose residue mod every p^a has top base-p digit != p-1; any other
/// root rewrites through 1 + zeta_{p^a}^{(p-1)p^(a-1)} + ... + relations. Reduction
/// works exponent-by-exponent via CRT, so sparse values stay sparse.
class CycloBasis {
public:
    static std::shared_ptr<const CycloBasis> get(uint32_t conductor);

    uint32_t conductor() const { return e_; }

    /// Adds coeff * zeta^u to acc, rewriting into basis roots.
    void reduce_root(uint32_t u, const mpz_class& coeff, std::map<uint32_t, mpz_class>& acc) const;

private:
    explicit CycloBasis(uint32_t e);
    struct Factor {
        uint32_t p;
        uint32_t pa;    // p^a
        uint32_t pam1;  // p^(a-1)
        uint64_t crt;   // ≡ 1 mod pa, ≡ 0 mod e/pa
    };
    uint32_t e_;
    std::vector<Factor> factors_;
};

/// Exact cyclotomic integer with a fixed conductor; equality of values is equality
/// of canonical-basis coordinates.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(mpz_class(0)) {}
    explicit Cyclotomic(mpz_class n);  // integer value, conductor 1

    static Cyclotomic zero(uint32_t conductor);
    static Cyclotomic integer(uint32_t conductor, mpz_class n);
    /// sum of coeff * zeta_conductor^exp over the given (exp, coeff) roots.
    static Cyclotomic from_roots(uint32_t conductor,
                                 const std::vector<std::pair<uint32_t, mpz_class>>& roots);

    uint32_t conductor() const { return basis_->conductor(); }
    const std::vector<std::pair<uint32_t, mpz_class>>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_integer() const;
    const mpz_class& integer_value() const;  // throws unless is_integer()

    Cyclotomic conjugate() const;  // complex conjugation, zeta -> zeta^(-1)

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }

    bool operator==(const Cyclotomic& b) const;
    bool operator==(const mpz_class& n) const;

    /// Deterministic total order (conductor, then term sequence); used for row sorting.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    /// Length-e coefficient vector on zeta^0..zeta^(e-1) (canonical form; non-basis
    /// positions are zero).
    std::vector<mpz_class> dense_coefficients() const;

    std::string to_string() const;

private:
    std::shared_ptr<const CycloBasis> basis_;
    std::vector<std::pair<uint32_t, mpz_class>> terms_;  // sorted, nonzero, basis exponents

    static void align(Cyclotomic& a, Cyclotomic& b);  // promote integer conductors
    static Cyclotomic from_acc(std::shared_ptr<const CycloBasis> basis,
                               std::map<uint32_t, mpz_class>&& acc);
};

}  // namespace cdg
