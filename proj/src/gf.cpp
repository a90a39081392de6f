#include "cdg/gf.hpp"

#include <sstream>
#include <stdexcept>

#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

// Dense polynomial arithmetic over F_p on small vectors (coefficient of x^i at index i).
using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    trim(r);
    return r;
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
    // m monic
    while (a.size() >= m.size()) {
        uint32_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t t = static_cast<uint64_t>(c) * m[i] % p;
                a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - t) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < m.size()) break;
    }
    return a;
}

Poly poly_powmod(Poly base, mpz_class k, const Poly& m, uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    auto inv_mod = [&](uint32_t x) {
        uint32_t r = 1, e = p - 2, base = x;
        while (e) {
            if (e & 1) r = static_cast<uint32_t>(static_cast<uint64_t>(r) * base % p);
            base = static_cast<uint32_t>(static_cast<uint64_t>(base) * base % p);
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b with b made monic
        uint32_t lead_inv = inv_mod(b.back());
        Poly bm = b;
        for (auto& c : bm) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * lead_inv % p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& f, uint32_t p) {
    // f monic of degree e: irreducible iff x^(p^e) == x mod f and
    // gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
    uint32_t e = static_cast<uint32_t>(f.size() - 1);
    Poly x{0, 1};
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    Poly xq = poly_powmod(x, pe, f, p);
    Poly diff = xq;
    if (diff.empty()) diff = {0};
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (uint32_t r = 2; r <= e; ++r) {
        if (e % r != 0 || !nt::is_prime(mpz_class(r))) continue;
        mpz_class per;
        mpz_ui_pow_ui(per.get_mpz_t(), p, e / r);
        Poly xr = poly_powmod(x, per, f, p);
        if (xr.size() < 2) xr.resize(2, 0);
        xr[1] = (xr[1] + p - 1) % p;
        trim(xr);
        Poly g = poly_gcd(f, xr, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

Gf::Gf(uint32_t p, uint32_t e) : p_(p), e_(e) {
    if (!nt::is_prime(mpz_class(p))) throw std::invalid_argument("Gf: p must be prime");
    if (e < 1 || e > 16) throw std::invalid_argument("Gf: extension degree out of range");
    mpz_class qz;
    mpz_ui_pow_ui(qz.get_mpz_t(), p, e);
    if (qz > 1u << 20) throw std::invalid_argument("Gf: field too large");
    q_ = static_cast<uint32_t>(qz.get_ui());

    // Lexicographically least monic irreducible: scan lower-coefficient encodings ascending.
    def_poly_.assign(e + 1, 0);
    def_poly_[e] = 1;
    if (e == 1) {
        // x itself: reduction is just mod p; def poly x + 0.
    } else {
        bool found = false;
        for (uint32_t code = 0; code < q_ && !found; ++code) {
            Poly f(e + 1, 0);
            uint32_t c = code;
            for (uint32_t i = 0; i < e; ++i) { f[i] = c % p; c /= p; }
            f[e] = 1;
            if (is_irreducible(f, p)) {
                def_poly_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("Gf: no irreducible polynomial found");
    }

    if (static_cast<uint64_t>(q_) * q_ <= (1u << 18))
        mul_table_.assign(static_cast<size_t>(q_) * q_, 0);

    if (!mul_table_.empty()) {
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = a; b < q_; ++b) {
                uint32_t m = mul_poly(a, b);
                mul_table_[static_cast<size_t>(a) * q_ + b] = m;
                mul_table_[static_cast<size_t>(b) * q_ + a] = m;
            }
    }

    inv_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) {
        if (inv_[a]) continue;
        uint32_t b = pow(a, q_ - 2);
        inv_[a] = b;
        inv_[b] = a;
    }

    frob_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a) frob_[a] = pow(a, p_);

    // Smallest multiplicative generator.
    auto fac = nt::factor(mpz_class(q_ - 1));
    for (uint32_t g = 1; g < q_; ++g) {
        bool ok = q_ > 2;
        for (const auto& [pr, ex] : fac) {
            mpz_class d = mpz_class(q_ - 1) / pr;
            if (pow(g, d.get_ui()) == 1) { ok = false; break; }
        }
        if (q_ == 2 && g == 1) ok = true;
        if (ok) { generator_ = g; break; }
    }
}

uint32_t Gf::mul_poly(uint32_t a, uint32_t b) const {
    if (e_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    Poly fa, fb;
    uint32_t t = a;
    while (t) { fa.push_back(t % p_); t /= p_; }
    t = b;
    while (t) { fb.push_back(t % p_); t /= p_; }
    Poly r = poly_mod(poly_mul(fa, fb, p_), def_poly_, p_);
    uint32_t code = 0;
    for (size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return code;
}

uint32_t Gf::add(uint32_t a, uint32_t b) const {
    if (e_ == 1) return (a + b) % p_;
    uint32_t code = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        code += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return code;
}

uint32_t Gf::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Gf::neg(uint32_t a) const {
    if (e_ == 1) return (p_ - a) % p_;
    uint32_t code = 0, mult = 1;
    for (uint32_t i = 0; i < e_; ++i) {
        code += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return code;
}

uint32_t Gf::mul(uint32_t a, uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_poly(a, b);
}

uint32_t Gf::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("Gf: inverse of zero");
    return inv_[a];
}

uint32_t Gf::pow(uint32_t a, uint64_t k) const {
    uint32_t r = 1;
    while (k) {
        if (k & 1) r = mul_poly(r, a);
        a = mul_poly(a, a);
        k >>= 1;
    }
    return r;
}

uint32_t Gf::from_int(int64_t n) const {
    int64_t m = n % static_cast<int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<uint32_t>(m);
}

std::string Gf::defining_poly_string() const {
    std::ostringstream os;
    os << "x^" << e_;
    for (uint32_t i = e_; i-- > 0;) {
        if (i >= def_poly_.size() || def_poly_[i] == 0) continue;
        os << " + ";
        if (def_poly_[i] != 1 || i == 0) os << def_poly_[i];
        if (i >= 1) {
            if (def_poly_[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace cdg
