#include "cdg/cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cdg/numtheory.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// CycloBasis

std::shared_ptr<const CycloBasis> CycloBasis::get(uint32_t conductor) {
    static std::mutex mu;
    static std::map<uint32_t, std::shared_ptr<const CycloBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    auto basis = std::shared_ptr<const CycloBasis>(new CycloBasis(conductor));
    cache.emplace(conductor, basis);
    return basis;
}

CycloBasis::CycloBasis(uint32_t e) : e_(e) {
    if (e < 1) throw std::invalid_argument("CycloBasis: conductor must be positive");
    for (const auto& [pz, a] : nt::factor(mpz_class(e))) {
        Factor f;
        f.p = static_cast<uint32_t>(pz.get_ui());
        f.pa = 1;
        for (unsigned i = 0; i < a; ++i) f.pa *= f.p;
        f.pam1 = f.pa / f.p;
        uint32_t m = e / f.pa;
        // m^{-1} mod pa by Euler (pa a prime power, gcd(m, pa) = 1)
        uint64_t phi = static_cast<uint64_t>(f.pam1) * (f.p - 1);
        uint64_t base = m % f.pa, r = 1, k = phi - 1;
        while (k) {
            if (k & 1) r = r * base % f.pa;
            base = base * base % f.pa;
            k >>= 1;
        }
        // crt ≡ 1 (mod pa), ≡ 0 (mod e/pa)
        f.crt = static_cast<uint64_t>(m) % e * (r % e) % e;
        factors_.push_back(f);
    }
}

void CycloBasis::reduce_root(uint32_t u, const mpz_class& coeff,
                             std::map<uint32_t, mpz_class>& acc) const {
    if (coeff == 0) return;
    for (const Factor& f : factors_) {
        uint32_t r = u % f.pa;
        if (r / f.pam1 == f.p - 1) {
            // zeta^u rewrites as -sum of the p-1 roots whose residue mod p^a is
            // (r mod p^(a-1)) + j*p^(a-1), other CRT components unchanged.
            uint32_t rbase = r % f.pam1;
            mpz_class neg = -coeff;
            for (uint32_t j = 0; j + 1 < f.p; ++j) {
                uint32_t rnew = rbase + j * f.pam1;
                uint64_t shift = (static_cast<uint64_t>(rnew) + f.pa - r) % f.pa;
                uint32_t unew = static_cast<uint32_t>((u + shift * f.crt) % e_);
                reduce_root(unew, neg, acc);
            }
            return;
        }
    }
    auto [it, inserted] = acc.emplace(u, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) acc.erase(it);
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic(mpz_class n) : basis_(CycloBasis::get(1)) {
    if (n != 0) terms_.emplace_back(0u, std::move(n));
}

Cyclotomic Cyclotomic::zero(uint32_t conductor) {
    Cyclotomic c;
    c.basis_ = CycloBasis::get(conductor);
    return c;
}

Cyclotomic Cyclotomic::integer(uint32_t conductor, mpz_class n) {
    Cyclotomic c = zero(conductor);
    if (n != 0) c.terms_.emplace_back(0u, std::move(n));
    return c;
}

Cyclotomic Cyclotomic::from_roots(uint32_t conductor,
                                  const std::vector<std::pair<uint32_t, mpz_class>>& roots) {
    auto basis = CycloBasis::get(conductor);
    std::map<uint32_t, mpz_class> acc;
    for (const auto& [u, c] : roots) basis->reduce_root(u % conductor, c, acc);
    return from_acc(std::move(basis), std::move(acc));
}

Cyclotomic Cyclotomic::from_acc(std::shared_ptr<const CycloBasis> basis,
                                std::map<uint32_t, mpz_class>&& acc) {
    Cyclotomic c;
    c.basis_ = std::move(basis);
    c.terms_.reserve(acc.size());
    for (auto& [u, v] : acc)
        if (v != 0) c.terms_.emplace_back(u, std::move(v));
    return c;
}

bool Cyclotomic::is_integer() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

const mpz_class& Cyclotomic::integer_value() const {
    static const mpz_class zero_val(0);
    if (terms_.empty()) return zero_val;
    if (terms_.size() == 1 && terms_[0].first == 0) return terms_[0].second;
    throw std::logic_error("Cyclotomic: value is not rational-integral");
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.conductor() == b.conductor()) return;
    if (a.is_integer() && a.conductor() == 1) {
        mpz_class v = a.integer_value();
        a = Cyclotomic::integer(b.conductor(), std::move(v));
        return;
    }
    if (b.is_integer() && b.conductor() == 1) {
        mpz_class v = b.integer_value();
        b = Cyclotomic::integer(a.conductor(), std::move(v));
        return;
    }
    throw std::invalid_argument("Cyclotomic: conductor mismatch");
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    std::map<uint32_t, mpz_class> acc;
    for (const auto& [u, c] : x.terms_) acc[u] = c;
    for (const auto& [u, c] : y.terms_) {
        auto [it, inserted] = acc.emplace(u, c);
        if (!inserted) it->second += c;
    }
    return Cyclotomic::from_acc(x.basis_, std::move(acc));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    std::map<uint32_t, mpz_class> acc;
    for (const auto& [u, c] : x.terms_) acc[u] = c;
    for (const auto& [u, c] : y.terms_) {
        auto [it, inserted] = acc.emplace(u, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) acc.erase(it);
        }
    }
    return Cyclotomic::from_acc(x.basis_, std::move(acc));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    uint32_t e = x.conductor();
    std::map<uint32_t, mpz_class> acc;
    mpz_class prod;
    for (const auto& [u, c] : x.terms_)
        for (const auto& [v, d] : y.terms_) {
            prod = c * d;
            x.basis_->reduce_root((u + v) % e, prod, acc);
        }
    return Cyclotomic::from_acc(x.basis_, std::move(acc));
}

Cyclotomic Cyclotomic::conjugate() const {
    uint32_t e = conductor();
    std::map<uint32_t, mpz_class> acc;
    for (const auto& [u, c] : terms_) basis_->reduce_root(u == 0 ? 0 : e - u, c, acc);
    return from_acc(basis_, std::move(acc));
}

bool Cyclotomic::operator==(const Cyclotomic& b) const {
    if (conductor() == b.conductor()) return terms_ == b.terms_;
    Cyclotomic x = *this, y = b;
    align(x, y);
    return x.terms_ == y.terms_;
}

bool Cyclotomic::operator==(const mpz_class& n) const {
    if (terms_.empty()) return n == 0;
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == n;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.terms_[i].first != b.terms_[i].first)
            return a.terms_[i].first < b.terms_[i].first ? -1 : 1;
        int c = mpz_cmp(a.terms_[i].second.get_mpz_t(), b.terms_[i].second.get_mpz_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::vector<mpz_class> Cyclotomic::dense_coefficients() const {
    std::vector<mpz_class> out(conductor(), mpz_class(0));
    for (const auto& [u, c] : terms_) out[u] = c;
    return out;
}

std::string Cyclotomic::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, c] : terms_) {
        mpz_class abs = c >= 0 ? c : mpz_class(-c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c >= 0 ? " + " : " - ");
        }
        first = false;
        if (u == 0) {
            os << abs.get_str();
        } else {
            if (abs != 1) os << abs.get_str() << "*";
            os << "z^" << u;
        }
    }
    return os.str();
}

}  // namespace cdg
