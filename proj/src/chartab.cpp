#include "cdg/chartab.hpp"

#include <algorithm>

#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic mod l (l < 2^62)

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t l) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % l);
}

uint64_t powmod(uint64_t a, uint64_t k, uint64_t l) {
    uint64_t r = 1 % l;
    a %= l;
    while (k) {
        if (k & 1) r = mulmod(r, a, l);
        a = mulmod(a, a, l);
        k >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t l) { return powmod(a, l - 2, l); }

// Tonelli–Shanks.
uint64_t sqrtmod(uint64_t a, uint64_t l) {
    a %= l;
    if (a == 0) return 0;
    if (powmod(a, (l - 1) / 2, l) != 1) throw std::logic_error("sqrtmod: not a quadratic residue");
    if (l % 4 == 3) return powmod(a, (l + 1) / 4, l);
    uint64_t q = l - 1;
    unsigned s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    uint64_t zq = 2;
    while (powmod(zq, (l - 1) / 2, l) == 1) ++zq;
    uint64_t m = s;
    uint64_t c = powmod(zq, q, l);
    uint64_t t = powmod(a, q, l);
    uint64_t r = powmod(a, (q + 1) / 2, l);
    while (t != 1) {
        uint64_t tt = t;
        uint64_t i = 0;
        while (tt != 1) { tt = mulmod(tt, tt, l); ++i; }
        uint64_t b = powmod(c, 1ull << (m - i - 1), l);
        m = i;
        c = mulmod(b, b, l);
        t = mulmod(t, c, l);
        r = mulmod(r, b, l);
    }
    return r;
}

/// Smallest prime l ≡ 1 (mod e) with l^2 > 4n (guarantees unique lifting and
/// automatically l coprime to |G|).
uint64_t find_dixon_prime(uint64_t n, uint64_t e) {
    mpz_class four_n = mpz_class(static_cast<unsigned long>(n)) * 4;
    for (uint64_t t = 1;; ++t) {
        uint64_t l = t * e + 1;
        mpz_class lz(static_cast<unsigned long>(l));
        if (lz * lz <= four_n) continue;
        if (nt::is_prime(lz)) return l;
        if (t > (1ull << 40)) throw std::runtime_error("no suitable prime found below bound");
    }
}

uint64_t order_e_element(uint64_t l, uint64_t e) {
    // smallest primitive root, then g^((l-1)/e)
    auto fac = nt::factor(mpz_class(static_cast<unsigned long>(l - 1)));
    for (uint64_t g = 2; g < l; ++g) {
        bool primitive = true;
        for (const auto& [p, ex] : fac) {
            uint64_t d = (l - 1) / p.get_ui();
            if (powmod(g, d, l) == 1) { primitive = false; break; }
        }
        if (primitive) return powmod(g, (l - 1) / e, l);
    }
    throw std::logic_error("no primitive root found");
}

// ---------------------------------------------------------------------------
// Dense k x k matrices over F_l

struct ModMatrix {
    uint32_t k = 0;
    std::vector<uint64_t> a;
    ModMatrix() = default;
    explicit ModMatrix(uint32_t k_) : k(k_), a(static_cast<size_t>(k_) * k_, 0) {}
    uint64_t& at(uint32_t i, uint32_t j) { return a[static_cast<size_t>(i) * k + j]; }
    uint64_t at(uint32_t i, uint32_t j) const { return a[static_cast<size_t>(i) * k + j]; }
};

/// Characteristic polynomial via similarity reduction to upper Hessenberg form,
/// then the leading-minor recurrence. Coefficients ascending; monic of degree k.
std::vector<uint64_t> charpoly(ModMatrix h, uint64_t l) {
    uint32_t k = h.k;
    for (uint32_t j = 0; j + 2 < k; ++j) {
        uint32_t piv = 0;
        for (uint32_t r = j + 1; r < k; ++r)
            if (h.at(r, j) != 0) { piv = r; break; }
        if (piv == 0) continue;  // column already zero below the subdiagonal
        if (piv != j + 1) {
            for (uint32_t c = 0; c < k; ++c) std::swap(h.at(piv, c), h.at(j + 1, c));
            for (uint32_t r = 0; r < k; ++r) std::swap(h.at(r, piv), h.at(r, j + 1));
        }
        uint64_t inv = invmod(h.at(j + 1, j), l);
        for (uint32_t r = j + 2; r < k; ++r) {
            uint64_t f = mulmod(h.at(r, j), inv, l);
            if (f == 0) continue;
            for (uint32_t c = 0; c < k; ++c) {
                h.at(r, c) = (h.at(r, c) + l - mulmod(f, h.at(j + 1, c), l)) % l;
            }
            for (uint32_t r2 = 0; r2 < k; ++r2) {
                h.at(r2, j + 1) = (h.at(r2, j + 1) + mulmod(f, h.at(r2, r), l)) % l;
            }
        }
    }
    // p_0 = 1, p_i = charpoly of leading i x i minor.
    std::vector<std::vector<uint64_t>> p(k + 1);
    p[0] = {1};
    for (uint32_t i = 1; i <= k; ++i) {
        // p_i(x) = (x - h[i-1][i-1]) p_{i-1}(x) - sum_{m=1..i-1} h[i-1-m][i-1] *
        //          (prod of subdiagonals) * p_{i-1-m}(x)
        std::vector<uint64_t> cur(i + 1, 0);
        for (uint32_t d = 0; d < p[i - 1].size(); ++d) {
            cur[d + 1] = (cur[d + 1] + p[i - 1][d]) % l;
            cur[d] = (cur[d] + l - mulmod(h.at(i - 1, i - 1), p[i - 1][d], l)) % l;
        }
        uint64_t subprod = 1;
        for (uint32_t m = 1; m < i; ++m) {
            subprod = mulmod(subprod, h.at(i - m, i - m - 1), l);
            if (subprod == 0) break;
            uint64_t coef = mulmod(h.at(i - 1 - m, i - 1), subprod, l);
            if (coef == 0) continue;
            for (uint32_t d = 0; d < p[i - 1 - m].size(); ++d)
                cur[d] = (cur[d] + l - mulmod(coef, p[i - 1 - m][d], l)) % l;
        }
        p[i] = std::move(cur);
    }
    return p[k];
}

std::vector<uint64_t> poly_roots(const std::vector<uint64_t>& poly, uint64_t l) {
    std::vector<uint64_t> roots;
    for (uint64_t x = 0; x < l; ++x) {
        uint64_t v = 0;
        for (size_t d = poly.size(); d-- > 0;) v = (mulmod(v, x, l) + poly[d]) % l;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

/// Nullspace basis of m (rows), via Gauss-Jordan.
std::vector<std::vector<uint64_t>> nullspace(ModMatrix m, uint64_t l) {
    uint32_t k = m.k;
    std::vector<int32_t> pivot_of_col(k, -1);
    uint32_t rank = 0;
    for (uint32_t col = 0; col < k && rank < k; ++col) {
        uint32_t piv = UINT32_MAX;
        for (uint32_t r = rank; r < k; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv == UINT32_MAX) continue;
        if (piv != rank)
            for (uint32_t c = 0; c < k; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        uint64_t inv = invmod(m.at(rank, col), l);
        for (uint32_t c = 0; c < k; ++c) m.at(rank, c) = mulmod(m.at(rank, c), inv, l);
        for (uint32_t r = 0; r < k; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            uint64_t f = m.at(r, col);
            for (uint32_t c = 0; c < k; ++c)
                m.at(r, c) = (m.at(r, c) + l - mulmod(f, m.at(rank, c), l)) % l;
        }
        pivot_of_col[col] = static_cast<int32_t>(rank);
        ++rank;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (uint32_t col = 0; col < k; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<uint64_t> v(k, 0);
        v[col] = 1;
        for (uint32_t c = 0; c < k; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = (l - m.at(static_cast<uint32_t>(pivot_of_col[c]), col)) % l;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Row-reduce basis rows in place (RREF); returns pivot column per row.
std::vector<uint32_t> rref(std::vector<std::vector<uint64_t>>& rows, uint64_t l) {
    std::vector<uint32_t> pivots;
    uint32_t k = rows.empty() ? 0 : static_cast<uint32_t>(rows[0].size());
    uint32_t rank = 0;
    for (uint32_t col = 0; col < k && rank < rows.size(); ++col) {
        uint32_t piv = UINT32_MAX;
        for (uint32_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv == UINT32_MAX) continue;
        std::swap(rows[piv], rows[rank]);
        uint64_t inv = invmod(rows[rank][col], l);
        for (uint32_t c = 0; c < k; ++c) rows[rank][c] = mulmod(rows[rank][c], inv, l);
        for (uint32_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint64_t f = rows[r][col];
            for (uint32_t c = 0; c < k; ++c)
                rows[r][c] = (rows[r][c] + l - mulmod(f, rows[rank][c], l)) % l;
        }
        pivots.push_back(col);
        ++rank;
    }
    if (rank != rows.size()) throw std::logic_error("chartab: dependent subspace basis");
    return pivots;
}

// ---------------------------------------------------------------------------
// Class matrices and power maps

struct ClassData {
    const ConjugacyClassTable* t;
    std::vector<std::vector<uint32_t>> power_class;  // [i][s] = class of rep_i^s, s < ord_i
    std::vector<uint32_t> inverse_class;

    void build_power_maps() {
        const auto& T = *t;
        power_class.resize(T.size());
        inverse_class.resize(T.size());
        for (uint32_t i = 0; i < T.size(); ++i) {
            const Perm& rep = T.classes[i].representative;
            uint64_t ord = T.classes[i].element_order;
            power_class[i].resize(ord);
            Perm pw(rep.degree());
            for (uint64_t s = 0; s < ord; ++s) {
                power_class[i][s] = static_cast<uint32_t>(T.class_of(pw));
                pw = rep * pw;
            }
            inverse_class[i] = power_class[i][(ord + ord - 1) % ord];
        }
        for (uint32_t i = 0; i < T.size(); ++i)
            if (inverse_class[inverse_class[i]] != i)
                throw std::logic_error("chartab: inverse class map is not an involution");
    }
};

/// Column-k counts of the class-i map: counts[j] = c_{ijk} for fixed k, all j.
/// Iterates x over the stored elements of C_i: c_{ijk} = #{x in C_i : x^{-1} z_k in C_j}.
ModMatrix class_matrix(const ConjugacyClassTable& t, uint32_t i, uint64_t l) {
    const uint32_t k = static_cast<uint32_t>(t.size());
    const uint32_t deg = t.classes[0].representative.degree();
    ModMatrix m(k);
    std::vector<uint16_t> buf(deg);
    for (uint32_t xidx : t.class_elements[i]) {
        Perm x = t.bsgs->element_at(xidx);
        Perm xinv = x.inverse();
        const uint16_t* xi = xinv.images().data();
        for (uint32_t kc = 0; kc < k; ++kc) {
            const uint16_t* zk = t.classes[kc].representative.images().data();
            for (uint32_t pt = 0; pt < deg; ++pt) buf[pt] = xi[zk[pt]];
            int32_t j = t.class_of_index[t.bsgs->element_index(buf.data())];
            m.at(static_cast<uint32_t>(j), kc) += 1;
        }
    }
    for (auto& v : m.a) v %= l;
    return m;
}

}  // namespace

uint64_t class_mult_coeff(const ConjugacyClassTable& t, uint32_t i, uint32_t j, uint32_t k) {
    if (i >= t.size() || j >= t.size() || k >= t.size())
        throw std::invalid_argument("class_mult_coeff: class index out of range");
    const uint32_t deg = t.classes[0].representative.degree();
    std::vector<uint16_t> buf(deg);
    const uint16_t* zk = t.classes[k].representative.images().data();
    uint64_t count = 0;
    for (uint32_t xidx : t.class_elements[i]) {
        Perm xinv = t.bsgs->element_at(xidx).inverse();
        const uint16_t* xi = xinv.images().data();
        for (uint32_t pt = 0; pt < deg; ++pt) buf[pt] = xi[zk[pt]];
        if (t.class_of_index[t.bsgs->element_index(buf.data())] == static_cast<int32_t>(j)) ++count;
    }
    return count;
}

CharacterTable character_table(const FiniteGroup& g, uint64_t ceiling) {
    return character_table(conjugacy_classes(g, ceiling));
}

CharacterTable character_table(const ConjugacyClassTable& classes) {
    const uint32_t k = static_cast<uint32_t>(classes.size());
    if (k == 0) throw std::invalid_argument("character_table: empty class table");
    if (k > 300)
        throw std::runtime_error("character_table: class count exceeds the modular method limit");
    const uint64_t n = classes.group_order;
    const uint64_t e = classes.exponent;

    const uint64_t l = find_dixon_prime(n, e);
    const uint64_t z = order_e_element(l, e);

    ClassData cd;
    cd.t = &classes;
    cd.build_power_maps();

    // Split the common eigenspaces of the class-map matrices, processing matrices
    // lazily in class-table order. The class algebra is split semisimple over F_l,
    // so after all k matrices every subspace is one-dimensional; a residual split
    // failure indicates a broken table and throws.
    std::vector<std::vector<std::vector<uint64_t>>> spaces;  // each: RREF rows
    {
        std::vector<std::vector<uint64_t>> full;
        for (uint32_t r = 0; r < k; ++r) {
            std::vector<uint64_t> row(k, 0);
            row[r] = 1;
            full.push_back(std::move(row));
        }
        spaces.push_back(std::move(full));
    }
    for (uint32_t ci = 1; ci < k; ++ci) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) { all_split = false; break; }
        if (all_split) break;
        ModMatrix M = class_matrix(classes, ci, l);
        std::vector<std::vector<std::vector<uint64_t>>> next;
        for (auto& s : spaces) {
            if (s.size() <= 1) {
                next.push_back(std::move(s));
                continue;
            }
            const uint32_t v = static_cast<uint32_t>(s.size());
            auto pivots = rref(s, l);
            // Restriction B: column r = coordinates of M * s[r] in the basis s.
            ModMatrix B(v);
            for (uint32_t r = 0; r < v; ++r) {
                std::vector<uint64_t> y(k, 0);
                for (uint32_t row = 0; row < k; ++row) {
                    uint64_t acc = 0;
                    for (uint32_t col = 0; col < k; ++col)
                        acc = (acc + mulmod(M.at(row, col), s[r][col], l)) % l;
                    y[row] = acc;
                }
                for (uint32_t br = 0; br < v; ++br) {
                    uint64_t c = y[pivots[br]];
                    B.at(br, r) = c;
                    if (c == 0) continue;
                    for (uint32_t col = 0; col < k; ++col)
                        y[col] = (y[col] + l - mulmod(c, s[br][col], l)) % l;
                }
                for (uint32_t col = 0; col < k; ++col)
                    if (y[col] != 0)
                        throw std::logic_error("chartab: class matrix does not preserve subspace");
            }
            auto roots = poly_roots(charpoly(B, l), l);
            uint32_t total = 0;
            for (uint64_t lambda : roots) {
                ModMatrix Bl = B;
                for (uint32_t d = 0; d < v; ++d) Bl.at(d, d) = (Bl.at(d, d) + l - lambda) % l;
                auto null_basis = nullspace(Bl, l);
                if (null_basis.empty()) continue;
                std::vector<std::vector<uint64_t>> sub;
                for (const auto& coords : null_basis) {
                    std::vector<uint64_t> w(k, 0);
                    for (uint32_t r = 0; r < v; ++r) {
                        if (coords[r] == 0) continue;
                        for (uint32_t col = 0; col < k; ++col)
                            w[col] = (w[col] + mulmod(coords[r], s[r][col], l)) % l;
                    }
                    sub.push_back(std::move(w));
                }
                total += static_cast<uint32_t>(sub.size());
                next.push_back(std::move(sub));
            }
            if (total != v)
                throw std::logic_error("chartab: eigenspaces of the restricted map do not fill it");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s.size() != 1)
            throw std::logic_error("chartab: class algebra failed to split into lines");
    if (spaces.size() != k) throw std::logic_error("chartab: wrong number of central characters");

    // Central character vectors, normalized so the identity-class entry is 1.
    std::vector<std::vector<uint64_t>> omega;
    for (auto& s : spaces) {
        std::vector<uint64_t> w = s[0];
        if (w[0] == 0) throw std::logic_error("chartab: central character vanishes at identity");
        uint64_t f = invmod(w[0], l);
        for (auto& x : w) x = mulmod(x, f, l);
        omega.push_back(std::move(w));
    }

    std::vector<uint64_t> inv_size(k);
    for (uint32_t i = 0; i < k; ++i) inv_size[i] = invmod(classes.classes[i].size % l, l);

    CharacterTable table;
    table.classes = classes;
    table.conductor = static_cast<uint32_t>(e);

    uint64_t sum_d2 = 0;
    for (const auto& w : omega) {
        // 1/degree^2 = (1/n) * sum_i w_i * w_{i*} / n_i  (first orthogonality).
        uint64_t tsum = 0;
        for (uint32_t i = 0; i < k; ++i)
            tsum = (tsum + mulmod(mulmod(w[i], w[cd.inverse_class[i]], l), inv_size[i], l)) % l;
        if (tsum == 0) throw std::logic_error("chartab: degenerate degree normalization");
        uint64_t d2 = mulmod(n % l, invmod(tsum, l), l);
        uint64_t d = sqrtmod(d2, l);
        if (d > l - d) d = l - d;
        if (d == 0 || static_cast<unsigned __int128>(d) * d > n)
            throw std::logic_error("chartab: degree out of range");
        sum_d2 += d * d;

        CharRow row;
        row.degree = d;
        row.values.reserve(k);
        for (uint32_t i = 0; i < k; ++i) {
            const uint64_t m = classes.classes[i].element_order;
            // chi-bar on the powers of rep_i, then invert the order-m DFT to get the
            // multiplicity of each m-th root of unity among the eigenvalues.
            std::vector<uint64_t> cbar(m);
            for (uint64_t s = 0; s < m; ++s) {
                uint32_t cls = cd.power_class[i][s];
                cbar[s] = mulmod(mulmod(d % l, omega[&w - omega.data()][cls], l), inv_size[cls], l);
            }
            uint64_t zm = powmod(z, e / m, l);
            std::vector<uint64_t> zpow(m);
            zpow[0] = 1;
            for (uint64_t s = 1; s < m; ++s) zpow[s] = mulmod(zpow[s - 1], zm, l);
            uint64_t minv = invmod(m % l, l);
            std::vector<std::pair<uint32_t, mpz_class>> roots;
            uint64_t mu_sum = 0;
            for (uint64_t v = 0; v < m; ++v) {
                uint64_t acc = 0;
                for (uint64_t s = 0; s < m; ++s)
                    acc = (acc + mulmod(cbar[s], zpow[(m - v * s % m) % m], l)) % l;
                uint64_t mu = mulmod(acc, minv, l);
                if (mu > d)
                    throw std::runtime_error("character lifting failed: non-integral multiplicity");
                mu_sum += mu;
                if (mu != 0)
                    roots.emplace_back(static_cast<uint32_t>(v * (e / m)),
                                       mpz_class(static_cast<unsigned long>(mu)));
            }
            if (mu_sum != d)
                throw std::runtime_error("character lifting failed: multiplicities do not sum to degree");
            row.values.push_back(Cyclotomic::from_roots(static_cast<uint32_t>(e), roots));
        }
        table.rows.push_back(std::move(row));
    }
    if (sum_d2 != n)
        throw std::logic_error("chartab: sum of squared degrees differs from group order");

    for (auto& row : table.rows) {
        mpz_class deg(static_cast<unsigned long>(row.degree));
        row.kernel_classes.clear();
        uint64_t korder = 0;
        for (uint32_t i = 0; i < k; ++i) {
            if (row.values[i] == deg) {
                row.kernel_classes.push_back(i);
                korder += classes.classes[i].size;
            }
        }
        row.kernel_order = korder;
        if (n % korder != 0)
            throw std::logic_error("chartab: kernel order does not divide group order");
    }

    std::sort(table.rows.begin(), table.rows.end(), [&](const CharRow& a, const CharRow& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (uint32_t i = 0; i < k; ++i) {
            int c = Cyclotomic::compare(a.values[i], b.values[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return table;
}

std::pair<std::vector<uint32_t>, uint64_t> kernel_of(const CharacterTable& t, size_t row) {
    if (row >= t.rows.size()) throw std::invalid_argument("kernel_of: row out of range");
    return {t.rows[row].kernel_classes, t.rows[row].kernel_order};
}

Cyclotomic row_inner_product(const CharacterTable& t, size_t i, size_t j) {
    Cyclotomic acc = Cyclotomic::zero(t.conductor);
    for (uint32_t c = 0; c < t.num_classes(); ++c) {
        Cyclotomic term = t.rows[i].values[c] * t.rows[j].values[c].conjugate();
        acc += term * Cyclotomic(mpz_class(static_cast<unsigned long>(t.classes.classes[c].size)));
    }
    return acc;
}

Cyclotomic column_inner_product(const CharacterTable& t, uint32_t ci, uint32_t cj) {
    Cyclotomic acc = Cyclotomic::zero(t.conductor);
    for (const auto& row : t.rows) acc += row.values[ci] * row.values[cj].conjugate();
    return acc;
}

}  // namespace cdg
