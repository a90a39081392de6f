#include "cdg/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "cdg/construct.hpp"
#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

using Z = mpz_class;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string set_to_string(const std::vector<Z>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + "}";
}

FiniteGroup construct_instance(FamilyTag tag, const FamilyParams* params) {
    switch (tag) {
        case FamilyTag::PSL2_EVEN:
        case FamilyTag::PSL2_ODD: return psl2(params->q);
        case FamilyTag::SUZUKI:
            if (params->q == 8) return named_group(NamedTag::SZ8);
            throw std::invalid_argument("no embedded Suzuki generators for q = " +
                                        params->q.get_str());
        case FamilyTag::PSL3: return psl3(params->q);
        case FamilyTag::PSU3: return psu3(params->q);
        case FamilyTag::FIXED_PSL3_3: return psl3(3);
        case FamilyTag::FIXED_PSL3_4: return psl3(4);
        case FamilyTag::FIXED_A7: return named_group(NamedTag::A7);
        case FamilyTag::FIXED_J1: return named_group(NamedTag::J1);
        case FamilyTag::FIXED_M11: return named_group(NamedTag::M11);
        case FamilyTag::FIXED_G2_2_PRIME: return named_group(NamedTag::G2_2_PRIME);
    }
    throw std::invalid_argument("construct_instance: unknown tag");
}

}  // namespace

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::PASS: return "PASS";
        case Outcome::FAIL: return "FAIL";
        case Outcome::SKIPPED: return "SKIPPED";
    }
    return "?";
}

VerificationReport verify_table1(FamilyTag tag, const FamilyParams* params, uint64_t ceiling) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = "table1";
    rep.params = to_string(tag) + (params ? " q=" + params->q.get_str() : "");
    Z order = expected_order(tag, params);
    if (order > ceiling) {
        rep.outcome = Outcome::SKIPPED;
        rep.reason = "order " + order.get_str() + " exceeds ceiling " + std::to_string(ceiling);
        rep.millis = ms_since(t0);
        return rep;
    }
    CodegreeSet expected = table1_set(tag, params);
    CodegreeSet actual = codegree_set(construct_instance(tag, params), ceiling);
    if (actual.values == expected.values) {
        rep.outcome = Outcome::PASS;
    } else {
        rep.outcome = Outcome::FAIL;
        rep.witness = "brute force " + set_to_string(actual.values) + " vs row " +
                      set_to_string(expected.values);
    }
    rep.millis = ms_since(t0);
    return rep;
}

VerificationReport verify_new_codegree(MatrixKind kind, const Z& q, uint64_t ceiling) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = "new-codegree";
    rep.params = (kind == MatrixKind::SL3 ? "SL3 q=" : "SU3 q=") + q.get_str();
    auto finish = [&](Outcome o, std::string text) {
        rep.outcome = o;
        (o == Outcome::SKIPPED ? rep.reason : rep.witness) = std::move(text);
        rep.millis = ms_since(t0);
        return rep;
    };
    if (!nt::is_prime_power(q)) return finish(Outcome::SKIPPED, "q is not a prime power");
    if (kind == MatrixKind::SL3) {
        if (Z(q % 3) != 1)
            return finish(Outcome::SKIPPED, "q !≡ 1 (mod 3): SL(3,q) = PSL(3,q), nothing new");
    } else {
        if (Z(q % 3) != 2)
            return finish(Outcome::SKIPPED, "q !≡ -1 (mod 3): SU(3,q) = PSU(3,q), nothing new");
    }
    Z cover_order = kind == MatrixKind::SL3 ? sl3_full_order(q) : su3_full_order(q);
    if (cover_order > ceiling)
        return finish(Outcome::SKIPPED,
                      "cover order " + cover_order.get_str() + " exceeds ceiling");

    Z predicted = kind == MatrixKind::SL3 ? Z(q * q * q * (q + 1) * (q - 1) * (q - 1))
                                          : Z(q * q * q * (q + 1) * (q + 1) * (q - 1));
    CodegreeSet quotient;
    if (kind == MatrixKind::SL3) {
        if (q == 4) quotient = table1_set(FamilyTag::FIXED_PSL3_4, nullptr);
        else if (q == 3) quotient = table1_set(FamilyTag::FIXED_PSL3_3, nullptr);
        else {
            FamilyParams p = FamilyParams::for_q(q);
            quotient = table1_set(FamilyTag::PSL3, &p);
        }
    } else {
        if (q == 3) quotient = table1_set(FamilyTag::FIXED_G2_2_PRIME, nullptr);
        else {
            FamilyParams p = FamilyParams::for_q(q);
            quotient = table1_set(FamilyTag::PSU3, &p);
        }
    }

    FiniteGroup cover = kind == MatrixKind::SL3 ? sl3_cover(q) : su3_cover(q);
    CodegreeSet cov = codegree_set(cover, ceiling);
    if (!cov.contains(predicted))
        return finish(Outcome::FAIL, "predicted codegree " + predicted.get_str() +
                                         " missing from cover set " + set_to_string(cov.values));
    if (!quotient.subset_of(cov))
        return finish(Outcome::FAIL, "quotient row " + set_to_string(quotient.values) +
                                         " not contained in cover set " +
                                         set_to_string(cov.values));
    if (quotient.contains(predicted))
        return finish(Outcome::FAIL,
                      "predicted codegree " + predicted.get_str() + " is not new");
    rep.outcome = Outcome::PASS;
    rep.witness = "new codegree " + predicted.get_str() + " = " + nt::factored_string(predicted);
    rep.millis = ms_since(t0);
    return rep;
}

VerificationReport verify_distinctness(uint64_t q_max) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = "distinctness";
    rep.params = "q_max=" + std::to_string(q_max);

    std::vector<std::pair<std::string, std::vector<Z>>> instances;
    for (FamilyTag tag : fixed_family_tags())
        instances.emplace_back(to_string(tag), table1_set(tag, nullptr).values);
    for (const Z& q : nt::prime_powers_in(2, q_max)) {
        auto pp = nt::prime_power(q);
        if (pp->first == 2 && q >= 4) {
            FamilyParams p = FamilyParams::for_q(q);
            instances.emplace_back("PSL2_EVEN q=" + q.get_str(),
                                   table1_set(FamilyTag::PSL2_EVEN, &p).values);
        }
        if (pp->first != 2 && q > 5) {
            FamilyParams p = FamilyParams::for_q(q);
            instances.emplace_back("PSL2_ODD q=" + q.get_str(),
                                   table1_set(FamilyTag::PSL2_ODD, &p).values);
        }
        if (pp->first == 2 && pp->second >= 3 && pp->second % 2 == 1) {
            FamilyParams p = FamilyParams::for_q(q);
            instances.emplace_back("SUZUKI q=" + q.get_str(),
                                   table1_set(FamilyTag::SUZUKI, &p).values);
        }
        if (q > 4) {
            FamilyParams p = FamilyParams::for_q(q);
            instances.emplace_back("PSL3 q=" + q.get_str(), table1_set(FamilyTag::PSL3, &p).values);
            instances.emplace_back("PSU3 q=" + q.get_str(), table1_set(FamilyTag::PSU3, &p).values);
        }
    }
    rep.params += " (" + std::to_string(instances.size()) + " instances)";

    std::sort(instances.begin(), instances.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (size_t i = 1; i < instances.size(); ++i) {
        if (instances[i].second == instances[i - 1].second) {
            rep.outcome = Outcome::FAIL;
            rep.witness = instances[i - 1].first + " and " + instances[i].first +
                          " share the codegree set " + set_to_string(instances[i].second);
            rep.millis = ms_since(t0);
            return rep;
        }
    }
    rep.outcome = Outcome::PASS;
    rep.millis = ms_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Diophantine registry

namespace {

// Row-domain filters: parity ("even"/"odd"/"any") plus a congruence constraint
// mod 3 encoded as: 0 none, 1 ≡1, 2 ≡2, -1 !≡1, -2 !≡2. All domains require q > 4
// (the parametric rows' hypothesis).
std::vector<Z> domain_qs(const Z& bound, const std::string& parity, int mod3) {
    std::vector<Z> out;
    for (const Z& q : nt::prime_powers_in(5, bound)) {
        bool even = mpz_even_p(q.get_mpz_t());
        if (parity == "even" && !even) continue;
        if (parity == "odd" && even) continue;
        long r = mpz_class(q % 3).get_si();
        if (mod3 == 1 && r != 1) continue;
        if (mod3 == 2 && r != 2) continue;
        if (mod3 == -1 && r == 1) continue;
        if (mod3 == -2 && r == 2) continue;
        out.push_back(q);
    }
    return out;
}

using Poly = std::function<Z(const Z&)>;

std::optional<std::string> find_pow2_square(const std::vector<Z>& qs, const Poly& poly,
                                            const Z& k_bound) {
    for (const Z& q : qs) {
        Z v = poly(q) + 1;
        Z k = nt::nth_root(v, 2);
        if (k * k != v) continue;
        if (k < 4 || k > k_bound) continue;
        auto pp = nt::prime_power(k);
        if (pp && pp->first == 2)
            return "q=" + q.get_str() + ", k=" + k.get_str();
    }
    return std::nullopt;
}

std::optional<std::string> find_fixed_rhs(const std::vector<Z>& qs, const Poly& poly, long rhs) {
    for (const Z& q : qs)
        if (poly(q) == rhs) return "q=" + q.get_str();
    return std::nullopt;
}

std::optional<std::string> find_v2_equal(const std::vector<Z>& qs, const Poly& poly, unsigned c) {
    for (const Z& q : qs)
        if (nt::v2(poly(q)) == c) return "q=" + q.get_str();
    return std::nullopt;
}

std::optional<std::string> find_half_pair(const std::vector<Z>& qs,
                                          const std::function<std::vector<Z>(const Z&)>& row) {
    for (const Z& q : qs) {
        std::vector<Z> vals = row(q);
        std::sort(vals.begin(), vals.end());
        for (const Z& v : vals)
            if (std::binary_search(vals.begin(), vals.end(), Z(2 * v)))
                return "q=" + q.get_str() + ": " + v.get_str() + " and " + Z(2 * v).get_str();
    }
    return std::nullopt;
}

std::optional<std::string> find_membership(const std::vector<Z>& qs,
                                           const std::function<std::vector<Z>(const Z&)>& row) {
    for (const Z& q : qs) {
        std::vector<Z> vals = row(q);
        std::sort(vals.begin(), vals.end());
        Z q4 = q * q * q * q - 1;
        Z q6 = q4 + 1;
        q6 = q6 * q * q - 1;  // q^6 - 1
        if (std::binary_search(vals.begin(), vals.end(), q4))
            return "q=" + q.get_str() + ": q^4-1 in the row";
        if (std::binary_search(vals.begin(), vals.end(), q6))
            return "q=" + q.get_str() + ": q^6-1 in the row";
    }
    return std::nullopt;
}

std::optional<std::string> find_odd_count_two(const std::vector<Z>& qs,
                                              const std::function<std::vector<Z>(const Z&)>& row) {
    for (const Z& q : qs) {
        unsigned odd = 0;
        for (const Z& v : row(q))
            if (v > 1 && mpz_odd_p(v.get_mpz_t())) ++odd;
        if (odd != 1) return "q=" + q.get_str() + ": " + std::to_string(odd) + " odd entries";
    }
    return std::nullopt;
}

/// Suzuki exponent system: s = 2^(2f+1), s^2 = q^3 and 2^(3f+2) = q^2 over 2-powers q.
std::optional<std::string> find_suzuki_even(const Z& bound) {
    for (unsigned f = 1; f <= 40; ++f) {
        for (unsigned m = 1; (Z(1) << m) <= bound; ++m) {
            bool first = 2 * (2 * f + 1) == 3 * m;
            bool second = 3 * f + 2 == 2 * m;
            if (first && second) return "f=" + std::to_string(f) + ", q=2^" + std::to_string(m);
        }
    }
    return std::nullopt;
}

/// Suzuki three-equation system against a row's three matched codegrees.
std::optional<std::string> find_suzuki_odd(const std::vector<Z>& qs, const Poly& rhs_plus,
                                           const Poly& rhs_mid, const Poly& rhs_minus) {
    for (unsigned f = 1; f <= 24; ++f) {
        Z r = Z(1) << f;
        Z s = 2 * r * r;
        Z s2 = s * s;
        Z lhs_plus = s2 * (s + 2 * r + 1);
        Z lhs_mid = s2 * (s - 1);
        Z lhs_minus = s2 * (s - 2 * r + 1);
        for (const Z& q : qs) {
            if (lhs_plus == rhs_plus(q) && lhs_mid == rhs_mid(q) && lhs_minus == rhs_minus(q))
                return "f=" + std::to_string(f) + ", q=" + q.get_str();
        }
    }
    return std::nullopt;
}

/// Two-variable system lhsA(q) = rhsA(f) with lhsB(q) equal to one of the rhsB
/// alternatives; rhsA must be strictly increasing on the f-domain.
std::optional<std::string> find_pair_system(const std::vector<Z>& qs, const std::vector<Z>& fs,
                                            const Poly& lhsA, const Poly& rhsA, const Poly& lhsB,
                                            const std::vector<Poly>& rhsB) {
    std::vector<Z> rhs_values;
    rhs_values.reserve(fs.size());
    for (const Z& f : fs) rhs_values.push_back(rhsA(f));
    for (const Z& q : qs) {
        Z target = lhsA(q);
        auto it = std::lower_bound(rhs_values.begin(), rhs_values.end(), target);
        if (it == rhs_values.end() || *it != target) continue;
        const Z& f = fs[static_cast<size_t>(it - rhs_values.begin())];
        Z b = lhsB(q);
        for (const Poly& alt : rhsB) {
            if (alt(f) == b)
                return "q=" + q.get_str() + ", f=" + f.get_str();
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_min_value(const std::vector<Z>& qs, const Poly& expr,
                                           long expected_min, const Z& expected_argmin) {
    bool first = true;
    Z best, best_q;
    for (const Z& q : qs) {
        Z v = expr(q);
        if (v <= 2) return "q=" + q.get_str() + " gives " + v.get_str() + " <= 2";
        if (first || v < best) {
            best = v;
            best_q = q;
            first = false;
        }
    }
    if (!first && (best != expected_min || best_q != expected_argmin))
        return "minimum " + best.get_str() + " at q=" + best_q.get_str() + ", expected " +
               std::to_string(expected_min) + " at q=" + expected_argmin.get_str();
    return std::nullopt;
}

struct RowCtx {
    std::string row_id;
    int mod3;  // congruence constraint of the row
    std::function<std::vector<Z>(const Z&)> row;
    // the row's characteristic codegrees used by the eliminations
    Poly odd_codegree_even_q;  // the unique nontrivial odd entry when q is even
    Poly odd_codegree_odd_q;   // ... when q is odd
    Poly a7_two_part_poly;     // odd q: the entry whose 2-part must be 2^3
    Poly suz_plus, suz_mid, suz_minus;  // the three codegrees matched to the Suzuki set
};

void add_common_entries(std::vector<DiophantineEquation>& reg, const RowCtx& ctx) {
    auto dom = [ctx](const Z& bound, const std::string& parity) {
        return domain_qs(bound, parity, ctx.mod3);
    };
    auto add = [&](std::string id_suffix, std::string eliminated, std::string parity,
                   std::string statement,
                   std::function<std::optional<std::string>(const Z&, const Z&)> finder) {
        reg.push_back(DiophantineEquation{ctx.row_id + "/" + id_suffix, ctx.row_id,
                                          std::move(eliminated), std::move(parity),
                                          std::move(statement), std::move(finder)});
    };

    // PSL(2, 2^f) candidates: q even via 2-part matching, q odd via the odd-codegree
    // equation poly(q) = k^2 - 1.
    add("psl2even-even", "psl2_even", "even", "q^4-1 and q^6-1 are not codegrees of the row",
        [ctx, dom](const Z& b, const Z&) { return find_membership(dom(b, "even"), ctx.row); });
    add("psl2even-odd", "psl2_even", "odd", "odd-codegree match = k^2 - 1 with k a 2-power",
        [ctx, dom](const Z& b, const Z& kb) {
            return find_pow2_square(dom(b, "odd"), ctx.odd_codegree_odd_q, kb);
        });
    add("psl2odd-any", "psl2_odd", "any",
        "no codegree of the row is half of another (PSL(2,odd) needs such a pair)",
        [ctx, dom](const Z& b, const Z&) { return find_half_pair(dom(b, "any"), ctx.row); });
    add("suzuki-even", "suzuki", "even", "s^2 = q^3 together with 2^(3f+2) = q^2",
        [dom](const Z& b, const Z&) { return find_suzuki_even(b); });
    add("suzuki-odd", "suzuki", "odd",
        "s^2(s+2r+1), s^2(s-1), s^2(s-2r+1) simultaneously equal the three matched codegrees",
        [ctx, dom](const Z& b, const Z&) {
            return find_suzuki_odd(dom(b, "odd"), ctx.suz_plus, ctx.suz_mid, ctx.suz_minus);
        });
    auto fixed_rhs_pair = [&](const std::string& name, long rhs) {
        add(name + "-even", name, "even",
            "odd-codegree match = " + std::to_string(rhs) + " (q even)",
            [ctx, dom, rhs](const Z& b, const Z&) {
                return find_fixed_rhs(dom(b, "even"), ctx.odd_codegree_even_q, rhs);
            });
        add(name + "-odd", name, "odd", "odd-codegree match = " + std::to_string(rhs) + " (q odd)",
            [ctx, dom, rhs](const Z& b, const Z&) {
                return find_fixed_rhs(dom(b, "odd"), ctx.odd_codegree_odd_q, rhs);
            });
    };
    fixed_rhs_pair("psl3_4", 315);   // 3^2*5*7
    fixed_rhs_pair("psl3_3", 351);   // 3^3*13
    fixed_rhs_pair("g2_2_prime", 189);  // 3^3*7
    // M11 / A7: q even compares largest 2-parts (q^3 = 2^4 resp. 2^3); q odd matches
    // the odd codegree (M11) or forces an impossible 2-part (A7).
    add("m11-even", "m11", "even", "q^3 = 2^4",
        [dom](const Z& b, const Z&) {
            return find_fixed_rhs(dom(b, "even"), [](const Z& q) { return Z(q * q * q); }, 16);
        });
    add("m11-odd", "m11", "odd", "odd-codegree match = 495 (3^2*5*11)",
        [ctx, dom](const Z& b, const Z&) {
            return find_fixed_rhs(dom(b, "odd"), ctx.odd_codegree_odd_q, 495);
        });
    add("a7-even", "a7", "even", "q^3 = 2^3",
        [dom](const Z& b, const Z&) {
            return find_fixed_rhs(dom(b, "even"), [](const Z& q) { return Z(q * q * q); }, 8);
        });
    add("a7-odd", "a7", "odd", "2-part of the matched codegree factor equals 2^3",
        [ctx, dom](const Z& b, const Z&) {
            return find_v2_equal(dom(b, "odd"), ctx.a7_two_part_poly, 3);
        });
    add("j1-any", "j1", "any",
        "the row has exactly one nontrivial odd codegree (J1's set has two)",
        [ctx, dom](const Z& b, const Z&) { return find_odd_count_two(dom(b, "any"), ctx.row); });
}

std::vector<DiophantineEquation> build_registry() {
    std::vector<DiophantineEquation> reg;

    auto psl3n_row = [](const Z& q) { return psl3_row(q, false); };
    auto psl3c_row = [](const Z& q) { return psl3_row(q, true); };
    auto psu3n_row = [](const Z& q) { return psu3_row(q, false); };
    auto psu3c_row = [](const Z& q) { return psu3_row(q, true); };

    auto A = [](const Z& q) { return Z(q * q + q + 1); };
    auto B = [](const Z& q) { return Z(q * q - q + 1); };
    auto C = [](const Z& q) { return Z(q * q * q); };

    // --- row: PSL(3,q), q !≡ 1 (mod 3) -------------------------------------
    {
        RowCtx ctx;
        ctx.row_id = "psl3_noncong";
        ctx.mod3 = -1;
        ctx.row = psl3n_row;
        ctx.odd_codegree_even_q = [A](const Z& q) { return Z(A(q) * (q + 1) * (q - 1) * (q - 1)); };
        ctx.odd_codegree_odd_q = [A, C](const Z& q) { return Z(C(q) * A(q)); };
        ctx.a7_two_part_poly = [](const Z& q) { return Z((q + 1) * (q - 1) * (q - 1)); };
        ctx.suz_plus = [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1) * (q - 1)); };
        ctx.suz_mid = [A](const Z& q) { return Z(A(q) * (q + 1) * (q - 1) * (q - 1)); };
        ctx.suz_minus = [](const Z& q) { return Z(q * q * (q + 1) * (q - 1) * (q - 1)); };
        add_common_entries(reg, ctx);

        reg.push_back(DiophantineEquation{
            "psl3_noncong/psu3_noncong-pair", "psl3_noncong", "psu3_noncong", "any",
            "q^3(q-1)^2(q+1) = f^3(f-1)(f+1)^2 with q^2(q-1)^2(q+1) matching a second row entry",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", -1), domain_qs(b, "any", -2),
                    [C](const Z& q) { return Z(C(q) * (q - 1) * (q - 1) * (q + 1)); },
                    [C](const Z& f) { return Z(C(f) * (f - 1) * (f + 1) * (f + 1)); },
                    [](const Z& q) { return Z(q * q * (q - 1) * (q - 1) * (q + 1)); },
                    {[](const Z& f) { return Z(f * f * (f - 1) * (f + 1) * (f + 1)); },
                     [C](const Z& f) { return Z(C(f) * (f + 1) * (f + 1)); },
                     [C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1)); }});
            }});
    }

    // --- row: PSL(3,q), q ≡ 1 (mod 3), entries carry the 1/3 scaling -------
    {
        RowCtx ctx;
        ctx.row_id = "psl3_cong";
        ctx.mod3 = 1;
        ctx.row = psl3c_row;
        ctx.odd_codegree_even_q = [A](const Z& q) {
            return Z(A(q) * (q + 1) * (q - 1) * (q - 1) / 3);
        };
        ctx.odd_codegree_odd_q = [A, C](const Z& q) { return Z(C(q) * A(q) / 3); };
        ctx.a7_two_part_poly = [](const Z& q) { return Z((q * q - 1) * (q - 1)); };
        ctx.suz_plus = [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1) * (q - 1) / 3); };
        ctx.suz_mid = [A](const Z& q) { return Z(A(q) * (q * q - 1) * (q - 1) / 3); };
        ctx.suz_minus = [](const Z& q) { return Z(q * q * (q * q - 1) * (q - 1) / 3); };
        add_common_entries(reg, ctx);

        reg.push_back(DiophantineEquation{
            "psl3_cong/psl2even-min", "psl3_cong", "psl2_even", "odd",
            "q^3 - (q^2+q+1)/3 stays above 2; minimum 324 at q = 7",
            [A, C](const Z& b, const Z&) {
                return check_min_value(domain_qs(b, "odd", 1),
                                       [A, C](const Z& q) { return Z(C(q) - A(q) / 3); }, 324, 7);
            }});
        reg.push_back(DiophantineEquation{
            "psl3_cong/psl3_noncong-pair", "psl3_cong", "psl3_noncong", "any",
            "f^3(f+1)(f-1)^2 = q^3(q+1)(q-1)^2/3 with f^3(f-1)^2 = q^3(q-1)^2/3",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", 1), domain_qs(b, "any", -1),
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1) * (q - 1) / 3); },
                    [C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1) * (f - 1)); },
                    [C](const Z& q) { return Z(C(q) * (q - 1) * (q - 1) / 3); },
                    {[C](const Z& f) { return Z(C(f) * (f - 1) * (f - 1)); }});
            }});
        reg.push_back(DiophantineEquation{
            "psl3_cong/psu3_noncong-pair", "psl3_cong", "psu3_noncong", "any",
            "f^3(f+1)^2(f-1) = q^3(q+1)(q-1)^2/3 with f^3(f+1)(f-1) = q^3(q-1)^2/3",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", 1), domain_qs(b, "any", -2),
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1) * (q - 1) / 3); },
                    [C](const Z& f) { return Z(C(f) * (f + 1) * (f + 1) * (f - 1)); },
                    [C](const Z& q) { return Z(C(q) * (q - 1) * (q - 1) / 3); },
                    {[C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1)); }});
            }});
        reg.push_back(DiophantineEquation{
            "psl3_cong/psu3_cong-pair", "psl3_cong", "psu3_cong", "any",
            "f^3(f+1)^2(f-1)/3 = q^3(q+1)(q-1)^2/3 with f^3(f+1)(f-1)/3 = q^3(q-1)^2/3",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", 1), domain_qs(b, "any", 2),
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1) * (q - 1)); },
                    [C](const Z& f) { return Z(C(f) * (f + 1) * (f + 1) * (f - 1)); },
                    [C](const Z& q) { return Z(C(q) * (q - 1) * (q - 1)); },
                    {[C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1)); }});
            }});
    }

    // --- row: PSU(3,q), q !≡ -1 (mod 3) -------------------------------------
    {
        RowCtx ctx;
        ctx.row_id = "psu3_noncong";
        ctx.mod3 = -2;
        ctx.row = psu3n_row;
        ctx.odd_codegree_even_q = [B](const Z& q) { return Z(B(q) * (q + 1) * (q + 1) * (q - 1)); };
        ctx.odd_codegree_odd_q = [B, C](const Z& q) { return Z(C(q) * B(q)); };
        ctx.a7_two_part_poly = [](const Z& q) { return Z((q + 1) * (q + 1) * (q - 1)); };
        ctx.suz_plus = [C](const Z& q) { return Z(C(q) * (q + 1) * (q + 1) * (q - 1)); };
        ctx.suz_mid = [](const Z& q) { return Z(q * q * (q + 1) * (q + 1) * (q - 1)); };
        ctx.suz_minus = [B](const Z& q) { return Z(B(q) * (q + 1) * (q + 1) * (q - 1)); };
        add_common_entries(reg, ctx);

        reg.push_back(DiophantineEquation{
            "psu3_noncong/psl2even-ineq", "psu3_noncong", "psl2_even", "odd",
            "q^3 - (q^2-q+1) = (q-1)(q^2+1) stays above 2",
            [B, C](const Z& b, const Z&) {
                for (const Z& q : domain_qs(b, "odd", -2))
                    if (C(q) - B(q) <= 2) return std::optional<std::string>("q=" + q.get_str());
                return std::optional<std::string>();
            }});
        reg.push_back(DiophantineEquation{
            "psu3_noncong/psl3_noncong-pair", "psu3_noncong", "psl3_noncong", "any",
            "q^3(q+1)^2(q-1) = f^3(f+1)(f-1)^2 with q^2(q+1)^2(q-1) matching a second row entry",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", -2), domain_qs(b, "any", -1),
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q + 1) * (q - 1)); },
                    [C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1) * (f - 1)); },
                    [](const Z& q) { return Z(q * q * (q + 1) * (q + 1) * (q - 1)); },
                    {[](const Z& f) { return Z(f * f * (f + 1) * (f - 1) * (f - 1)); },
                     [C](const Z& f) { return Z(C(f) * (f - 1) * (f - 1)); },
                     [C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1)); }});
            }});
    }

    // --- row: PSU(3,q), q ≡ -1 (mod 3), entries carry the 1/3 scaling ------
    {
        RowCtx ctx;
        ctx.row_id = "psu3_cong";
        ctx.mod3 = 2;
        ctx.row = psu3c_row;
        ctx.odd_codegree_even_q = [B](const Z& q) {
            return Z(B(q) * (q + 1) * (q + 1) * (q - 1) / 3);
        };
        ctx.odd_codegree_odd_q = [B, C](const Z& q) { return Z(C(q) * B(q) / 3); };
        ctx.a7_two_part_poly = [](const Z& q) { return Z((q + 1) * (q + 1) * (q - 1)); };
        ctx.suz_plus = [C](const Z& q) { return Z(C(q) * (q + 1) * (q + 1) * (q - 1) / 3); };
        ctx.suz_mid = [](const Z& q) { return Z(q * q * (q + 1) * (q + 1) * (q - 1) / 3); };
        ctx.suz_minus = [B](const Z& q) { return Z(B(q) * (q + 1) * (q + 1) * (q - 1) / 3); };
        add_common_entries(reg, ctx);

        reg.push_back(DiophantineEquation{
            "psu3_cong/psl2even-min", "psu3_cong", "psl2_even", "odd",
            "q^3 - (q^2-q+1)/3 stays above 2; minimum 118 at q = 5",
            [B, C](const Z& b, const Z&) {
                return check_min_value(domain_qs(b, "odd", 2),
                                       [B, C](const Z& q) { return Z(C(q) - B(q) / 3); }, 118, 5);
            }});
        reg.push_back(DiophantineEquation{
            "psu3_cong/psl3_noncong-pair", "psu3_cong", "psl3_noncong", "any",
            "f^3(f+1)(f-1)^2 = q^3(q+1)^2(q-1)/3 with f^3(f-1)^2 = q^3(q+1)(q-1)/3",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", 2), domain_qs(b, "any", -1),
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q + 1) * (q - 1) / 3); },
                    [C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1) * (f - 1)); },
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1) / 3); },
                    {[C](const Z& f) { return Z(C(f) * (f - 1) * (f - 1)); }});
            }});
        reg.push_back(DiophantineEquation{
            "psu3_cong/psu3_noncong-pair", "psu3_cong", "psu3_noncong", "any",
            "f^3(f+1)^2(f-1) = q^3(q+1)^2(q-1)/3 with f^3(f+1)(f-1) = q^3(q+1)(q-1)/3",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", 2), domain_qs(b, "any", -2),
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q + 1) * (q - 1) / 3); },
                    [C](const Z& f) { return Z(C(f) * (f + 1) * (f + 1) * (f - 1)); },
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1) / 3); },
                    {[C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1)); }});
            }});
        reg.push_back(DiophantineEquation{
            "psu3_cong/psl3_cong-pair", "psu3_cong", "psl3_cong", "any",
            "f^3(f+1)(f-1)^2/3 = q^3(q+1)^2(q-1)/3 with f^3(f-1)^2/3 = q^3(q+1)(q-1)/3",
            [C](const Z& b, const Z&) {
                return find_pair_system(
                    domain_qs(b, "any", 2), domain_qs(b, "any", 1),
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q + 1) * (q - 1)); },
                    [C](const Z& f) { return Z(C(f) * (f + 1) * (f - 1) * (f - 1)); },
                    [C](const Z& q) { return Z(C(q) * (q + 1) * (q - 1)); },
                    {[C](const Z& f) { return Z(C(f) * (f - 1) * (f - 1)); }});
            }});
    }

    return reg;
}

}  // namespace

const std::vector<DiophantineEquation>& diophantine_registry() {
    static const std::vector<DiophantineEquation> reg = build_registry();
    return reg;
}

std::vector<VerificationReport> verify_diophantine(const Z& q_bound, const Z& k_bound) {
    std::vector<VerificationReport> out;
    for (const auto& eq : diophantine_registry()) {
        auto t0 = Clock::now();
        VerificationReport rep;
        rep.check = "diophantine:" + eq.id;
        rep.params = "q<=" + q_bound.get_str() + ", k<=" + k_bound.get_str();
        auto witness = eq.find_witness(q_bound, k_bound);
        if (witness) {
            rep.outcome = Outcome::FAIL;
            rep.witness = *witness;
        } else {
            rep.outcome = Outcome::PASS;
        }
        rep.millis = ms_since(t0);
        out.push_back(std::move(rep));
    }
    return out;
}

VerificationReport verify_max_indices(MatrixKind kind, uint64_t q_lo, uint64_t q_hi) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = kind == MatrixKind::SL3 ? "max-indices:SL3" : "max-indices:SU3";
    rep.params = "q in [" + std::to_string(q_lo) + ", " + std::to_string(q_hi) + "]";
    for (const Z& q : nt::prime_powers_in(q_lo, q_hi)) {
        Z group = kind == MatrixKind::SL3 ? sl3_full_order(q) : su3_full_order(q);
        Z q3 = q * q * q;
        for (const auto& row : maximal_subgroup_orders(kind, q)) {
            if (!row.applicable) continue;
            if (row.order_exact && group % row.order != 0) {
                rep.outcome = Outcome::FAIL;
                rep.witness = "q=" + q.get_str() + ": order of " + row.structure +
                              " does not divide the group order";
                rep.millis = ms_since(t0);
                return rep;
            }
            if (kind == MatrixKind::SL3 && row.parabolic) {
                Z index = group / row.order;
                if (index != q * q + q + 1) {
                    rep.outcome = Outcome::FAIL;
                    rep.witness = "q=" + q.get_str() + ": parabolic index " + index.get_str() +
                                  " != q^2+q+1";
                    rep.millis = ms_since(t0);
                    return rep;
                }
                continue;
            }
            // Lower bound on the index via the (upper bound of the) order.
            Z index_lb = group / row.order_upper;
            if (index_lb <= q3) {
                rep.outcome = Outcome::FAIL;
                rep.witness = "q=" + q.get_str() + ": " + row.structure + " has index " +
                              Z(group / row.order).get_str() + " <= q^3 = " + q3.get_str();
                rep.millis = ms_since(t0);
                return rep;
            }
        }
    }
    rep.outcome = Outcome::PASS;
    rep.millis = ms_since(t0);
    return rep;
}

std::vector<VerificationReport> run_verify_suite(const std::string& suite,
                                                 const SuiteOptions& opts) {
    std::vector<VerificationReport> out;
    bool all = suite == "all";

    if (all || suite == "table1") {
        std::vector<std::pair<FamilyTag, std::optional<FamilyParams>>> instances;
        for (FamilyTag tag : fixed_family_tags()) instances.emplace_back(tag, std::nullopt);
        for (const Z& q : nt::prime_powers_in(2, opts.q_max)) {
            auto pp = nt::prime_power(q);
            if (pp->first == 2 && q >= 4)
                instances.emplace_back(FamilyTag::PSL2_EVEN, FamilyParams::for_q(q));
            if (pp->first != 2 && q > 5)
                instances.emplace_back(FamilyTag::PSL2_ODD, FamilyParams::for_q(q));
            if (pp->first == 2 && pp->second % 2 == 1 && pp->second >= 3)
                instances.emplace_back(FamilyTag::SUZUKI, FamilyParams::for_q(q));
            if (q > 4) {
                instances.emplace_back(FamilyTag::PSL3, FamilyParams::for_q(q));
                instances.emplace_back(FamilyTag::PSU3, FamilyParams::for_q(q));
            }
        }
        std::vector<std::future<VerificationReport>> futures;
        for (auto& [tag, params] : instances) {
            auto task = [tag = tag, params = params, ceiling = opts.ceiling] {
                return verify_table1(tag, params ? &*params : nullptr, ceiling);
            };
            if (opts.threads > 1)
                futures.push_back(std::async(std::launch::async, task));
            else
                out.push_back(task());
        }
        for (auto& f : futures) out.push_back(f.get());
    }
    if (all || suite == "new-codegree") {
        for (const Z& q : nt::prime_powers_in(3, opts.q_max)) {
            if (Z(q % 3) == 1) out.push_back(verify_new_codegree(MatrixKind::SL3, q, opts.ceiling));
            if (Z(q % 3) == 2 && q > 2)
                out.push_back(verify_new_codegree(MatrixKind::SU3, q, opts.ceiling));
        }
    }
    if (all || suite == "distinctness") out.push_back(verify_distinctness(opts.distinct_q_max));
    if (all || suite == "diophantine") {
        auto reps = verify_diophantine(opts.bound, opts.k_bound);
        out.insert(out.end(), reps.begin(), reps.end());
    }
    if (all || suite == "indices") {
        out.push_back(verify_max_indices(MatrixKind::SL3, opts.index_q_lo, opts.index_q_hi));
        out.push_back(verify_max_indices(MatrixKind::SU3, opts.index_q_lo, opts.index_q_hi));
    }
    if (out.empty() && !all)
        throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

}  // namespace cdg
