#include "cdg/families.hpp"

#include <algorithm>
#include <map>

#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

using nt::Integer;

Integer qpow(const mpz_class& q, unsigned e) { return nt::pow_u(q, e); }

std::string factored_or_plain(const mpz_class& v) {
    try {
        return nt::factored_string(v);
    } catch (const std::exception&) {
        return v.get_str();
    }
}

struct FixedData {
    std::vector<long> values;
    mpz_class order;
    unsigned cd;
};

const std::map<FamilyTag, FixedData>& fixed_data() {
    static const std::map<FamilyTag, FixedData> data = {
        {FamilyTag::FIXED_PSL3_3, {{1, 144, 208, 216, 351, 432, 468}, 5616, 7}},
        {FamilyTag::FIXED_PSL3_4, {{1, 315, 320, 448, 576, 1008}, 20160, 6}},
        {FamilyTag::FIXED_A7, {{1, 72, 120, 168, 180, 252, 420}, 2520, 7}},
        {FamilyTag::FIXED_J1, {{1, 840, 1320, 1463, 2280, 2310, 3135}, 175560, 7}},
        {FamilyTag::FIXED_M11, {{1, 144, 176, 180, 495, 720, 792}, 7920, 7}},
        // Not printed in the sources the other rows come from; cached from the
        // brute-force oracle on PSU(3,3) and pinned by the odd entry 189 = 3^3*7.
        {FamilyTag::FIXED_G2_2_PRIME, {{1, 189, 216, 224, 288, 432, 864, 1008}, 6048, 8}},
    };
    return data;
}

}  // namespace

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::PSL2_EVEN: return "PSL2_EVEN";
        case FamilyTag::PSL2_ODD: return "PSL2_ODD";
        case FamilyTag::SUZUKI: return "SUZUKI";
        case FamilyTag::PSL3: return "PSL3";
        case FamilyTag::PSU3: return "PSU3";
        case FamilyTag::FIXED_PSL3_3: return "PSL3_3";
        case FamilyTag::FIXED_PSL3_4: return "PSL3_4";
        case FamilyTag::FIXED_A7: return "A7";
        case FamilyTag::FIXED_J1: return "J1";
        case FamilyTag::FIXED_M11: return "M11";
        case FamilyTag::FIXED_G2_2_PRIME: return "G2_2_PRIME";
    }
    return "?";
}

FamilyTag family_tag_from_string(const std::string& s) {
    for (FamilyTag t : all_family_tags())
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown family tag: " + s);
}

bool is_parametric(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::PSL2_EVEN:
        case FamilyTag::PSL2_ODD:
        case FamilyTag::SUZUKI:
        case FamilyTag::PSL3:
        case FamilyTag::PSU3: return true;
        default: return false;
    }
}

const std::vector<FamilyTag>& all_family_tags() {
    static const std::vector<FamilyTag> tags = {
        FamilyTag::PSL2_EVEN,     FamilyTag::PSL2_ODD,  FamilyTag::SUZUKI,
        FamilyTag::PSL3,          FamilyTag::PSU3,      FamilyTag::FIXED_PSL3_3,
        FamilyTag::FIXED_PSL3_4,  FamilyTag::FIXED_A7,  FamilyTag::FIXED_J1,
        FamilyTag::FIXED_M11,     FamilyTag::FIXED_G2_2_PRIME,
    };
    return tags;
}

const std::vector<FamilyTag>& fixed_family_tags() {
    static const std::vector<FamilyTag> tags = {
        FamilyTag::FIXED_PSL3_3, FamilyTag::FIXED_PSL3_4, FamilyTag::FIXED_A7,
        FamilyTag::FIXED_J1,     FamilyTag::FIXED_M11,    FamilyTag::FIXED_G2_2_PRIME,
    };
    return tags;
}

FamilyParams FamilyParams::for_q(mpz_class q) {
    FamilyParams p;
    p.q = std::move(q);
    return p;
}

FamilyParams FamilyParams::for_suzuki_f(unsigned f) {
    FamilyParams p;
    p.suzuki_f = f;
    p.q = mpz_class(1) << (2 * f + 1);
    return p;
}

void validate_family(FamilyTag tag, const FamilyParams* params) {
    if (!is_parametric(tag)) {
        if (params != nullptr)
            throw std::invalid_argument(to_string(tag) + ": fixed family takes no parameters");
        return;
    }
    if (params == nullptr)
        throw std::invalid_argument(to_string(tag) + ": parametric family requires q");
    const mpz_class& q = params->q;
    auto pp = nt::prime_power(q);
    if (!pp) throw std::invalid_argument(to_string(tag) + ": q must be a prime power");
    switch (tag) {
        case FamilyTag::PSL2_EVEN:
            if (pp->first != 2 || q < 4)
                throw std::invalid_argument("PSL2_EVEN: requires q = 2^f >= 4");
            break;
        case FamilyTag::PSL2_ODD:
            if (pp->first == 2 || q <= 5)
                throw std::invalid_argument("PSL2_ODD: requires odd q > 5");
            break;
        case FamilyTag::SUZUKI: {
            if (pp->first != 2 || pp->second % 2 == 0 || pp->second < 3)
                throw std::invalid_argument("SUZUKI: requires q = 2^(2f+1), f >= 1");
            unsigned f = (pp->second - 1) / 2;
            if (params->suzuki_f != 0 && params->suzuki_f != f)
                throw std::invalid_argument("SUZUKI: inconsistent f and q");
            break;
        }
        case FamilyTag::PSL3:
            if (q == 3 || q == 4)
                throw std::invalid_argument(
                    "PSL3: q = " + q.get_str() + " routes to the fixed set PSL3_" + q.get_str());
            if (q < 5) throw std::invalid_argument("PSL3: row requires q > 4");
            break;
        case FamilyTag::PSU3:
            if (q == 3)
                throw std::invalid_argument("PSU3: q = 3 routes to the fixed set G2_2_PRIME");
            if (q < 5) throw std::invalid_argument("PSU3: row requires q > 4");
            break;
        default: break;
    }
}

// ---------------------------------------------------------------------------
// Table rows

std::vector<mpz_class> psl2_even_row(const mpz_class& k) {
    return {1, k * (k - 1), k * (k + 1), k * k - 1};
}

std::vector<mpz_class> psl2_odd_row(const mpz_class& k) {
    int eps = (mpz_class(k % 4) == 1) ? 1 : -1;  // (-1)^((k-1)/2)
    return {1, k * (k - 1) / 2, k * (k + 1) / 2, (k * k - 1) / 2, k * (k - eps)};
}

std::vector<mpz_class> suzuki_row(unsigned f) {
    mpz_class r = mpz_class(1) << f;
    mpz_class q = 2 * r * r;
    mpz_class q2 = q * q;
    mpz_class two_3f2 = mpz_class(1) << (3 * f + 2);
    return {1,           (q - 1) * (q2 + 1),  q2 * (q - 1),
            two_3f2 * (q2 + 1), q2 * (q - 2 * r + 1), q2 * (q + 2 * r + 1)};
}

std::vector<mpz_class> psl3_row(const mpz_class& q, bool cong1_mod3) {
    mpz_class q2 = q * q, q3 = q2 * q;
    mpz_class a = q2 + q + 1, m1 = q - 1, p1 = q + 1, sq1 = q2 - 1;
    if (!cong1_mod3) {
        return {1,
                a * sq1 * m1,
                q2 * a * m1 * m1,
                q3 * a,
                q2 * sq1 * m1,
                q3 * sq1,
                q3 * sq1 * m1,
                q3 * m1 * m1};
    }
    return {1,
            a * p1 * m1 * m1 / 3,
            q2 * a * m1 * m1 / 3,
            q3 * a / 3,
            q2 * p1 * m1 * m1 / 3,
            q3 * m1 * p1 / 3,
            q3 * p1 * m1 * m1 / 3,
            q3 * m1 * m1 / 3,
            q3 * m1 * m1};
}

std::vector<mpz_class> psu3_row(const mpz_class& q, bool congm1_mod3) {
    mpz_class q2 = q * q, q3 = q2 * q;
    mpz_class b = q2 - q + 1, m1 = q - 1, p1 = q + 1, p1sq = p1 * p1;
    if (!congm1_mod3) {
        return {1,
                b * p1sq * m1,
                q3 * b,
                q2 * b * p1sq,
                q3 * p1sq * m1,
                q3 * p1sq,
                q2 * p1sq * m1,
                q3 * m1 * p1};
    }
    return {1,
            b * p1sq * m1 / 3,
            q3 * b / 3,
            q2 * b * p1sq / 3,
            q3 * p1sq * m1 / 3,
            q3 * p1sq / 3,
            q2 * p1sq * m1 / 3,
            q3 * m1 * p1 / 3,
            q3 * p1sq};
}

std::vector<Table1Entry> table1_entries(FamilyTag tag, const FamilyParams* params) {
    validate_family(tag, params);
    std::vector<mpz_class> vals;
    switch (tag) {
        case FamilyTag::PSL2_EVEN: vals = psl2_even_row(params->q); break;
        case FamilyTag::PSL2_ODD: vals = psl2_odd_row(params->q); break;
        case FamilyTag::SUZUKI: {
            auto pp = nt::prime_power(params->q);
            vals = suzuki_row((pp->second - 1) / 2);
            break;
        }
        case FamilyTag::PSL3: vals = psl3_row(params->q, mpz_class(params->q % 3) == 1); break;
        case FamilyTag::PSU3: vals = psu3_row(params->q, mpz_class(params->q % 3) == 2); break;
        default: {
            for (long v : fixed_data().at(tag).values) vals.emplace_back(v);
            break;
        }
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<Table1Entry> out;
    out.reserve(vals.size());
    for (auto& v : vals) out.push_back(Table1Entry{v, factored_or_plain(v)});
    return out;
}

CodegreeSet table1_set(FamilyTag tag, const FamilyParams* params) {
    auto entries = table1_entries(tag, params);
    CodegreeSet s;
    s.source = CodegreeSource::Formula;
    s.label = to_string(tag);
    if (is_parametric(tag)) s.label += "(q=" + params->q.get_str() + ")";
    for (auto& e : entries) s.values.push_back(e.value);
    return s;
}

mpz_class sl3_full_order(const mpz_class& q) {
    return qpow(q, 3) * (qpow(q, 3) - 1) * (q * q - 1);
}

mpz_class su3_full_order(const mpz_class& q) {
    return qpow(q, 3) * (qpow(q, 3) + 1) * (q * q - 1);
}

mpz_class expected_order(FamilyTag tag, const FamilyParams* params) {
    validate_family(tag, params);
    switch (tag) {
        case FamilyTag::PSL2_EVEN: return params->q * (params->q * params->q - 1);
        case FamilyTag::PSL2_ODD: return params->q * (params->q * params->q - 1) / 2;
        case FamilyTag::SUZUKI: {
            const mpz_class& q = params->q;
            return q * q * (q * q + 1) * (q - 1);
        }
        case FamilyTag::PSL3: {
            mpz_class d = mpz_class(params->q % 3) == 1 ? 3 : 1;
            return sl3_full_order(params->q) / d;
        }
        case FamilyTag::PSU3: {
            mpz_class d = mpz_class(params->q % 3) == 2 ? 3 : 1;
            return su3_full_order(params->q) / d;
        }
        default: return fixed_data().at(tag).order;
    }
}

unsigned cd_count(FamilyTag tag, const FamilyParams* params) {
    validate_family(tag, params);
    switch (tag) {
        case FamilyTag::PSL2_EVEN: return 4;
        case FamilyTag::PSL2_ODD: return 5;
        case FamilyTag::SUZUKI: return 6;
        case FamilyTag::PSL3: return mpz_class(params->q % 3) == 1 ? 9 : 8;
        case FamilyTag::PSU3: return mpz_class(params->q % 3) == 2 ? 9 : 8;
        default: return fixed_data().at(tag).cd;
    }
}

// ---------------------------------------------------------------------------
// Maximal subgroups of SL(3,q) and SU(3,q)

namespace {

MaxSubgroupRow make_row(std::string structure, std::string conditions, bool applicable,
                        mpz_class order, std::string origin, bool exact = true,
                        mpz_class upper = 0, bool parabolic = false) {
    MaxSubgroupRow r;
    r.structure = std::move(structure);
    r.conditions = std::move(conditions);
    r.applicable = applicable;
    r.order = order;
    r.order_origin = std::move(origin);
    r.order_exact = exact;
    r.order_upper = exact ? order : upper;
    r.parabolic = parabolic;
    return r;
}

}  // namespace

std::vector<MaxSubgroupRow> maximal_subgroup_orders(MatrixKind kind, const mpz_class& q) {
    auto pp = nt::prime_power(q);
    if (!pp) throw std::invalid_argument("maximal_subgroup_orders: q must be a prime power");
    const mpz_class p = pp->first;
    const unsigned e = pp->second;
    const bool q_is_prime = (e == 1);
    const bool q_odd = mpz_class(q % 2) == 1;
    mpz_class q2 = q * q, q3 = q2 * q;

    std::vector<MaxSubgroupRow> rows;
    if (kind == MatrixKind::SL3) {
        mpz_class d = gcd(mpz_class(q - 1), mpz_class(3));
        rows.push_back(make_row(
            "E_q^2 : GL(2,q)", "", true, q3 * (q - 1) * (q2 - 1),
            "q^2 * |GL(2,q)| = q^2 * q(q-1)(q^2-1)", true, 0, true));
        rows.push_back(make_row("(q-1)^2 : S_3", "q >= 5", q >= 5, 6 * (q - 1) * (q - 1),
                                "(q-1)^2 * |S_3|"));
        rows.push_back(make_row("(q^2+q+1) : 3", "q != 4", q != 4, 3 * (q2 + q + 1),
                                "cyclic (q^2+q+1) extended by 3"));
        for (unsigned r = 2; r <= e; ++r) {
            if (e % r != 0 || !nt::is_prime(mpz_class(r))) continue;
            mpz_class q0 = nt::pow_u(p, e / r);
            mpz_class ext = gcd(mpz_class((q - 1) / (q0 - 1)), mpz_class(3));
            rows.push_back(make_row("SL(3," + q0.get_str() + ").((q-1)/(q0-1), 3)",
                                    "q = q0^" + std::to_string(r) + ", prime power subfield",
                                    true, sl3_full_order(q0) * ext,
                                    "|SL(3,q0)| * gcd((q-1)/(q0-1), 3)"));
        }
        {
            bool appl = q_is_prime && mpz_class(q % 3) == 1;
            mpz_class ext = gcd(mpz_class(q - 1), mpz_class(9)) / 3;
            rows.push_back(make_row("3^{1+2}_+ : Q_8 . (q-1,9)/3", "q = p ≡ 1 (mod 3)", appl,
                                    appl ? mpz_class(27 * 8 * ext) : mpz_class(0),
                                    "27 * 8 * gcd(q-1,9)/3 from the printed shape", false,
                                    27 * 8 * 3));
        }
        rows.push_back(make_row("d x SO(3,q)", "q odd", q_odd, d * q * (q2 - 1),
                                "d * |SO(3,q)| = d * q(q^2-1)"));
        if (e % 2 == 0) {
            mpz_class q0 = nt::pow_u(p, e / 2);
            rows.push_back(make_row("(q0-1, 3) x SU(3," + q0.get_str() + ")", "q = q0^2", true,
                                    gcd(mpz_class(q0 - 1), mpz_class(3)) * su3_full_order(q0),
                                    "gcd(q0-1,3) * |SU(3,q0)|"));
        }
        {
            mpz_class qm7 = q % 7;
            bool appl = q_is_prime && (qm7 == 1 || qm7 == 2 || qm7 == 4) && q != 2;
            rows.push_back(make_row("d x PSL(2,7)", "q = p ≡ 1,2,4 (mod 7), q != 2", appl,
                                    d * 168, "d * |PSL(2,7)|"));
        }
        {
            mpz_class qm15 = q % 15;
            bool case1 = q_is_prime && (qm15 == 1 || qm15 == 4);
            bool case2 = (e == 2) && (mpz_class(p % 5) == 2 || mpz_class(p % 5) == 3) && p != 3;
            rows.push_back(make_row("3.A_6", "q = p ≡ 1,4 (mod 15); or q = p^2, p ≡ 2,3 (mod 5), p != 3",
                                    case1 || case2, 3 * 360, "3 * |A_6|"));
        }
    } else {
        mpz_class d = gcd(mpz_class(q + 1), mpz_class(3));
        rows.push_back(make_row("E_q^{1+2} : (q^2-1)", "", true, q3 * (q2 - 1),
                                "q^3 * (q^2-1), the isotropic-point stabilizer"));
        rows.push_back(make_row("GU(2,q)", "", true, q * (q + 1) * (q2 - 1),
                                "(q+1) * |SU(2,q)| = (q+1) * q(q^2-1)"));
        rows.push_back(make_row("(q+1)^2 : S_3", "q >= 5", q >= 5, 6 * (q + 1) * (q + 1),
                                "(q+1)^2 * |S_3|"));
        rows.push_back(make_row("(q^2-q+1) : 3", "q != 3,5", q != 3 && q != 5, 3 * (q2 - q + 1),
                                "cyclic (q^2-q+1) extended by 3"));
        for (unsigned r = 3; r <= e; ++r) {
            if (e % r != 0 || !nt::is_prime(mpz_class(r))) continue;  // r an odd prime
            mpz_class q0 = nt::pow_u(p, e / r);
            mpz_class ext = gcd(mpz_class((q + 1) / (q0 + 1)), mpz_class(3));
            rows.push_back(make_row("SU(3," + q0.get_str() + ").((q+1)/(q0+1), 3)",
                                    "q = q0^" + std::to_string(r) + ", r an odd prime", true,
                                    su3_full_order(q0) * ext,
                                    "|SU(3,q0)| * gcd((q+1)/(q0+1), 3)"));
        }
        {
            bool appl = q_is_prime && mpz_class(q % 3) == 2 && q >= 11;
            mpz_class ext = gcd(mpz_class(q + 1), mpz_class(9)) / 3;
            rows.push_back(make_row("3^{1+2}_+ : Q_8 . (q+1,9)/3", "q = p ≡ -1 (mod 3), q >= 11",
                                    appl, appl ? mpz_class(27 * 8 * ext) : mpz_class(0),
                                    "27 * 8 * gcd(q+1,9)/3 from the printed shape", false,
                                    27 * 8 * 3));
        }
        rows.push_back(make_row("d x SO(3,q)", "q odd, q >= 7", q_odd && q >= 7, d * q * (q2 - 1),
                                "d * |SO(3,q)| = d * q(q^2-1)"));
        {
            mpz_class qm7 = q % 7;
            bool appl = q_is_prime && (qm7 == 3 || qm7 == 5 || qm7 == 6) && q != 5;
            rows.push_back(make_row("d x PSL(2,7)", "q = p ≡ 3,5,6 (mod 7), q != 5", appl,
                                    d * 168, "d * |PSL(2,7)|"));
        }
        {
            mpz_class qm15 = q % 15;
            bool appl = q_is_prime && (qm15 == 11 || qm15 == 14);
            rows.push_back(make_row("3.A_6", "q = p ≡ 11,14 (mod 15)", appl, 3 * 360, "3 * |A_6|"));
        }
        rows.push_back(make_row("3.A_6.2_3", "q = 5", q == 5, 3 * 360 * 2, "2 * 3 * |A_6|"));
        rows.push_back(make_row("3.A_7", "q = 5", q == 5, 3 * 2520, "3 * |A_7|"));
    }
    return rows;
}

}  // namespace cdg
