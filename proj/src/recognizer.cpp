#include "cdg/recognizer.hpp"

#include <algorithm>
#include <set>

#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

std::vector<mpz_class> sorted_unique(std::vector<mpz_class> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool equals_row(const std::vector<mpz_class>& S, std::vector<mpz_class> row) {
    return S == sorted_unique(std::move(row));
}

RecognizerDiagnostics diagnose(const std::vector<mpz_class>& S) {
    RecognizerDiagnostics d;
    d.set_size = S.size();
    for (const auto& v : S) {
        if (v > 1 && mpz_odd_p(v.get_mpz_t())) d.odd_nontrivial.push_back(v);
        d.two_parts.push_back(mpz_class(1) << nt::v2(v));
    }
    std::sort(d.two_parts.begin(), d.two_parts.end());
    d.divisor_counts.resize(S.size(), 0);
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = 0; j < S.size(); ++j)
            if (i != j && mpz_divisible_p(S[i].get_mpz_t(), S[j].get_mpz_t()))
                ++d.divisor_counts[i];
    return d;
}

void push_window(std::vector<mpz_class>& out, const mpz_class& center, long radius) {
    for (long d = -radius; d <= radius; ++d) {
        mpz_class c = center + d;
        if (c > 1) out.push_back(c);
    }
}

std::optional<std::vector<mpz_class>> row_for(FamilyTag tag, const mpz_class& q) {
    auto pp = nt::prime_power(q);
    if (!pp) return std::nullopt;
    switch (tag) {
        case FamilyTag::PSL2_EVEN:
            if (pp->first != 2 || q < 4) return std::nullopt;
            return psl2_even_row(q);
        case FamilyTag::PSL2_ODD:
            if (pp->first == 2 || q <= 5) return std::nullopt;
            return psl2_odd_row(q);
        case FamilyTag::SUZUKI: {
            if (pp->first != 2 || pp->second % 2 == 0 || pp->second < 3) return std::nullopt;
            return suzuki_row((pp->second - 1) / 2);
        }
        case FamilyTag::PSL3:
            if (q < 5) return std::nullopt;
            return psl3_row(q, mpz_class(q % 3) == 1);
        case FamilyTag::PSU3:
            if (q < 5) return std::nullopt;
            return psu3_row(q, mpz_class(q % 3) == 2);
        default: return std::nullopt;
    }
}

}  // namespace

std::vector<mpz_class> candidate_parameters(FamilyTag tag, const mpz_class& max_entry) {
    std::vector<mpz_class> cands;
    const mpz_class& M = max_entry;
    switch (tag) {
        case FamilyTag::PSL2_EVEN:
            // max entry is k(k+1)
            push_window(cands, nt::nth_root(M + 1, 2), 1);
            push_window(cands, nt::nth_root(M, 2), 2);
            break;
        case FamilyTag::PSL2_ODD:
            // max entry is k(k - eps), so sqrt(M) brackets k; the doubled window
            // covers the k(k+1)/2-dominated reading as well
            push_window(cands, nt::nth_root(M, 2), 2);
            push_window(cands, nt::nth_root(2 * M, 2), 2);
            break;
        case FamilyTag::SUZUKI:
            // max entry is 2^(3f+2)(q^2+1) = 2^(7f+4) + 2^(3f+2), so the true f
            // satisfies 2^(7f+4) < M <= 2^(7f+5)
            for (unsigned f = 1; f < 24; ++f) {
                mpz_class lo = mpz_class(1) << (7 * f + 4);
                if (lo > 2 * M) break;
                if (M <= 2 * lo) cands.push_back(mpz_class(1) << (2 * f + 1));
            }
            break;
        case FamilyTag::PSL3:
        case FamilyTag::PSU3:
            // max entry is a sextic in q, exactly or 1/3-scaled
            push_window(cands, nt::nth_root(M, 6), 2);
            push_window(cands, nt::nth_root(3 * M, 6), 2);
            push_window(cands, nt::nth_root(3 * M, 5), 2);
            break;
        default: break;
    }
    return sorted_unique(std::move(cands));
}

Identification recognize(const std::vector<mpz_class>& set_values) {
    std::vector<mpz_class> S = sorted_unique(set_values);
    Identification id;
    id.diagnostics = diagnose(S);

    if (S.empty() || S[0] < 1) throw std::invalid_argument("recognize: entries must be >= 1");
    if (S[0] != 1 || S.size() == 1) {
        id.diagnostics.note = "not a codegree set of a nonabelian simple group";
        return id;
    }

    for (FamilyTag tag : fixed_family_tags()) {
        if (S == table1_set(tag, nullptr).values)
            id.matches.push_back(RecognizerMatch{tag, FamilyParams{}});
    }

    const mpz_class M = S.back();
    for (FamilyTag tag : {FamilyTag::PSL2_EVEN, FamilyTag::PSL2_ODD, FamilyTag::SUZUKI,
                          FamilyTag::PSL3, FamilyTag::PSU3}) {
        for (const mpz_class& q : candidate_parameters(tag, M)) {
            auto row = row_for(tag, q);
            if (!row || !equals_row(S, std::move(*row))) continue;
            id.matches.push_back(RecognizerMatch{tag, FamilyParams::for_q(q)});
        }
    }
    return id;
}

std::string to_string(EliminationReason r) {
    switch (r) {
        case EliminationReason::CARDINALITY_MISMATCH: return "CARDINALITY_MISMATCH";
        case EliminationReason::ODD_PART_MISMATCH: return "ODD_PART_MISMATCH";
        case EliminationReason::TWO_PART_MISMATCH: return "TWO_PART_MISMATCH";
        case EliminationReason::NO_PARAMETER: return "NO_PARAMETER";
        case EliminationReason::SET_MISMATCH: return "SET_MISMATCH";
    }
    return "?";
}

EliminationReport explain_elimination(const std::vector<mpz_class>& raw, FamilyTag family) {
    std::vector<mpz_class> S = sorted_unique(raw);
    RecognizerDiagnostics d = diagnose(S);

    // cardinality
    std::vector<size_t> allowed;
    if (is_parametric(family)) {
        switch (family) {
            case FamilyTag::PSL2_EVEN: allowed = {4}; break;
            case FamilyTag::PSL2_ODD: allowed = {5}; break;
            case FamilyTag::SUZUKI: allowed = {6}; break;
            default: allowed = {8, 9}; break;
        }
    } else {
        allowed = {table1_set(family, nullptr).values.size()};
    }
    if (std::find(allowed.begin(), allowed.end(), S.size()) == allowed.end()) {
        std::string exp;
        for (size_t i = 0; i < allowed.size(); ++i)
            exp += (i ? " or " : "") + std::to_string(allowed[i]);
        return {EliminationReason::CARDINALITY_MISMATCH,
                "set size " + std::to_string(S.size()) + " vs " + exp};
    }

    // odd part: every table row has exactly one nontrivial odd entry
    if (is_parametric(family)) {
        if (d.odd_nontrivial.size() != 1)
            return {EliminationReason::ODD_PART_MISMATCH,
                    "row has exactly one nontrivial odd entry, set has " +
                        std::to_string(d.odd_nontrivial.size())};
    } else {
        auto fixed = table1_set(family, nullptr);
        std::vector<mpz_class> fodd;
        for (const auto& v : fixed.values)
            if (v > 1 && mpz_odd_p(v.get_mpz_t())) fodd.push_back(v);
        if (fodd != d.odd_nontrivial)
            return {EliminationReason::ODD_PART_MISMATCH, "nontrivial odd entries differ"};
    }

    // 2-part multiset signatures (conservative; inconclusive for the odd-parameter
    // PSL3/PSU3 rows where the 2-part pattern depends on q)
    auto two_part_bad = [&]() -> bool {
        const auto& tp = d.two_parts;  // sorted, includes the 1s
        auto exp_of = [](const mpz_class& v) { return nt::v2(v); };
        switch (family) {
            case FamilyTag::PSL2_EVEN: {
                // {1, 1, 2^a, 2^a}, a >= 2 (the leading 1 is the entry 1 itself)
                if (tp.size() != 4) return true;
                return !(tp[0] == 1 && tp[1] == 1 && tp[2] == tp[3] && tp[2] >= 4);
            }
            case FamilyTag::PSL2_ODD: {
                // {1, 1, 2^(a-1), 2^a, 2^a}, a >= 2
                if (tp.size() != 5) return true;
                if (!(tp[0] == 1 && tp[1] == 1 && tp[3] == tp[4] && tp[3] >= 4)) return true;
                return exp_of(tp[2]) + 1 != exp_of(tp[3]);
            }
            case FamilyTag::SUZUKI: {
                // {1, 1, 2^(3f+2), 2^(4f+2) x3}
                if (tp.size() != 6) return true;
                if (!(tp[0] == 1 && tp[1] == 1)) return true;
                if (!(tp[3] == tp[4] && tp[4] == tp[5])) return true;
                unsigned b = exp_of(tp[2]), a = exp_of(tp[3]);
                return 4 * b != 3 * a + 2;
            }
            case FamilyTag::FIXED_PSL3_3:
            case FamilyTag::FIXED_PSL3_4:
            case FamilyTag::FIXED_A7:
            case FamilyTag::FIXED_J1:
            case FamilyTag::FIXED_M11:
            case FamilyTag::FIXED_G2_2_PRIME: {
                auto fixed = table1_set(family, nullptr);
                std::vector<mpz_class> ftp;
                for (const auto& v : fixed.values) ftp.push_back(mpz_class(1) << nt::v2(v));
                std::sort(ftp.begin(), ftp.end());
                return ftp != tp;
            }
            default: return false;  // inconclusive
        }
    };
    if (two_part_bad())
        return {EliminationReason::TWO_PART_MISMATCH, "2-part multiset incompatible with the row"};

    if (!is_parametric(family)) {
        if (S == table1_set(family, nullptr).values)
            throw std::invalid_argument("explain_elimination: family matches the set");
        return {EliminationReason::SET_MISMATCH, "fixed set differs"};
    }

    bool any_candidate = false;
    for (const mpz_class& q : candidate_parameters(family, S.back())) {
        auto row = row_for(family, q);
        if (!row) continue;
        any_candidate = true;
        if (equals_row(S, std::move(*row)))
            throw std::invalid_argument("explain_elimination: family matches the set at q=" +
                                        q.get_str());
    }
    if (!any_candidate)
        return {EliminationReason::NO_PARAMETER, "no valid parameter in the inversion window"};
    return {EliminationReason::SET_MISMATCH,
            "candidate parameters exist but no evaluated row equals the set"};
}

}  // namespace cdg
