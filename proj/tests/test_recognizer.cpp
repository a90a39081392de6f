#include <doctest.h>

#include "cdg/numtheory.hpp"
#include "cdg/recognizer.hpp"

using namespace cdg;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> xs) {
    return std::vector<mpz_class>(xs.begin(), xs.end());
}

// all valid parametric instances with q <= q_max (Suzuki by f <= f_max)
std::vector<std::pair<FamilyTag, FamilyParams>> instances(long q_max, unsigned f_max) {
    std::vector<std::pair<FamilyTag, FamilyParams>> out;
    for (const auto& q : nt::prime_powers_in(4, q_max)) {
        auto pp = nt::prime_power(q);
        if (pp->first == 2 && q >= 4)
            out.emplace_back(FamilyTag::PSL2_EVEN, FamilyParams::for_q(q));
        if (pp->first != 2 && q > 5)
            out.emplace_back(FamilyTag::PSL2_ODD, FamilyParams::for_q(q));
        if (q > 4) {
            out.emplace_back(FamilyTag::PSL3, FamilyParams::for_q(q));
            out.emplace_back(FamilyTag::PSU3, FamilyParams::for_q(q));
        }
    }
    for (unsigned f = 1; f <= f_max; ++f)
        out.emplace_back(FamilyTag::SUZUKI, FamilyParams::for_suzuki_f(f));
    return out;
}

}  // namespace

TEST_CASE("worked recognitions") {
    Identification id = recognize(Z({1, 12, 15, 20}));
    REQUIRE(id.matches.size() == 1);
    CHECK(id.matches[0].tag == FamilyTag::PSL2_EVEN);
    CHECK(id.matches[0].params.q == 4);

    id = recognize(Z({1, 144, 176, 180, 495, 720, 792}));
    REQUIRE(id.matches.size() == 1);
    CHECK(id.matches[0].tag == FamilyTag::FIXED_M11);

    CHECK(recognize(Z({1, 2, 3})).matches.empty());

    id = recognize(Z({1, 4116, 4704, 5472, 5488, 6517, 12348, 32928, 33516}));
    REQUIRE(id.matches.size() == 1);
    CHECK(id.matches[0].tag == FamilyTag::PSL3);
    CHECK(id.matches[0].params.q == 7);

    id = recognize(Z({1, 320, 448, 455, 832, 2080}));
    REQUIRE(id.matches.size() == 1);
    CHECK(id.matches[0].tag == FamilyTag::SUZUKI);
    CHECK(id.matches[0].params.q == 8);
}

TEST_CASE("degenerate inputs") {
    CHECK(recognize(Z({2, 6})).matches.empty());  // no 1
    CHECK(recognize(Z({1})).matches.empty());
    CHECK(recognize(Z({1})).diagnostics.note ==
          "not a codegree set of a nonabelian simple group");
    CHECK_THROWS_AS(recognize({}), std::invalid_argument);
}

TEST_CASE("diagnostics summarize the set structure") {
    Identification id = recognize(Z({1, 315, 320, 448, 576, 1008}));
    CHECK(id.diagnostics.set_size == 6);
    CHECK(id.diagnostics.odd_nontrivial == Z({315}));
    // 2-parts: 1, 1(315), 64, 64, 64, 16
    std::vector<mpz_class> tp = id.diagnostics.two_parts;
    CHECK(tp == Z({1, 1, 16, 64, 64, 64}));
    REQUIRE(id.matches.size() == 1);
    CHECK(id.matches[0].tag == FamilyTag::FIXED_PSL3_4);
}

TEST_CASE("round trip over a modest parameter range") {
    for (const auto& [tag, params] : instances(60, 2)) {
        auto set = table1_set(tag, &params);
        Identification id = recognize(set.values);
        std::string label = to_string(tag) + " q=" + params.q.get_str();
        REQUIRE_MESSAGE(id.matches.size() == 1, label);
        CHECK(id.matches[0].tag == tag);
        CHECK(id.matches[0].params.q == params.q);
    }
    for (FamilyTag tag : fixed_family_tags()) {
        Identification id = recognize(table1_set(tag, nullptr).values);
        REQUIRE(id.matches.size() == 1);
        CHECK(id.matches[0].tag == tag);
    }
}

TEST_CASE("window soundness: true parameter inside the candidate set") {
    for (const auto& [tag, params] : instances(499, 4)) {
        auto vals = table1_set(tag, &params).values;
        auto cands = candidate_parameters(tag, vals.back());
        std::string label = to_string(tag) + " q=" + params.q.get_str();
        CHECK_MESSAGE(std::find(cands.begin(), cands.end(), params.q) != cands.end(), label);
    }
}

TEST_CASE("every parametric row has exactly one nontrivial odd entry") {
    for (const auto& [tag, params] : instances(499, 4)) {
        unsigned odd = 0;
        for (const auto& v : table1_set(tag, &params).values)
            if (v > 1 && mpz_odd_p(v.get_mpz_t())) ++odd;
        std::string label = to_string(tag) + " q=" + params.q.get_str();
        CHECK_MESSAGE(odd == 1, label);
    }
}

TEST_CASE("elimination reports under the fixed check order") {
    auto m11 = table1_set(FamilyTag::FIXED_M11, nullptr).values;
    EliminationReport r = explain_elimination(m11, FamilyTag::PSL2_EVEN);
    CHECK(r.reason == EliminationReason::CARDINALITY_MISMATCH);
    CHECK(r.detail == "set size 7 vs 4");

    // |cod(PSL(3,5))| = 8 vs the 6-entry Suzuki rows: cardinality fires first
    FamilyParams p5 = FamilyParams::for_q(5);
    auto psl35 = table1_set(FamilyTag::PSL3, &p5).values;
    r = explain_elimination(psl35, FamilyTag::SUZUKI);
    CHECK(r.reason == EliminationReason::CARDINALITY_MISMATCH);

    // PSL3 at q=7 against PSU3: sizes agree (9 allowed), odd counts agree,
    // the parameter search finds candidates but no row matches
    FamilyParams p7 = FamilyParams::for_q(7);
    auto psl37 = table1_set(FamilyTag::PSL3, &p7).values;
    r = explain_elimination(psl37, FamilyTag::PSU3);
    CHECK(r.reason == EliminationReason::SET_MISMATCH);

    // structural (odd-count / 2-part) signature catches a doctored Suzuki-like set
    std::vector<mpz_class> doctored = {1, 455, 448, 320, 832, 2081};
    r = explain_elimination(doctored, FamilyTag::SUZUKI);
    CHECK((r.reason == EliminationReason::ODD_PART_MISMATCH ||
           r.reason == EliminationReason::TWO_PART_MISMATCH));

    CHECK_THROWS_AS(explain_elimination(m11, FamilyTag::FIXED_M11), std::invalid_argument);
    FamilyParams p4 = FamilyParams::for_q(4);
    auto a5set = table1_set(FamilyTag::PSL2_EVEN, &p4).values;
    CHECK_THROWS_AS(explain_elimination(a5set, FamilyTag::PSL2_EVEN), std::invalid_argument);
}
