#include <doctest.h>

#include <set>

#include "cdg/families.hpp"
#include "cdg/numtheory.hpp"

using namespace cdg;

namespace {

std::vector<mpz_class> values_of(FamilyTag tag, const FamilyParams* p) {
    return table1_set(tag, p).values;
}

FamilyParams P(long q) { return FamilyParams::for_q(q); }

}  // namespace

TEST_CASE("table rows at the worked parameters") {
    FamilyParams p4 = P(4);
    CHECK(values_of(FamilyTag::PSL2_EVEN, &p4) == std::vector<mpz_class>{1, 12, 15, 20});

    FamilyParams p5 = P(5);
    CHECK(values_of(FamilyTag::PSL3, &p5) ==
          std::vector<mpz_class>{1, 2000, 2400, 2976, 3000, 3875, 12000, 12400});
    CHECK(values_of(FamilyTag::PSU3, &p5) ==
          std::vector<mpz_class>{1, 875, 1000, 1008, 1200, 1500, 4500, 6000, 6300});

    FamilyParams suz = FamilyParams::for_suzuki_f(1);
    CHECK(suz.q == 8);
    CHECK(values_of(FamilyTag::SUZUKI, &suz) ==
          std::vector<mpz_class>{1, 320, 448, 455, 832, 2080});

    CHECK(values_of(FamilyTag::FIXED_M11, nullptr) ==
          std::vector<mpz_class>{1, 144, 176, 180, 495, 720, 792});
    CHECK(values_of(FamilyTag::FIXED_PSL3_4, nullptr) ==
          std::vector<mpz_class>{1, 315, 320, 448, 576, 1008});
    // the cached set has exactly one nontrivial odd entry, 189 = 3^3 * 7
    auto g2 = values_of(FamilyTag::FIXED_G2_2_PRIME, nullptr);
    std::vector<mpz_class> odd;
    for (const auto& v : g2)
        if (v > 1 && mpz_odd_p(v.get_mpz_t())) odd.push_back(v);
    CHECK(odd == std::vector<mpz_class>{189});

    auto p7 = P(7);
    CHECK(values_of(FamilyTag::PSL3, &p7) ==
          std::vector<mpz_class>{1, 4116, 4704, 5472, 5488, 6517, 12348, 32928, 33516});
}

TEST_CASE("invalid parameters are routed or rejected") {
    FamilyParams p4 = P(4), p3 = P(3), p5 = P(5), p6 = P(6), p2 = P(2);
    CHECK_THROWS_WITH_AS(values_of(FamilyTag::PSL3, &p4), doctest::Contains("PSL3_4"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(values_of(FamilyTag::PSL3, &p3), doctest::Contains("PSL3_3"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(values_of(FamilyTag::PSU3, &p3), doctest::Contains("G2_2_PRIME"),
                         std::invalid_argument);
    CHECK_THROWS_AS(values_of(FamilyTag::PSL2_ODD, &p5), std::invalid_argument);  // needs q > 5
    CHECK_THROWS_AS(values_of(FamilyTag::PSL2_EVEN, &p5), std::invalid_argument);
    CHECK_THROWS_AS(values_of(FamilyTag::PSL3, &p6), std::invalid_argument);
    CHECK_THROWS_AS(values_of(FamilyTag::SUZUKI, &p4), std::invalid_argument);
    CHECK_THROWS_AS(values_of(FamilyTag::SUZUKI, &p2), std::invalid_argument);
    CHECK_THROWS_AS(table1_set(FamilyTag::FIXED_M11, &p4), std::invalid_argument);
    CHECK_THROWS_AS(table1_set(FamilyTag::PSL3, nullptr), std::invalid_argument);
}

TEST_CASE("expected orders") {
    FamilyParams p4 = P(4), p5 = P(5);
    CHECK(expected_order(FamilyTag::PSL2_EVEN, &p4) == 60);
    CHECK(expected_order(FamilyTag::PSL3, &p5) == 372000);
    CHECK(expected_order(FamilyTag::FIXED_M11, nullptr) == 7920);
    CHECK(expected_order(FamilyTag::FIXED_J1, nullptr) == 175560);
    FamilyParams suz = FamilyParams::for_suzuki_f(1);
    CHECK(expected_order(FamilyTag::SUZUKI, &suz) == 29120);
}

TEST_CASE("degree counts") {
    FamilyParams p4 = P(4), p7 = P(7), p5 = P(5);
    CHECK(cd_count(FamilyTag::PSL2_EVEN, &p4) == 4);
    CHECK(cd_count(FamilyTag::FIXED_J1, nullptr) == 7);
    CHECK(cd_count(FamilyTag::PSL3, &p7) == 9);   // 7 ≡ 1 (mod 3)
    CHECK(cd_count(FamilyTag::PSL3, &p5) == 8);
    CHECK(cd_count(FamilyTag::PSU3, &p5) == 9);   // 5 ≡ -1 (mod 3)
    CHECK(cd_count(FamilyTag::FIXED_G2_2_PRIME, nullptr) == 8);
}

TEST_CASE("row size equals the degree count across the range") {
    for (const auto& q : nt::prime_powers_in(4, 150)) {
        auto pp = nt::prime_power(q);
        FamilyParams p = FamilyParams::for_q(q);
        std::vector<std::pair<FamilyTag, bool>> cases = {
            {FamilyTag::PSL2_EVEN, pp->first == 2 && q >= 4},
            {FamilyTag::PSL2_ODD, pp->first != 2 && q > 5},
            {FamilyTag::SUZUKI, pp->first == 2 && pp->second % 2 == 1 && pp->second >= 3},
            {FamilyTag::PSL3, q > 4},
            {FamilyTag::PSU3, q > 4},
        };
        for (auto [tag, valid] : cases) {
            if (!valid) continue;
            auto vals = values_of(tag, &p);
            CHECK(vals.size() == cd_count(tag, &p));
            // entries divide the group order
            mpz_class order = expected_order(tag, &p);
            for (const auto& v : vals) CHECK(order % v == 0);
        }
    }
    for (FamilyTag tag : fixed_family_tags()) {
        auto vals = values_of(tag, nullptr);
        CHECK(vals.size() == cd_count(tag, nullptr));
        mpz_class order = expected_order(tag, nullptr);
        for (const auto& v : vals) CHECK(order % v == 0);
    }
}

TEST_CASE("scaled congruence rows share the unscaled row's polynomial skeleton") {
    // tripling the 1/3-scaled entries of the congruent row reproduces exactly the
    // nontrivial entries of the non-congruent row evaluated at the same q
    for (long q : {7, 13, 19}) {
        auto cong = psl3_row(q, true);
        auto noncong = psl3_row(q, false);
        mpz_class unscaled = mpz_class(q) * q * q * (q - 1) * (q - 1);
        std::multiset<mpz_class> tripled;
        for (const auto& v : cong)
            if (v != 1 && v != unscaled) tripled.insert(3 * v);
        std::multiset<mpz_class> expect(noncong.begin(), noncong.end());
        expect.erase(1);
        CHECK(tripled == expect);
    }
    for (long q : {5, 11, 17}) {
        auto cong = psu3_row(q, true);
        auto noncong = psu3_row(q, false);
        mpz_class unscaled = mpz_class(q) * q * q * (q + 1) * (q + 1);
        std::multiset<mpz_class> tripled;
        for (const auto& v : cong)
            if (v != 1 && v != unscaled) tripled.insert(3 * v);
        std::multiset<mpz_class> expect(noncong.begin(), noncong.end());
        expect.erase(1);
        CHECK(tripled == expect);
    }
}

TEST_CASE("factored forms match the printed presentation") {
    FamilyParams p4 = P(4);
    auto entries = table1_entries(FamilyTag::FIXED_PSL3_4, nullptr);
    bool saw_1008 = false;
    for (const auto& e : entries)
        if (e.value == 1008) {
            saw_1008 = true;
            CHECK(e.factored == "2^4·3^2·7");
        }
    CHECK(saw_1008);
}

TEST_CASE("maximal subgroup tables") {
    // parabolic of SL(3,5): order 12000, index 31 = q^2+q+1
    auto rows5 = maximal_subgroup_orders(MatrixKind::SL3, 5);
    bool saw_parabolic = false, saw_torus_norm = false;
    for (const auto& r : rows5) {
        if (r.parabolic) {
            saw_parabolic = true;
            CHECK(r.order == 12000);
            CHECK(sl3_full_order(5) / r.order == 31);
        }
        if (r.structure == "(q-1)^2 : S_3") {
            saw_torus_norm = true;
            CHECK(r.applicable);
            CHECK(r.order == 96);
        }
    }
    CHECK(saw_parabolic);
    CHECK(saw_torus_norm);

    // (q^2-q+1):3 of SU(3,5) exists as a row but is not applicable at q = 5
    auto su5 = maximal_subgroup_orders(MatrixKind::SU3, 5);
    bool found = false;
    for (const auto& r : su5)
        if (r.structure == "(q^2-q+1) : 3") {
            found = true;
            CHECK(r.order == 63);
            CHECK_FALSE(r.applicable);
        }
    CHECK(found);

    // exact orders divide the matrix group order, both kinds, across the range
    for (const auto& q : nt::prime_powers_in(5, 101)) {
        for (auto kind : {MatrixKind::SL3, MatrixKind::SU3}) {
            mpz_class full = kind == MatrixKind::SL3 ? sl3_full_order(q) : su3_full_order(q);
            for (const auto& r : maximal_subgroup_orders(kind, q)) {
                if (!r.applicable || !r.order_exact) continue;
                CHECK(full % r.order == 0);
                CHECK(r.order_upper == r.order);
            }
        }
    }
}
