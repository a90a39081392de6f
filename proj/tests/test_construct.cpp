#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cdg/construct.hpp"
#include "cdg/families.hpp"
#include "cdg/numtheory.hpp"

using namespace cdg;

namespace {

mpz_class psl3_order(const mpz_class& q) {
    return sl3_full_order(q) / gcd(mpz_class(q - 1), mpz_class(3));
}

mpz_class psu3_order(const mpz_class& q) {
    return su3_full_order(q) / gcd(mpz_class(q + 1), mpz_class(3));
}

bool transitive(const FiniteGroup& g) {
    std::vector<bool> seen(g.degree, false);
    std::vector<uint16_t> orbit{0};
    seen[0] = true;
    for (size_t i = 0; i < orbit.size(); ++i)
        for (const Perm& s : g.generators) {
            uint16_t img = s[orbit[i]];
            if (!seen[img]) {
                seen[img] = true;
                orbit.push_back(img);
            }
        }
    return orbit.size() == g.degree;
}

}  // namespace

TEST_CASE("psl2 family") {
    CHECK(psl2(4).degree == 5);
    CHECK(group_order(psl2(4)) == 60);
    for (long q : {4, 5, 7, 8, 9, 11, 13}) {
        FiniteGroup g = psl2(q);
        CHECK(g.degree == q + 1);
        mpz_class expect = mpz_class(q) * (mpz_class(q) * q - 1);
        if (q % 2 == 1) expect /= 2;
        CHECK(group_order(g) == expect);
        CHECK(transitive(g));
    }
    CHECK_THROWS_AS(psl2(6), std::invalid_argument);
    CHECK_THROWS_AS(psl2(3), std::invalid_argument);
}

TEST_CASE("psl3 order formula for prime powers up to 9") {
    for (long q : {2, 3, 4, 5, 7, 8, 9}) {
        FiniteGroup g = psl3(q);
        CHECK(g.degree == q * q + q + 1);
        CHECK(group_order(g) == psl3_order(q));
        CHECK(transitive(g));
    }
    CHECK(psl3(2).degree == 7);
    CHECK(group_order(psl3(2)) == 168);
}

TEST_CASE("psu3 order formula and degree") {
    for (long q : {3, 4, 5}) {
        FiniteGroup g = psu3(q);
        CHECK(g.degree == q * q * q + 1);
        CHECK(group_order(g) == psu3_order(q));
        CHECK(transitive(g));
    }
    CHECK(psu3(3).degree == 28);
    CHECK(group_order(psu3(3)) == 6048);
    CHECK_THROWS_AS(psu3(2), std::invalid_argument);
    CHECK_THROWS_AS(psu3(6), std::invalid_argument);
}

TEST_CASE("covering groups") {
    FiniteGroup sl34 = sl3_cover(4);
    CHECK(sl34.degree == 63);
    CHECK(group_order(sl34) == sl3_full_order(4));
    FiniteGroup su35 = su3_cover(5);
    CHECK(su35.degree == 3024);
    CHECK(group_order(su35) == su3_full_order(5));
}

TEST_CASE("named groups") {
    CHECK(group_order(named_group(NamedTag::A7)) == 2520);
    CHECK(group_order(named_group(NamedTag::M11)) == 7920);
    CHECK(group_order(named_group(NamedTag::SZ8)) == 29120);
    CHECK(named_group(NamedTag::SZ8).degree == 65);
    FiniteGroup j1 = named_group(NamedTag::J1);
    CHECK(j1.degree == 266);
    CHECK(group_order(j1) == 175560);
    CHECK(group_order(named_group(NamedTag::G2_2_PRIME)) == 6048);
    CHECK_THROWS_AS(named_tag_from_string("M12"), std::invalid_argument);
}

TEST_CASE("q^3 is the largest prime-power divisor of |PSL(3,q)|") {
    for (const auto& q : nt::prime_powers_in(5, 97)) {
        mpz_class order = psl3_order(q);
        mpz_class q3 = q * q * q;
        mpz_class largest = 0;
        for (const auto& [p, e] : nt::factor(order)) {
            mpz_class ppow;
            mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), e);
            largest = std::max(largest, ppow);
        }
        CHECK(largest == q3);
    }
}

TEST_CASE("group spec parsing") {
    CHECK(group_order(parse_group_spec("name:M11")) == 7920);
    CHECK(group_order(parse_group_spec("psl:2:7")) == 168);
    CHECK(group_order(parse_group_spec("psl:3:4")) == 20160);
    CHECK(group_order(parse_group_spec("psu:3:3")) == 6048);
    CHECK_THROWS(parse_group_spec("psl:3:6"));
    CHECK_THROWS(parse_group_spec("/nonexistent/file/path"));
}

TEST_CASE("generators file") {
    std::string path = "test_gens_tmp.txt";
    {
        std::ofstream out(path);
        out << "# symmetric group on three points\n";
        out << "(0 1)\n";
        out << "(0 1 2)\n";
        out << "\n";
        out << "(not parsed after blank line\n";
    }
    FiniteGroup g = load_generators_file(path);
    CHECK(g.degree == 3);
    CHECK(group_order(g) == 6);
    std::remove(path.c_str());
}
