#include <doctest.h>

#include <stdexcept>

#include "cdg/gf.hpp"

using namespace cdg;

static void check_field_axioms(const Gf& F) {
    const uint32_t q = F.q();
    for (uint32_t a = 0; a < q; ++a) {
        CHECK(F.add(a, 0) == a);
        CHECK(F.mul(a, 1) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        for (uint32_t b = 0; b < q; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (uint32_t c = 0; c < std::min(q, 8u); ++c) {
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            }
        }
    }
}

TEST_CASE("prime and extension fields satisfy the axioms") {
    check_field_axioms(Gf(3, 1));
    check_field_axioms(Gf(2, 2));
    check_field_axioms(Gf(2, 3));
    check_field_axioms(Gf(3, 2));
    check_field_axioms(Gf(5, 2));
}

TEST_CASE("field sizes and rejection of non-prime characteristic") {
    CHECK(Gf(2, 2).q() == 4);
    CHECK(Gf(3, 1).q() == 3);
    CHECK(Gf(5, 2).q() == 25);
    CHECK_THROWS_AS(Gf(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(Gf(4, 2), std::invalid_argument);
}

TEST_CASE("frobenius has order e on GF(p^e)") {
    Gf F(5, 2);
    // x -> x^5 must have order 2 and fix exactly the prime field
    uint32_t fixed = 0;
    bool identity = true;
    for (uint32_t a = 0; a < F.q(); ++a) {
        uint32_t fa = F.frobenius(a);
        if (fa == a) ++fixed;
        else identity = false;
        CHECK(F.frobenius(fa) == a);  // order 2
    }
    CHECK_FALSE(identity);
    CHECK(fixed == 5);
}

TEST_CASE("generator has full multiplicative order") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{2, 3}, {3, 2}, {5, 2}, {13, 1}}) {
        Gf F(p, e);
        uint32_t g = F.generator();
        uint32_t x = g;
        uint32_t ord = 1;
        while (x != 1) {
            x = F.mul(x, g);
            ++ord;
        }
        CHECK(ord == F.q() - 1);
    }
}

TEST_CASE("defining polynomial is deterministic") {
    Gf a(2, 3), b(2, 3);
    CHECK(a.defining_poly() == b.defining_poly());
    // x^3 + x + 1 is the least irreducible cubic over GF(2)
    CHECK(a.defining_poly() == std::vector<uint32_t>{1, 1, 0, 1});
}
