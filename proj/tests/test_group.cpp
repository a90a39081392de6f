#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cdg/construct.hpp"
#include "cdg/group.hpp"

using namespace cdg;

namespace {

// Independent oracle: enumerate a small group by closing the generators under
// multiplication, then partition by conjugating with every element.
std::vector<Perm> enumerate_elements(const FiniteGroup& g) {
    std::set<Perm> seen(g.generators.begin(), g.generators.end());
    seen.insert(Perm(g.degree));
    std::vector<Perm> queue(seen.begin(), seen.end());
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const Perm& s : g.generators) {
            Perm n = queue[i] * s;
            if (seen.insert(n).second) queue.push_back(n);
        }
    }
    return queue;
}

std::vector<uint64_t> brute_class_sizes(const FiniteGroup& g) {
    auto elems = enumerate_elements(g);
    std::set<Perm> remaining(elems.begin(), elems.end());
    std::vector<uint64_t> sizes;
    while (!remaining.empty()) {
        Perm x = *remaining.begin();
        std::set<Perm> cls;
        for (const Perm& s : elems) cls.insert(conjugate(x, s));
        for (const Perm& c : cls) remaining.erase(c);
        sizes.push_back(cls.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("orders of small groups") {
    CHECK(group_order(alternating(5)) == 60);
    CHECK(group_order(symmetric(6)) == 720);
    CHECK(group_order(cyclic(12)) == 12);
    // order formula oracle: q^3 (q^3-1)(q^2-1) / gcd(3,q-1) at q = 4
    CHECK(group_order(psl3(4)) == 20160);
    CHECK(group_order(named_group(NamedTag::M11)) == 7920);
}

TEST_CASE("element index round trip") {
    Bsgs b = Bsgs::build(named_group(NamedTag::M11));
    REQUIRE(b.order_u64() == 7920);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        uint64_t idx = rng() % 7920;
        Perm g = b.element_at(idx);
        CHECK(b.element_index(g) == idx);
        CHECK(b.contains(g));
    }
    // a transposition is odd, M11 has none of degree-11 transposition type
    CHECK_FALSE(b.contains(Perm::parse_cycles("(0 1)", 11)));
}

TEST_CASE("conjugacy classes of S3 and A5 against the brute oracle") {
    auto s3 = conjugacy_classes(symmetric(3));
    REQUIRE(s3.size() == 3);
    CHECK(s3.classes[0].size == 1);
    CHECK(s3.classes[1].size == 3);
    CHECK(s3.classes[2].size == 2);
    CHECK(s3.exponent == 6);

    auto a5 = conjugacy_classes(alternating(5));
    std::vector<uint64_t> sizes;
    for (auto& c : a5.classes) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<uint64_t>{1, 12, 12, 15, 20});
    CHECK(sizes == brute_class_sizes(alternating(5)));
    CHECK(brute_class_sizes(symmetric(4)) == std::vector<uint64_t>{1, 3, 6, 6, 8});
    auto s4 = conjugacy_classes(symmetric(4));
    std::vector<uint64_t> s4sizes;
    for (auto& c : s4.classes) s4sizes.push_back(c.size);
    std::sort(s4sizes.begin(), s4sizes.end());
    CHECK(s4sizes == std::vector<uint64_t>{1, 3, 6, 6, 8});
}

TEST_CASE("class table contract") {
    for (auto g : {psl3(2), psu3(3), named_group(NamedTag::SZ8)}) {
        auto t = conjugacy_classes(g);
        CHECK(t.classes[0].element_order == 1);
        CHECK(t.classes[0].size == 1);
        uint64_t total = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            total += t.classes[i].size;
            CHECK(t.group_order % t.classes[i].size == 0);
            if (i > 0) CHECK(t.classes[i - 1].element_order <= t.classes[i].element_order);
            CHECK(t.classes[i].representative.order() == t.classes[i].element_order);
        }
        CHECK(total == t.group_order);
        // exponent = lcm of element orders, divides |G|
        CHECK(t.group_order % t.exponent == 0);
        // class_of agrees with representatives and is conjugation-invariant
        for (size_t i = 0; i < t.size(); ++i)
            CHECK(t.class_of(t.classes[i].representative) == static_cast<int32_t>(i));
        std::mt19937_64 rng(9);
        for (int k = 0; k < 50; ++k) {
            uint64_t idx = rng() % t.group_order;
            Perm x = t.bsgs->element_at(idx);
            const Perm& s = g.generators[rng() % g.generators.size()];
            CHECK(t.class_of(x) == t.class_of(conjugate(x, s)));
        }
    }
}

TEST_CASE("psl3(4) has ten classes") {
    auto t = conjugacy_classes(psl3(4));
    CHECK(t.size() == 10);
}

TEST_CASE("ceiling is enforced") {
    CHECK_THROWS_AS(conjugacy_classes(psl3(9)), CeilingExceeded);
    CHECK_THROWS_AS(conjugacy_classes(psl3(5), 100000), CeilingExceeded);
    CHECK_NOTHROW(conjugacy_classes(psl3(5), 400000));
}

TEST_CASE("deterministic class enumeration") {
    auto a = conjugacy_classes(named_group(NamedTag::M11));
    auto b = conjugacy_classes(named_group(NamedTag::M11));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a.classes[i].representative == b.classes[i].representative);
        CHECK(a.classes[i].size == b.classes[i].size);
    }
}
