// Acceptance suite: runs the toolkit's gate checks end to end and prints one
// [PASS]/[FAIL] line per criterion. Exits nonzero if any criterion fails.
//
// --skip-slow omits the two multi-second brute-force targets (PSL(3,5) and the
// SU(3,5) cover) for quick iteration; the default run covers everything.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cdg/chartab.hpp"
#include "cdg/codegree.hpp"
#include "cdg/construct.hpp"
#include "cdg/families.hpp"
#include "cdg/numtheory.hpp"
#include "cdg/recognizer.hpp"
#include "cdg/verifier.hpp"

using namespace cdg;
using Clock = std::chrono::steady_clock;

namespace {

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;
    double seconds = 0;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::vector<Criterion> g_results;

void report(Criterion c) {
    std::printf("[%s] %s (%.1f s)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds);
    for (const auto& n : c.notes) std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
    g_results.push_back(std::move(c));
}

std::string set_str(const std::vector<mpz_class>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + "}";
}

// Tables brute-forced during the run, re-used by the property criterion.
struct BruteGroup {
    std::string label;
    FiniteGroup group;
    CharacterTable table;
    bool simple;
};
std::vector<BruteGroup> g_brute;

const CharacterTable& brute_table(const std::string& label, FiniteGroup g, bool simple) {
    for (const auto& b : g_brute)
        if (b.label == label) return b.table;
    CharacterTable t = character_table(g);
    g_brute.push_back(BruteGroup{label, std::move(g), std::move(t), simple});
    return g_brute.back().table;
}

}  // namespace

// criterion 1: brute force vs table rows, small groups
static void criterion1() {
    auto t0 = Clock::now();
    Criterion c{"criterion 1: brute-force codegree sets equal the table rows (small groups)"};

    struct Case {
        std::string label;
        FiniteGroup group;
        std::vector<mpz_class> expected;
        bool simple = true;
    };
    std::vector<Case> cases;
    auto row = [](FamilyTag tag, long q) {
        FamilyParams p = FamilyParams::for_q(q);
        return table1_set(tag, &p).values;
    };
    // PSL(2,4) and PSL(2,5) are both the even row at k = 4
    cases.push_back({"PSL(2,4)", psl2(4), row(FamilyTag::PSL2_EVEN, 4)});
    cases.push_back({"PSL(2,5)", psl2(5), row(FamilyTag::PSL2_EVEN, 4)});
    cases.push_back({"PSL(2,8)", psl2(8), row(FamilyTag::PSL2_EVEN, 8)});
    for (long q : {7L, 9L, 11L, 13L})
        cases.push_back({"PSL(2," + std::to_string(q) + ")", psl2(q), row(FamilyTag::PSL2_ODD, q)});
    cases.push_back({"A7", named_group(NamedTag::A7), table1_set(FamilyTag::FIXED_A7, nullptr).values});
    cases.push_back({"M11", named_group(NamedTag::M11), table1_set(FamilyTag::FIXED_M11, nullptr).values});
    cases.push_back({"PSL(3,3)", psl3(3), table1_set(FamilyTag::FIXED_PSL3_3, nullptr).values});
    cases.push_back({"PSL(3,4)", psl3(4), table1_set(FamilyTag::FIXED_PSL3_4, nullptr).values});
    cases.push_back(
        {"PSU(3,3)", psu3(3), table1_set(FamilyTag::FIXED_G2_2_PRIME, nullptr).values});
    // PSU(3,4) has no validated row instance (the parametric rows require q > 4):
    // compare against the raw row polynomials evaluated at q = 4.
    {
        std::vector<mpz_class> raw = psu3_row(4, false);
        std::sort(raw.begin(), raw.end());
        cases.push_back({"PSU(3,4)", psu3(4), std::move(raw)});
    }
    {
        FamilyParams suz = FamilyParams::for_suzuki_f(1);
        cases.push_back({"Sz(8)", named_group(NamedTag::SZ8),
                         table1_set(FamilyTag::SUZUKI, &suz).values});
    }

    // the cached G2(2)' set must have 189 = 3^3*7 as its unique nontrivial odd entry
    {
        auto g2 = table1_set(FamilyTag::FIXED_G2_2_PRIME, nullptr).values;
        std::vector<mpz_class> odd;
        for (const auto& v : g2)
            if (v > 1 && mpz_odd_p(v.get_mpz_t())) odd.push_back(v);
        c.require(odd == std::vector<mpz_class>{189},
                  "G2(2)' cached set: odd entries " + set_str(odd) + " != {189}");
    }

    for (auto& cs : cases) {
        auto tg = Clock::now();
        const CharacterTable& t = brute_table(cs.label, cs.group, cs.simple);
        CodegreeSet got = codegree_set(t, cs.label);
        double dt = secs_since(tg);
        if (got.values != cs.expected)
            c.fail(cs.label + ": brute " + set_str(got.values) + " vs row " + set_str(cs.expected));
        if (cs.label == "PSL(3,4)" && dt > 60.0)
            c.fail("PSL(3,4) exceeded its 60 s budget: " + std::to_string(dt) + " s");
    }
    c.seconds = secs_since(t0);
    c.require(c.seconds < 300.0, "total runtime exceeded the 5 minute budget");
    report(std::move(c));
}

// criterion 2: PSL(3,5) stretch oracle
static void criterion2(bool skip_slow) {
    auto t0 = Clock::now();
    Criterion c{"criterion 2: PSL(3,5) brute force equals the q=5 row (slow tier)"};
    if (skip_slow) {
        c.notes.push_back("skipped by --skip-slow");
        c.seconds = secs_since(t0);
        report(std::move(c));
        return;
    }
    const CharacterTable& t = brute_table("PSL(3,5)", psl3(5), true);
    CodegreeSet got = codegree_set(t, "PSL(3,5)");
    std::vector<mpz_class> expected{1, 2000, 2400, 2976, 3000, 3875, 12000, 12400};
    c.require(got.values == expected, "brute " + set_str(got.values) + " vs " + set_str(expected));
    c.seconds = secs_since(t0);
    c.require(c.seconds < 1800.0, "exceeded the 30 minute budget");
    report(std::move(c));
}

// criterion 3: covering-group codegrees
static void criterion3(bool skip_slow) {
    auto t0 = Clock::now();
    Criterion c{"criterion 3: new codegrees of SL(3,4) and SU(3,5)"};

    const CharacterTable& sl = brute_table("SL(3,4)", sl3_cover(4), false);
    CodegreeSet sl_set = codegree_set(sl, "SL(3,4)");
    CodegreeSet psl34 = table1_set(FamilyTag::FIXED_PSL3_4, nullptr);
    c.require(sl_set.contains(2880), "2880 missing from cod(SL(3,4)) = " + set_str(sl_set.values));
    c.require(psl34.subset_of(sl_set), "cod(PSL(3,4)) not contained in cod(SL(3,4))");
    c.require(sl_set.values.size() > psl34.values.size(),
              "containment cod(PSL(3,4)) in cod(SL(3,4)) is not strict");
    VerificationReport r1 = verify_new_codegree(MatrixKind::SL3, 4);
    c.require(r1.outcome == Outcome::PASS, "verify_new_codegree(SL3,4): " + r1.witness + r1.reason);

    if (skip_slow) {
        c.notes.push_back("SU(3,5) part skipped by --skip-slow");
    } else {
        const CharacterTable& su = brute_table("SU(3,5)", su3_cover(5), false);
        CodegreeSet su_set = codegree_set(su, "SU(3,5)");
        c.require(su_set.contains(18000),
                  "18000 missing from cod(SU(3,5)) = " + set_str(su_set.values));
        FamilyParams p5 = FamilyParams::for_q(5);
        c.require(table1_set(FamilyTag::PSU3, &p5).subset_of(su_set),
                  "cod(PSU(3,5)) not contained in cod(SU(3,5))");
        VerificationReport r2 = verify_new_codegree(MatrixKind::SU3, 5);
        c.require(r2.outcome == Outcome::PASS,
                  "verify_new_codegree(SU3,5): " + r2.witness + r2.reason);
    }
    c.seconds = secs_since(t0);
    report(std::move(c));
}

// criterion 4: recognizer round-trip and uniqueness
static void criterion4() {
    auto t0 = Clock::now();
    Criterion c{"criterion 4: recognizer round-trip, prime powers q <= 499 (Suzuki f <= 4)"};
    size_t instances = 0;
    auto check_instance = [&](FamilyTag tag, const FamilyParams& p) {
        ++instances;
        Identification id = recognize(table1_set(tag, &p).values);
        if (id.matches.size() != 1) {
            c.fail(to_string(tag) + " q=" + p.q.get_str() + ": " +
                   std::to_string(id.matches.size()) + " matches");
            return;
        }
        if (id.matches[0].tag != tag || id.matches[0].params.q != p.q)
            c.fail(to_string(tag) + " q=" + p.q.get_str() + ": wrong identification " +
                   to_string(id.matches[0].tag) + " q=" + id.matches[0].params.q.get_str());
    };
    for (const auto& q : nt::prime_powers_in(4, 499)) {
        auto pp = nt::prime_power(q);
        if (pp->first == 2 && q >= 4) check_instance(FamilyTag::PSL2_EVEN, FamilyParams::for_q(q));
        if (pp->first != 2 && q > 5) check_instance(FamilyTag::PSL2_ODD, FamilyParams::for_q(q));
        if (q > 4) {
            check_instance(FamilyTag::PSL3, FamilyParams::for_q(q));
            check_instance(FamilyTag::PSU3, FamilyParams::for_q(q));
        }
    }
    for (unsigned f = 1; f <= 4; ++f)
        check_instance(FamilyTag::SUZUKI, FamilyParams::for_suzuki_f(f));
    for (FamilyTag tag : fixed_family_tags()) {
        ++instances;
        Identification id = recognize(table1_set(tag, nullptr).values);
        if (id.matches.size() != 1 || id.matches[0].tag != tag)
            c.fail(to_string(tag) + ": fixed set not uniquely recognized");
    }
    c.notes.push_back(std::to_string(instances) + " instances checked");
    c.seconds = secs_since(t0);
    c.require(c.seconds < 120.0, "exceeded the 2 minute budget");
    report(std::move(c));
}

// criterion 5: diophantine suite + registry completeness
static void criterion5() {
    auto t0 = Clock::now();
    Criterion c{"criterion 5: lemma equations have no solutions (q <= 10^4, k <= 10^8)"};
    for (const auto& rep : verify_diophantine(10000, 100000000))
        if (rep.outcome != Outcome::PASS) c.fail(rep.check + " :: " + rep.witness);

    // registry completeness: every eliminated family/parity case per target row
    std::set<std::tuple<std::string, std::string, std::string>> have;
    for (const auto& eq : diophantine_registry())
        have.insert({eq.target_row, eq.eliminated, eq.parity});
    const std::vector<std::pair<std::string, std::string>> common = {
        {"psl2_even", "even"}, {"psl2_even", "odd"}, {"psl2_odd", "any"},
        {"suzuki", "even"},    {"suzuki", "odd"},    {"psl3_4", "even"},
        {"psl3_4", "odd"},     {"psl3_3", "even"},   {"psl3_3", "odd"},
        {"a7", "even"},        {"a7", "odd"},        {"m11", "even"},
        {"m11", "odd"},        {"j1", "any"},        {"g2_2_prime", "even"},
        {"g2_2_prime", "odd"},
    };
    std::map<std::string, std::vector<std::string>> cross = {
        {"psl3_noncong", {"psu3_noncong"}},
        {"psl3_cong", {"psl3_noncong", "psu3_noncong", "psu3_cong"}},
        {"psu3_noncong", {"psl3_noncong"}},
        {"psu3_cong", {"psl3_noncong", "psu3_noncong", "psl3_cong"}},
    };
    for (const auto& [rowid, extra] : cross) {
        for (const auto& [fam, parity] : common)
            if (!have.count({rowid, fam, parity}))
                c.fail("registry misses " + rowid + " vs " + fam + "/" + parity);
        for (const auto& fam : extra)
            if (!have.count({rowid, fam, "any"}))
                c.fail("registry misses " + rowid + " vs " + fam);
    }
    c.notes.push_back(std::to_string(diophantine_registry().size()) + " equations scanned");
    c.seconds = secs_since(t0);
    c.require(c.seconds < 60.0, "exceeded the 1 minute budget");
    report(std::move(c));
}

// criterion 6: maximal subgroup index bounds
static void criterion6() {
    auto t0 = Clock::now();
    Criterion c{"criterion 6: maximal subgroup indices, prime powers 5 <= q <= 101"};
    VerificationReport sl3 = verify_max_indices(MatrixKind::SL3, 5, 101);
    c.require(sl3.outcome == Outcome::PASS, "SL3 sweep: " + sl3.witness);
    VerificationReport su3 = verify_max_indices(MatrixKind::SU3, 5, 101);
    c.require(su3.outcome == Outcome::PASS, "SU3 sweep: " + su3.witness);
    if (su3.outcome != Outcome::PASS)
        c.notes.push_back(
            "known arithmetic exception: the q=5 row 3.A_7 has index 50 < 125 = q^3, so the "
            "claim this criterion transcribes fails at q=5 (see the SU3 sweep over 7..101: " +
            to_string(verify_max_indices(MatrixKind::SU3, 7, 101).outcome) + ")");
    c.seconds = secs_since(t0);
    report(std::move(c));
}

// criterion 7: character-table property suite over every brute-forced group
static void criterion7() {
    auto t0 = Clock::now();
    Criterion c{"criterion 7: character-table properties for every brute-forced group"};
    for (const auto& b : g_brute) {
        const CharacterTable& t = b.table;
        const mpz_class n(static_cast<unsigned long>(t.group_order()));
        uint64_t sum = 0;
        for (const auto& r : t.rows) {
            sum += r.degree * r.degree;
            if (t.group_order() % r.degree != 0)
                c.fail(b.label + ": degree " + std::to_string(r.degree) + " does not divide |G|");
        }
        if (sum != t.group_order()) c.fail(b.label + ": sum of squared degrees != |G|");

        for (size_t i = 0; i < t.rows.size(); ++i)
            for (size_t j = i; j < t.rows.size(); ++j) {
                Cyclotomic ip = row_inner_product(t, i, j);
                bool ok = (i == j) ? (ip == n) : ip.is_zero();
                if (!ok) {
                    c.fail(b.label + ": row orthogonality fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
                    j = t.rows.size();
                    i = t.rows.size();
                }
            }
        for (uint32_t ci = 0; ci < t.num_classes() && c.pass; ++ci)
            for (uint32_t cj = ci; cj < t.num_classes(); ++cj) {
                Cyclotomic ip = column_inner_product(t, ci, cj);
                mpz_class centralizer = n / t.classes.classes[ci].size;
                bool ok = (ci == cj) ? (ip == centralizer) : ip.is_zero();
                if (!ok) {
                    c.fail(b.label + ": column orthogonality fails at (" + std::to_string(ci) +
                           "," + std::to_string(cj) + ")");
                    cj = t.num_classes();
                    ci = t.num_classes();
                }
            }
        if (b.simple) {
            for (size_t r = 1; r < t.rows.size(); ++r)
                if (t.rows[r].kernel_order != 1)
                    c.fail(b.label + ": nonprincipal character with nontrivial kernel");
        }
        // determinism: a fresh second run must reproduce the table exactly
        CharacterTable again = character_table(b.group);
        bool same = again.rows.size() == t.rows.size();
        for (size_t i = 0; same && i < t.rows.size(); ++i) {
            same = again.rows[i].degree == t.rows[i].degree &&
                   again.rows[i].kernel_order == t.rows[i].kernel_order;
            for (size_t cc = 0; same && cc < t.num_classes(); ++cc)
                same = again.rows[i].values[cc] == t.rows[i].values[cc];
        }
        if (!same) c.fail(b.label + ": second run differs");
    }
    c.notes.push_back(std::to_string(g_brute.size()) + " groups checked");
    c.seconds = secs_since(t0);
    report(std::move(c));
}

int main(int argc, char** argv) {
    bool skip_slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--skip-slow") == 0) skip_slow = true;

    criterion1();
    criterion2(skip_slow);
    criterion3(skip_slow);
    criterion4();
    criterion5();
    criterion6();
    criterion7();

    size_t failed = 0;
    for (const auto& c : g_results)
        if (!c.pass) ++failed;
    std::printf("%zu/%zu criteria passed\n", g_results.size() - failed, g_results.size());
    return failed == 0 ? 0 : 1;
}
