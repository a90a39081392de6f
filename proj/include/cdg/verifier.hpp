#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cdg/families.hpp"

namespace cdg {

enum class Outcome { PASS, FAIL, SKIPPED };

std::string to_string(Outcome o);

struct VerificationReport {
    std::string check;
    std::string params;
    Outcome outcome = Outcome::SKIPPED;
    std::string witness;  // concrete offending values on FAIL
    std::string reason;   // why SKIPPED
    double millis = 0.0;
};

/// Brute-force codegree set of the instance's group vs the table row, exact set
/// equality. SKIPPED when the group order exceeds the ceiling.
VerificationReport verify_table1(FamilyTag tag, const FamilyParams* params,
                                 uint64_t ceiling = kDefaultCeiling);

/// The covering group SL(3,q) (q ≡ 1 mod 3) / SU(3,q) (q ≡ -1 mod 3) must contain
/// the predicted extra codegree q^3(q+1)(q-1)^2 / q^3(q+1)^2(q-1), must contain the
/// quotient's whole table row, and the predicted value must be new.
VerificationReport verify_new_codegree(MatrixKind kind, const mpz_class& q,
                                       uint64_t ceiling = kDefaultCeiling);

/// Pairwise inequality of all table-row instances over prime powers <= q_max
/// (every fixed set included).
VerificationReport verify_distinctness(uint64_t q_max);

/// One registered arithmetic claim from the quotient-identification case analyses.
struct DiophantineEquation {
    std::string id;
    std::string target_row;  // psl3_noncong | psl3_cong | psu3_noncong | psu3_cong
    std::string eliminated;  // family whose codegree set is being ruled out
    std::string parity;      // even | odd | any
    std::string statement;   // the displayed equation / system / property
    /// Returns a witness description if a solution exists within the bounds.
    std::function<std::optional<std::string>(const mpz_class& q_bound, const mpz_class& k_bound)>
        find_witness;
};

const std::vector<DiophantineEquation>& diophantine_registry();

/// Scans every registered equation; PASS means no solution in range.
std::vector<VerificationReport> verify_diophantine(const mpz_class& q_bound,
                                                   const mpz_class& k_bound);

/// SL3: every applicable non-parabolic index exceeds q^3 and the parabolic index
/// equals q^2+q+1. SU3: every applicable index exceeds q^3. Rows with derived
/// order expressions are bounded via their conservative upper bound.
VerificationReport verify_max_indices(MatrixKind kind, uint64_t q_lo, uint64_t q_hi);

struct SuiteOptions {
    uint64_t ceiling = kDefaultCeiling;
    uint64_t q_max = 13;         // table1 / new-codegree instance range
    uint64_t distinct_q_max = 50;
    uint64_t index_q_lo = 5;
    uint64_t index_q_hi = 101;
    mpz_class bound = 10000;     // diophantine q range
    mpz_class k_bound = 100000000;
    unsigned threads = 1;
};

/// suite ∈ {table1, distinctness, diophantine, indices, new-codegree, all}.
std::vector<VerificationReport> run_verify_suite(const std::string& suite,
                                                 const SuiteOptions& opts);

}  // namespace cdg
