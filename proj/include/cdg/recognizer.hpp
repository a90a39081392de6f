#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cdg/families.hpp"

namespace cdg {

struct RecognizerMatch {
    FamilyTag tag;
    FamilyParams params;  // meaningful for parametric tags only
};

/// Structure summary of the input set; never influences match membership.
struct RecognizerDiagnostics {
    size_t set_size = 0;
    std::vector<mpz_class> odd_nontrivial;  // odd entries > 1
    std::vector<mpz_class> two_parts;       // multiset of 2-parts, sorted
    /// per entry (aligned with the sorted input): number of other entries dividing it
    std::vector<unsigned> divisor_counts;
    std::string note;
};

struct Identification {
    std::vector<RecognizerMatch> matches;
    RecognizerDiagnostics diagnostics;
};

/// Identifies which table rows have exactly the given codegree set. Matching is
/// exact set equality against the row evaluated at candidate parameters; candidate
/// windows come from inverting the dominant row entry.
Identification recognize(const std::vector<mpz_class>& set_values);

enum class EliminationReason {
    CARDINALITY_MISMATCH,
    ODD_PART_MISMATCH,
    TWO_PART_MISMATCH,
    NO_PARAMETER,
    SET_MISMATCH,
};

std::string to_string(EliminationReason r);

struct EliminationReport {
    EliminationReason reason;
    std::string detail;
};

/// Why `family` cannot produce S. Checks run in the fixed order cardinality ->
/// odd part -> 2-part -> parameter search. Throws if the family does match S.
EliminationReport explain_elimination(const std::vector<mpz_class>& S, FamilyTag family);

/// Candidate parameters the recognizer would try for a parametric family on an
/// input with the given maximum (exposed for the window-soundness tests).
std::vector<mpz_class> candidate_parameters(FamilyTag tag, const mpz_class& max_entry);

}  // namespace cdg
