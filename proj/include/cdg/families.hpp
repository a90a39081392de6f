#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cdg/codegree.hpp"

namespace cdg {

enum class FamilyTag {
    PSL2_EVEN,
    PSL2_ODD,
    SUZUKI,
    PSL3,
    PSU3,
    FIXED_PSL3_3,
    FIXED_PSL3_4,
    FIXED_A7,
    FIXED_J1,
    FIXED_M11,
    FIXED_G2_2_PRIME,
};

std::string to_string(FamilyTag tag);
FamilyTag family_tag_from_string(const std::string& s);
bool is_parametric(FamilyTag tag);
const std::vector<FamilyTag>& all_family_tags();
const std::vector<FamilyTag>& fixed_family_tags();

/// q is the defining prime power; for SUZUKI, q = 2^(2f+1) with auxiliary r = 2^f.
struct FamilyParams {
    mpz_class q;
    unsigned suzuki_f = 0;

    static FamilyParams for_q(mpz_class q);
    static FamilyParams for_suzuki_f(unsigned f);
};

/// Throws std::invalid_argument when params violate the family's row conditions
/// (e.g. PSL3 with q = 4 must route to FIXED_PSL3_4).
void validate_family(FamilyTag tag, const FamilyParams* params);

struct Table1Entry {
    mpz_class value;
    std::string factored;
};

/// The codegree-set entries of the matching table row, sorted ascending.
std::vector<Table1Entry> table1_entries(FamilyTag tag, const FamilyParams* params);
CodegreeSet table1_set(FamilyTag tag, const FamilyParams* params);

mpz_class expected_order(FamilyTag tag, const FamilyParams* params);
unsigned cd_count(FamilyTag tag, const FamilyParams* params);

/// Raw row evaluators (no domain validation). The *_cong variants are the rows
/// that carry the 1/3 scaling; the choice is driven by q mod 3.
std::vector<mpz_class> psl2_even_row(const mpz_class& k);
std::vector<mpz_class> psl2_odd_row(const mpz_class& k);
std::vector<mpz_class> suzuki_row(unsigned f);
std::vector<mpz_class> psl3_row(const mpz_class& q, bool cong1_mod3);
std::vector<mpz_class> psu3_row(const mpz_class& q, bool congm1_mod3);

/// Whole |SL(3,q)| / |SU(3,q)| (the covering groups, not the simple quotients).
mpz_class sl3_full_order(const mpz_class& q);
mpz_class su3_full_order(const mpz_class& q);

enum class MatrixKind { SL3, SU3 };

struct MaxSubgroupRow {
    std::string structure;   // printed structure of the maximal subgroup
    std::string conditions;  // side conditions of the table row
    bool applicable = false;
    mpz_class order;            // exact order computed from the structure
    std::string order_origin;   // derivation of the order expression
    bool order_exact = true;    // false => verifier must use order_upper for bounds
    mpz_class order_upper;      // conservative upper bound (= order when exact)
    bool parabolic = false;     // point-stabilizer row E_q^2:GL(2,q) of SL(3,q)
};

/// One entry per table row, exact orders, with side conditions evaluated at q.
std::vector<MaxSubgroupRow> maximal_subgroup_orders(MatrixKind kind, const mpz_class& q);

}  // namespace cdg
