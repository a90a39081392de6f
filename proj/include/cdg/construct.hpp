#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cdg/group.hpp"

namespace cdg {

/// PSL(2,q) on the q+1 points of the projective line.
FiniteGroup psl2(const mpz_class& q);

/// PSL(3,q) on the q^2+q+1 points of the projective plane.
FiniteGroup psl3(const mpz_class& q);

/// PSU(3,q) on the q^3+1 isotropic points of the Hermitian form
/// x0*x2^s + x1*x1^s + x2*x0^s over GF(q^2), s the order-2 field automorphism.
/// Rejects q < 3 (PSU(3,2) is not simple).
FiniteGroup psu3(const mpz_class& q);

/// SL(3,q) acting faithfully on the q^3-1 nonzero vectors (covering group of PSL(3,q)).
FiniteGroup sl3_cover(const mpz_class& q);

/// SU(3,q) acting faithfully on the (q^3+1)(q^2-1) nonzero isotropic vectors.
FiniteGroup su3_cover(const mpz_class& q);

enum class NamedTag { A7, M11, J1, SZ8, PSL3_3, PSL3_4, G2_2_PRIME };

FiniteGroup named_group(NamedTag tag);
NamedTag named_tag_from_string(std::string_view s);  // throws on unknown tag
std::string to_string(NamedTag tag);

FiniteGroup symmetric(uint32_t n);
FiniteGroup alternating(uint32_t n);
FiniteGroup cyclic(uint32_t n);

/// Group-spec grammar: "name:<tag>", "psl:2:<q>", "psl:3:<q>", "psu:3:<q>",
/// or a path to a generators file (one permutation per line in disjoint-cycle
/// notation on 0-based points; '#' comments; an empty line terminates).
FiniteGroup parse_group_spec(const std::string& spec);

FiniteGroup load_generators_file(const std::string& path);

}  // namespace cdg
