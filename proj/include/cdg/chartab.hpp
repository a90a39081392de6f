#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cdg/cyclotomic.hpp"
#include "cdg/group.hpp"

namespace cdg {

struct CharRow {
    uint64_t degree = 0;
    std::vector<Cyclotomic> values;        // indexed by class
    std::vector<uint32_t> kernel_classes;  // classes with value == degree
    uint64_t kernel_order = 0;
};

/// Exact irreducible character table. Rows are sorted by ascending degree, ties by
/// lexicographic comparison of the value vectors in class order. All values live in
/// Z[zeta_e] with e = exponent(G).
struct CharacterTable {
    ConjugacyClassTable classes;
    uint32_t conductor = 1;
    std::vector<CharRow> rows;

    uint64_t group_order() const { return classes.group_order; }
    size_t num_classes() const { return classes.size(); }
};

/// c_{ijk}: for a fixed representative z of class k, the number of pairs
/// (x, y) in C_i x C_j with x*y = z.
uint64_t class_mult_coeff(const ConjugacyClassTable& t, uint32_t i, uint32_t j, uint32_t k);

/// Dixon's modular method: split the common eigenspaces of the class-map matrices
/// over F_l (l the smallest prime ≡ 1 mod exponent with l^2 > 4|G|), recover degrees
/// from the central-character normalization, and lift values to exact cyclotomic
/// integers through the per-class discrete Fourier inversion of the power map.
CharacterTable character_table(const ConjugacyClassTable& classes);
CharacterTable character_table(const FiniteGroup& g, uint64_t ceiling = kDefaultCeiling);

/// Classes where row value equals the degree, and the resulting kernel order.
std::pair<std::vector<uint32_t>, uint64_t> kernel_of(const CharacterTable& t, size_t row);

/// sum_c |C_c| * chi_i(c) * conj(chi_j(c)); equals |G| * delta_ij.
Cyclotomic row_inner_product(const CharacterTable& t, size_t i, size_t j);

/// sum_rows chi(c_i) * conj(chi(c_j)); equals delta_ij * |G| / |C_i|.
Cyclotomic column_inner_product(const CharacterTable& t, uint32_t ci, uint32_t cj);

}  // namespace cdg
