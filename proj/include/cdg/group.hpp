#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cdg/perm.hpp"

namespace cdg {

inline constexpr uint64_t kDefaultCeiling = 500000;

struct CeilingExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite group given by permutation generators on {0, ..., degree-1}.
struct FiniteGroup {
    uint32_t degree = 0;
    std::vector<Perm> generators;
    std::string name;
};

FiniteGroup make_group(std::vector<Perm> gens, std::string name = {});

/// Base and strong generating set. Every group element factors uniquely as
/// u_1 u_2 ... u_b over the level transversals, which yields a bijection between
/// the group and [0, |G|) in mixed radix over the orbit positions; element_index /
/// element_at realize the two directions.
class Bsgs {
public:
    /// Deterministic construction: fixed-seed randomized bootstrap followed by a full
    /// Schreier-generator verification pass.
    static Bsgs build(const FiniteGroup& g);

    const mpz_class& order() const { return order_; }
    bool order_fits_u64() const { return order_fits_u64_; }
    uint64_t order_u64() const;  // throws if order exceeds 64 bits

    uint32_t degree() const { return degree_; }
    size_t base_length() const { return levels_.size(); }
    uint16_t base_point(size_t i) const { return levels_[i].base; }

    bool contains(const Perm& g) const;

    /// Index of g under the transversal factorization; g must be a member.
    uint64_t element_index(const Perm& g) const { return element_index(g.images().data()); }
    uint64_t element_index(const uint16_t* images) const;
    Perm element_at(uint64_t index) const;

private:
    struct Level {
        uint16_t base = 0;
        std::vector<uint16_t> orbit;        // orbit[0] == base
        std::vector<int32_t> orbit_pos;     // point -> position in orbit, -1 outside
        std::vector<Perm> transversal;      // transversal[i] maps base -> orbit[i]
        std::vector<Perm> transversal_inv;
        uint64_t stride = 1;                // product of later orbit sizes
    };

    uint32_t degree_ = 0;
    std::vector<Level> levels_;
    /// Strong generators with their level tag: a tag-j generator fixes bases 0..j-1,
    /// so it acts at every level i <= j.
    std::vector<std::pair<Perm, size_t>> sgens_;
    mpz_class order_ = 1;
    bool order_fits_u64_ = true;

    void extend_orbit(size_t level);
    void add_generator(const Perm& g, size_t level);
    /// Returns residue of g after stripping through levels [from, end); identity if member.
    Perm strip(Perm g, size_t from, size_t* stop_level) const;
    void finish();
};

struct ConjClass {
    Perm representative;    // least element of the class in Bsgs index order
    uint64_t size = 0;
    uint64_t element_order = 0;
};

/// Complete conjugacy class data for a group whose order is at or below the ceiling.
/// Class ordering: identity first, then ascending element order, ties by ascending
/// class size, remaining ties by lexicographic comparison of representatives.
class ConjugacyClassTable {
public:
    std::vector<ConjClass> classes;
    uint64_t group_order = 0;
    uint64_t exponent = 0;

    std::shared_ptr<const Bsgs> bsgs;
    std::vector<int32_t> class_of_index;             // |G| entries
    std::vector<std::vector<uint32_t>> class_elements;  // element indices per class

    size_t size() const { return classes.size(); }
    int32_t class_of(const Perm& g) const;
};

ConjugacyClassTable conjugacy_classes(const FiniteGroup& g, uint64_t ceiling = kDefaultCeiling);

/// Exact group order via BSGS.
mpz_class group_order(const FiniteGroup& g);

uint64_t element_order(const Perm& g);

}  // namespace cdg
