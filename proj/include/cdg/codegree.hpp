#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "cdg/chartab.hpp"

namespace cdg {

enum class CodegreeSource { BruteForce, Formula, UserInput };

std::string to_string(CodegreeSource s);

/// Sorted duplicate-free set of codegrees with provenance.
struct CodegreeSet {
    std::vector<mpz_class> values;  // strictly increasing, always contains 1
    CodegreeSource source = CodegreeSource::UserInput;
    std::string label;

    bool operator==(const CodegreeSet& o) const { return values == o.values; }
    bool contains(const mpz_class& v) const;
    /// subset relation on values
    bool subset_of(const CodegreeSet& o) const;
};

CodegreeSet make_user_set(std::vector<mpz_class> values, std::string label = {});

/// cod(chi) = (|G| / |ker chi|) / chi(1); both divisions are asserted exact.
mpz_class codegree_of(const CharacterTable& t, size_t row);

CodegreeSet codegree_set(const CharacterTable& t, std::string label = {});
CodegreeSet codegree_set(const FiniteGroup& g, uint64_t ceiling = kDefaultCeiling);

}  // namespace cdg
