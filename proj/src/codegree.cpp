#include "cdg/codegree.hpp"

#include <algorithm>

namespace cdg {

std::string to_string(CodegreeSource s) {
    switch (s) {
        case CodegreeSource::BruteForce: return "brute-force";
        case CodegreeSource::Formula: return "formula";
        case CodegreeSource::UserInput: return "user-input";
    }
    return "?";
}

bool CodegreeSet::contains(const mpz_class& v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

bool CodegreeSet::subset_of(const CodegreeSet& o) const {
    return std::includes(o.values.begin(), o.values.end(), values.begin(), values.end());
}

CodegreeSet make_user_set(std::vector<mpz_class> values, std::string label) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (const auto& v : values)
        if (v < 1) throw std::invalid_argument("codegree set: entries must be positive");
    return CodegreeSet{std::move(values), CodegreeSource::UserInput, std::move(label)};
}

mpz_class codegree_of(const CharacterTable& t, size_t row) {
    if (row >= t.rows.size()) throw std::invalid_argument("codegree_of: row out of range");
    mpz_class order(static_cast<unsigned long>(t.group_order()));
    mpz_class kord(static_cast<unsigned long>(t.rows[row].kernel_order));
    mpz_class deg(static_cast<unsigned long>(t.rows[row].degree));
    if (order % kord != 0)
        throw std::logic_error("codegree_of: kernel order does not divide group order");
    mpz_class index = order / kord;
    if (index % deg != 0)
        throw std::logic_error("codegree_of: degree does not divide kernel index");
    return index / deg;
}

CodegreeSet codegree_set(const CharacterTable& t, std::string label) {
    std::vector<mpz_class> vals;
    vals.reserve(t.rows.size());
    for (size_t r = 0; r < t.rows.size(); ++r) vals.push_back(codegree_of(t, r));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return CodegreeSet{std::move(vals), CodegreeSource::BruteForce, std::move(label)};
}

CodegreeSet codegree_set(const FiniteGroup& g, uint64_t ceiling) {
    return codegree_set(character_table(g, ceiling), g.name);
}

}  // namespace cdg
