#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cdg {

/// Permutation of {0, ..., degree-1}; img_[x] is the image of x.
/// Degree is capped at 65535 so images pack into uint16.
class Perm {
public:
    Perm() = default;
    explicit Perm(uint32_t degree);  // identity
    static Perm from_images(std::vector<uint16_t> images);
    /// No bijection check; caller guarantees validity (hot paths only).
    static Perm from_images_unchecked(std::vector<uint16_t> images);

    uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
    uint16_t operator[](uint16_t x) const { return img_[x]; }
    const std::vector<uint16_t>& images() const { return img_; }

    bool is_identity() const;

    /// (a * b)(x) = a(b(x)) — b acts first.
    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;

    /// lcm of cycle lengths.
    uint64_t order() const;
    std::vector<std::vector<uint16_t>> cycles() const;  // nontrivial cycles, least point first

    /// Disjoint-cycle text on 0-based points, e.g. "(0 1 2)(3 4)"; identity prints "()".
    std::string cycle_string() const;

    /// Parses cycle notation; points separated by whitespace or commas; fixed points
    /// may be omitted. Degree is max(min_degree, 1 + largest point mentioned).
    static Perm parse_cycles(std::string_view text, uint32_t min_degree = 0);

    /// Re-embeds into a larger degree (new points fixed).
    Perm extended_to(uint32_t degree) const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<uint16_t> img_;
};

/// s^{-1} * g * s.
Perm conjugate(const Perm& g, const Perm& s);

}  // namespace cdg
