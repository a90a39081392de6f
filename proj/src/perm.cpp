#include "cdg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cdg/numtheory.hpp"

namespace cdg {

Perm::Perm(uint32_t degree) {
    if (degree > 65535) throw std::invalid_argument("Perm: degree exceeds 65535");
    img_.resize(degree);
    std::iota(img_.begin(), img_.end(), uint16_t{0});
}

Perm Perm::from_images(std::vector<uint16_t> images) {
    if (images.size() > 65535) throw std::invalid_argument("Perm: degree exceeds 65535");
    std::vector<bool> seen(images.size(), false);
    for (uint16_t v : images) {
        if (v >= images.size() || seen[v]) throw std::invalid_argument("Perm: images not a bijection");
        seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::from_images_unchecked(std::vector<uint16_t> images) {
    Perm p;
    p.img_ = std::move(images);
    return p;
}

bool Perm::is_identity() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.img_.resize(a.img_.size());
    const uint16_t* ai = a.img_.data();
    const uint16_t* bi = b.img_.data();
    uint16_t* ri = r.img_.data();
    for (size_t i = 0, n = a.img_.size(); i < n; ++i) ri[i] = ai[bi[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (uint32_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<uint16_t>(i);
    return r;
}

std::vector<std::vector<uint16_t>> Perm::cycles() const {
    std::vector<std::vector<uint16_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (uint32_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<uint16_t> cyc;
        uint16_t x = static_cast<uint16_t>(i);
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(x);
            x = img_[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

uint64_t Perm::order() const {
    uint64_t ord = 1;
    for (const auto& c : cycles()) ord = nt::lcm_u64_checked(ord, c.size());
    return ord;
}

std::string Perm::cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Perm Perm::parse_cycles(std::string_view text, uint32_t min_degree) {
    std::vector<std::vector<uint32_t>> cycles;
    uint32_t max_pt = 0;
    bool any = false;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("Perm: expected '(' in cycle notation");
        ++i;
        std::vector<uint32_t> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("Perm: expected point number");
            uint32_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<uint32_t>(text[i] - '0');
                if (v > 65535) throw std::invalid_argument("Perm: point exceeds 65535");
                ++i;
            }
            cyc.push_back(v);
            max_pt = std::max(max_pt, v);
            any = true;
            skip_ws();
        }
        if (i >= text.size()) throw std::invalid_argument("Perm: unterminated cycle");
        ++i;  // ')'
        if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    uint32_t degree = std::max(min_degree, any ? max_pt + 1 : 0u);
    Perm p(degree);
    for (const auto& cyc : cycles) {
        for (size_t j = 0; j < cyc.size(); ++j) {
            uint32_t from = cyc[j];
            uint32_t to = cyc[(j + 1) % cyc.size()];
            if (p.img_[from] != from) throw std::invalid_argument("Perm: point repeated across cycles");
            p.img_[from] = static_cast<uint16_t>(to);
        }
    }
    // from_images-level validation: repeated targets across cycles.
    return Perm::from_images(std::move(p.img_));
}

Perm Perm::extended_to(uint32_t degree) const {
    if (degree < img_.size()) throw std::invalid_argument("Perm: cannot shrink degree");
    Perm r(degree);
    std::copy(img_.begin(), img_.end(), r.img_.begin());
    return r;
}

Perm conjugate(const Perm& g, const Perm& s) {
    // (s^{-1} g s)(x) = s^{-1}(g(s(x)))
    Perm r;
    std::vector<uint16_t> imgs(g.degree());
    Perm sinv = s.inverse();
    for (uint32_t x = 0; x < g.degree(); ++x)
        imgs[x] = sinv[g[s[static_cast<uint16_t>(x)]]];
    return Perm::from_images(std::move(imgs));
}

}  // namespace cdg
