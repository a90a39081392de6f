#include "cdg/group.hpp"

#include <algorithm>
#include <random>

#include "cdg/numtheory.hpp"

namespace cdg {

FiniteGroup make_group(std::vector<Perm> gens, std::string name) {
    if (gens.empty()) throw std::invalid_argument("group: at least one generator required");
    uint32_t deg = gens[0].degree();
    for (const auto& g : gens)
        if (g.degree() != deg) throw std::invalid_argument("group: generator degree mismatch");
    return FiniteGroup{deg, std::move(gens), std::move(name)};
}

mpz_class group_order(const FiniteGroup& g) { return Bsgs::build(g).order(); }

uint64_t element_order(const Perm& g) { return g.order(); }

// ---------------------------------------------------------------------------
// Bsgs

void Bsgs::extend_orbit(size_t li) {
    Level& lv = levels_[li];
    if (lv.orbit.empty()) {
        lv.orbit_pos.assign(degree_, -1);
        lv.orbit.push_back(lv.base);
        lv.orbit_pos[lv.base] = 0;
        lv.transversal.push_back(Perm(degree_));
        lv.transversal_inv.push_back(Perm(degree_));
    }
    // BFS continuation over all strong generators acting at this level; new
    // generators can grow the orbit from every known point.
    for (size_t i = 0; i < lv.orbit.size(); ++i) {
        uint16_t pt = lv.orbit[i];
        for (const auto& [s, tag] : sgens_) {
            if (tag < li) continue;
            uint16_t img = s[pt];
            if (lv.orbit_pos[img] < 0) {
                lv.orbit_pos[img] = static_cast<int32_t>(lv.orbit.size());
                lv.orbit.push_back(img);
                Perm u = s * lv.transversal[static_cast<size_t>(lv.orbit_pos[pt])];
                lv.transversal_inv.push_back(u.inverse());
                lv.transversal.push_back(std::move(u));
            }
        }
    }
}

Perm Bsgs::strip(Perm g, size_t from, size_t* stop_level) const {
    for (size_t i = from; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        uint16_t img = g[lv.base];
        int32_t pos = lv.orbit_pos[img];
        if (pos < 0) {
            if (stop_level) *stop_level = i;
            return g;
        }
        g = lv.transversal_inv[static_cast<size_t>(pos)] * g;
    }
    if (stop_level) *stop_level = levels_.size();
    return g;
}

void Bsgs::add_generator(const Perm& g, size_t level) {
    if (level == levels_.size()) {
        Level lv;
        // Base point: smallest point moved by g.
        for (uint32_t x = 0; x < degree_; ++x)
            if (g[static_cast<uint16_t>(x)] != x) {
                lv.base = static_cast<uint16_t>(x);
                break;
            }
        levels_.push_back(std::move(lv));
    }
    sgens_.emplace_back(g, level);
    // A tag-`level` generator stabilizes bases 0..level-1, so it can extend every
    // orbit up to and including its own level.
    for (size_t i = 0; i <= level; ++i) extend_orbit(i);
}

Bsgs Bsgs::build(const FiniteGroup& grp) {
    Bsgs b;
    b.degree_ = grp.degree;

    auto sift_in = [&](const Perm& g) {
        Perm h = g;
        while (true) {
            size_t stop = 0;
            h = b.strip(std::move(h), 0, &stop);
            if (h.is_identity()) return;
            b.add_generator(h, stop);
            // Re-strip the same element: after adding, it sifts further (often to identity).
        }
    };

    for (const Perm& g : grp.generators)
        if (!g.is_identity()) sift_in(g);

    if (b.levels_.empty()) {  // trivial group
        b.finish();
        return b;
    }

    // Randomized closure: sift pseudo-random words until a run of quiet sifts,
    // then verify all Schreier generators deterministically; repeat on failure.
    std::mt19937_64 rng(0x5eed0133u);
    std::vector<Perm> pool = grp.generators;
    Perm acc(b.degree_);
    int quiet = 0;
    auto random_elt = [&]() {
        for (int i = 0; i < 8; ++i) {
            size_t j = rng() % pool.size();
            size_t k = rng() % pool.size();
            pool[j] = pool[j] * pool[k];
            acc = acc * pool[j];
        }
        return acc;
    };
    while (quiet < 24) {
        Perm r = random_elt();
        size_t stop = 0;
        Perm res = b.strip(r, 0, &stop);
        if (res.is_identity()) {
            ++quiet;
        } else {
            quiet = 0;
            sift_in(res);
        }
    }

    // Deterministic verification: every Schreier generator at every level must sift
    // to identity through the deeper chain. Restart after each repair.
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (size_t li = b.levels_.size(); li-- > 0 && !dirty;) {
            Level& lv = b.levels_[li];
            for (size_t oi = 0; oi < lv.orbit.size() && !dirty; ++oi) {
                for (const auto& [s, tag] : b.sgens_) {
                    if (tag < li) continue;
                    const Perm& u = lv.transversal[oi];
                    uint16_t img = s[lv.orbit[oi]];
                    const Perm& w_inv = lv.transversal_inv[static_cast<size_t>(lv.orbit_pos[img])];
                    Perm schreier = w_inv * (s * u);
                    if (schreier.is_identity()) continue;
                    size_t stop = 0;
                    Perm res = b.strip(schreier, li + 1, &stop);
                    if (!res.is_identity()) {
                        b.add_generator(res, stop);
                        dirty = true;
                        break;
                    }
                }
            }
        }
    }

    b.finish();
    return b;
}

void Bsgs::finish() {
    order_ = 1;
    for (size_t i = levels_.size(); i-- > 0;) {
        order_ *= static_cast<unsigned long>(levels_[i].orbit.size());
    }
    uint64_t stride = 1;
    order_fits_u64_ = mpz_sizeinbase(order_.get_mpz_t(), 2) <= 63;
    if (order_fits_u64_) {
        for (size_t i = levels_.size(); i-- > 0;) {
            levels_[i].stride = stride;
            stride *= levels_[i].orbit.size();
        }
    }
}

uint64_t Bsgs::order_u64() const {
    if (!order_fits_u64_) throw std::overflow_error("group order exceeds 64 bits");
    return mpz_get_ui(order_.get_mpz_t());  // unsigned long is 64-bit here
}

bool Bsgs::contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    size_t stop = 0;
    return strip(g, 0, &stop).is_identity();
}

uint64_t Bsgs::element_index(const uint16_t* g) const {
    // Evaluate successive sifted images of the base points without materializing
    // the sifted elements: apply the chosen inverse transversals pointwise.
    uint64_t idx = 0;
    const uint16_t* applied[64];
    size_t napplied = 0;
    for (size_t i = 0; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        uint16_t y = g[lv.base];
        for (size_t j = 0; j < napplied; ++j) y = applied[j][y];
        int32_t pos = lv.orbit_pos[y];
        if (pos < 0) throw std::logic_error("element_index: not a group element");
        idx += static_cast<uint64_t>(pos) * lv.stride;
        if (napplied == 64) throw std::logic_error("element_index: base too long");
        applied[napplied++] = lv.transversal_inv[static_cast<size_t>(pos)].images().data();
    }
    return idx;
}

Perm Bsgs::element_at(uint64_t index) const {
    Perm g(degree_);
    bool first = true;
    for (size_t i = 0; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        uint64_t pos = index / lv.stride;
        index %= lv.stride;
        const Perm& u = lv.transversal[static_cast<size_t>(pos)];
        g = first ? u : g * u;
        first = false;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Conjugacy classes

int32_t ConjugacyClassTable::class_of(const Perm& g) const {
    return class_of_index[bsgs->element_index(g)];
}

ConjugacyClassTable conjugacy_classes(const FiniteGroup& grp, uint64_t ceiling) {
    auto bsgs = std::make_shared<Bsgs>(Bsgs::build(grp));
    if (bsgs->order() > ceiling)
        throw CeilingExceeded("group order " + bsgs->order().get_str() + " exceeds ceiling " +
                              std::to_string(ceiling));
    const uint64_t n = bsgs->order_u64();

    std::vector<Perm> gens;
    std::vector<Perm> gens_inv;
    for (const Perm& s : grp.generators) {
        if (s.is_identity()) continue;
        gens.push_back(s);
        gens_inv.push_back(s.inverse());
    }

    std::vector<int32_t> class_of(n, -1);
    std::vector<std::vector<uint32_t>> members;
    std::vector<uint32_t> queue;
    const uint32_t deg = grp.degree;

    std::vector<uint16_t> buf(deg);
    for (uint64_t seed = 0; seed < n; ++seed) {
        if (class_of[seed] >= 0) continue;
        int32_t cid = static_cast<int32_t>(members.size());
        members.emplace_back();
        queue.clear();
        queue.push_back(static_cast<uint32_t>(seed));
        class_of[seed] = cid;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            uint32_t idx = queue[qi];
            members[static_cast<size_t>(cid)].push_back(idx);
            Perm g = bsgs->element_at(idx);
            for (size_t si = 0; si < gens.size(); ++si) {
                // h = s^{-1} g s, composed pointwise: h(x) = sinv(g(s(x)))
                const uint16_t* s = gens[si].images().data();
                const uint16_t* sv = gens_inv[si].images().data();
                const uint16_t* gi = g.images().data();
                for (uint32_t x = 0; x < deg; ++x) buf[x] = sv[gi[s[x]]];
                uint64_t hidx = bsgs->element_index(buf.data());
                if (class_of[hidx] < 0) {
                    class_of[hidx] = cid;
                    queue.push_back(static_cast<uint32_t>(hidx));
                }
            }
        }
    }

    // Assemble classes, then apply the ordering contract.
    struct Raw {
        Perm rep;
        uint64_t size;
        uint64_t ord;
        int32_t old_id;
    };
    std::vector<Raw> raw;
    raw.reserve(members.size());
    for (size_t c = 0; c < members.size(); ++c) {
        uint32_t min_idx = *std::min_element(members[c].begin(), members[c].end());
        Perm rep = bsgs->element_at(min_idx);
        raw.push_back(Raw{rep, members[c].size(), rep.order(), static_cast<int32_t>(c)});
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (a.ord != b.ord) return a.ord < b.ord;
        if (a.size != b.size) return a.size < b.size;
        return a.rep < b.rep;
    });

    ConjugacyClassTable t;
    t.bsgs = bsgs;
    t.group_order = n;
    t.class_of_index.assign(n, -1);
    std::vector<int32_t> remap(raw.size());
    uint64_t total = 0;
    uint64_t expnt = 1;
    for (size_t c = 0; c < raw.size(); ++c) {
        remap[static_cast<size_t>(raw[c].old_id)] = static_cast<int32_t>(c);
        t.classes.push_back(ConjClass{raw[c].rep, raw[c].size, raw[c].ord});
        t.class_elements.push_back(std::move(members[static_cast<size_t>(raw[c].old_id)]));
        total += raw[c].size;
        expnt = nt::lcm_u64_checked(expnt, raw[c].ord);
        if (n % raw[c].size != 0)
            throw std::logic_error("conjugacy: class size does not divide group order");
    }
    for (uint64_t i = 0; i < n; ++i) t.class_of_index[i] = remap[static_cast<size_t>(class_of[i])];
    if (total != n) throw std::logic_error("conjugacy: classes do not partition the group");
    if (!t.classes.empty() && !(t.classes[0].size == 1 && t.classes[0].element_order == 1))
        throw std::logic_error("conjugacy: identity class misplaced");
    t.exponent = expnt;
    return t;
}

}  // namespace cdg
