#include "cdg/construct.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cdg/gf.hpp"
#include "cdg/numtheory.hpp"

namespace cdg {

namespace {

struct PrimePower {
    uint32_t p;
    uint32_t e;
    uint32_t q;
};

PrimePower decompose_q(const mpz_class& q, const char* who) {
    auto pp = nt::prime_power(q);
    if (!pp) throw std::invalid_argument(std::string(who) + ": q must be a prime power");
    if (q > 65535) throw std::invalid_argument(std::string(who) + ": q too large");
    return PrimePower{static_cast<uint32_t>(pp->first.get_ui()), pp->second,
                      static_cast<uint32_t>(q.get_ui())};
}

// Small dense matrices over a Gf, row-major n x n.
struct Mat {
    uint32_t n;
    std::vector<uint32_t> a;
    Mat(uint32_t n_) : n(n_), a(n_ * n_, 0) {}
    uint32_t& at(uint32_t i, uint32_t j) { return a[i * n + j]; }
    uint32_t at(uint32_t i, uint32_t j) const { return a[i * n + j]; }
};

Mat mat_identity(const Gf&, uint32_t n) {
    Mat m(n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<uint32_t> mat_apply(const Gf& F, const Mat& m, const std::vector<uint32_t>& v) {
    std::vector<uint32_t> w(m.n, 0);
    for (uint32_t i = 0; i < m.n; ++i) {
        uint32_t s = 0;
        for (uint32_t j = 0; j < m.n; ++j) s = F.add(s, F.mul(m.at(i, j), v[j]));
        w[i] = s;
    }
    return w;
}

uint32_t det3(const Gf& F, const Mat& m) {
    auto mul3 = [&](uint32_t a, uint32_t b, uint32_t c) { return F.mul(F.mul(a, b), c); };
    uint32_t pos = F.add(F.add(mul3(m.at(0, 0), m.at(1, 1), m.at(2, 2)),
                               mul3(m.at(0, 1), m.at(1, 2), m.at(2, 0))),
                         mul3(m.at(0, 2), m.at(1, 0), m.at(2, 1)));
    uint32_t neg = F.add(F.add(mul3(m.at(0, 2), m.at(1, 1), m.at(2, 0)),
                               mul3(m.at(0, 0), m.at(1, 2), m.at(2, 1))),
                         mul3(m.at(0, 1), m.at(1, 0), m.at(2, 2)));
    return F.sub(pos, neg);
}

// Point lists are vectors of coordinate tuples; lookup maps packed code -> index.
struct PointSet {
    uint32_t q;  // field size (coordinates in [0,q))
    uint32_t dim;
    std::vector<std::vector<uint32_t>> pts;
    std::vector<int32_t> lookup;  // size q^dim

    uint32_t code(const std::vector<uint32_t>& v) const {
        uint32_t c = 0;
        for (uint32_t i = 0; i < dim; ++i) c = c * q + v[i];
        return c;
    }
    void build_lookup() {
        uint64_t total = 1;
        for (uint32_t i = 0; i < dim; ++i) total *= q;
        lookup.assign(total, -1);
        for (size_t i = 0; i < pts.size(); ++i) lookup[code(pts[i])] = static_cast<int32_t>(i);
    }
    int32_t index_of(const std::vector<uint32_t>& v) const {
        int32_t i = lookup[code(v)];
        if (i < 0) throw std::logic_error("point set not closed under action");
        return i;
    }
};

std::vector<uint32_t> normalize_projective(const Gf& F, std::vector<uint32_t> v) {
    for (uint32_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            uint32_t f = F.inv(v[i]);
            for (auto& c : v) c = F.mul(c, f);
            return v;
        }
    }
    throw std::logic_error("zero vector has no projective normalization");
}

Perm action_perm(const Gf& F, const PointSet& ps, const Mat& m, bool projective) {
    std::vector<uint16_t> img(ps.pts.size());
    for (size_t i = 0; i < ps.pts.size(); ++i) {
        auto w = mat_apply(F, m, ps.pts[i]);
        if (projective) w = normalize_projective(F, w);
        img[i] = static_cast<uint16_t>(ps.index_of(w));
    }
    return Perm::from_images(std::move(img));
}

PointSet projective_plane(const Gf& F) {
    PointSet ps;
    ps.q = F.q();
    ps.dim = 3;
    for (uint32_t x = 0; x < F.q(); ++x)
        for (uint32_t y = 0; y < F.q(); ++y) ps.pts.push_back({1, x, y});
    for (uint32_t y = 0; y < F.q(); ++y) ps.pts.push_back({0, 1, y});
    ps.pts.push_back({0, 0, 1});
    ps.build_lookup();
    return ps;
}

PointSet projective_line(const Gf& F) {
    PointSet ps;
    ps.q = F.q();
    ps.dim = 2;
    for (uint32_t x = 0; x < F.q(); ++x) ps.pts.push_back({1, x});
    ps.pts.push_back({0, 1});
    ps.build_lookup();
    return ps;
}

// sigma = x -> x^q on GF(q^2), i.e. e applications of Frobenius for q = p^e.
uint32_t sigma(const Gf& F2, uint32_t e, uint32_t x) {
    for (uint32_t i = 0; i < e; ++i) x = F2.frobenius(x);
    return x;
}

uint32_t hermitian_norm(const Gf& F2, uint32_t e, const std::vector<uint32_t>& v) {
    // F(v,v) = v0*s(v2) + v1*s(v1) + v2*s(v0)
    uint32_t t = F2.mul(v[0], sigma(F2, e, v[2]));
    t = F2.add(t, F2.mul(v[1], sigma(F2, e, v[1])));
    t = F2.add(t, F2.mul(v[2], sigma(F2, e, v[0])));
    return t;
}

uint32_t hermitian_form(const Gf& F2, uint32_t e, const std::vector<uint32_t>& u,
                        const std::vector<uint32_t>& v) {
    uint32_t t = F2.mul(u[0], sigma(F2, e, v[2]));
    t = F2.add(t, F2.mul(u[1], sigma(F2, e, v[1])));
    t = F2.add(t, F2.mul(u[2], sigma(F2, e, v[0])));
    return t;
}

void check_unitary_det1(const Gf& F2, uint32_t e, const Mat& m, const char* label) {
    if (det3(F2, m) != 1) throw std::logic_error(std::string(label) + ": determinant is not 1");
    std::vector<std::vector<uint32_t>> basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = 0; j < 3; ++j) {
            auto mi = mat_apply(F2, m, basis[i]);
            auto mj = mat_apply(F2, m, basis[j]);
            if (hermitian_form(F2, e, mi, mj) != hermitian_form(F2, e, basis[i], basis[j]))
                throw std::logic_error(std::string(label) + ": does not preserve the form");
        }
}

// Generators of SL(3,q): a transvection, the coordinate 3-cycle, and a torus element.
std::vector<Mat> sl3_generators(const Gf& F) {
    std::vector<Mat> gens;
    Mat a = mat_identity(F, 3);
    a.at(0, 1) = 1;
    gens.push_back(a);
    if (F.q() > 2) {
        Mat a2 = mat_identity(F, 3);
        a2.at(0, 1) = F.generator();
        gens.push_back(a2);
        Mat d(3);
        d.at(0, 0) = F.generator();
        d.at(1, 1) = F.inv(F.generator());
        d.at(2, 2) = 1;
        gens.push_back(d);
    }
    Mat b(3);
    b.at(0, 2) = 1;
    b.at(1, 0) = 1;
    b.at(2, 1) = 1;
    gens.push_back(b);
    for (const auto& m : gens)
        if (det3(F, m) != 1) throw std::logic_error("sl3: generator determinant is not 1");
    return gens;
}

// Generators of SU(3,q) w.r.t. the antidiagonal Hermitian form:
//   u(a,b) = [[1,a,b],[0,1,-s(a)],[0,0,1]] with b + s(b) + a*s(a) = 0,
//   h(l)   = diag(l, l^(q-1), l^(-q)),
//   w      = [[0,0,1],[0,-1,0],[1,0,0]].
std::vector<Mat> su3_generators(const Gf& F2, uint32_t q, uint32_t e) {
    auto trace_to_fq = [&](uint32_t x) { return F2.add(x, sigma(F2, e, x)); };
    // b0 with Tr(b0) = -1; b2 nonzero with Tr(b2) = 0 (both exist: trace is onto F_q).
    uint32_t b0 = UINT32_MAX, b2 = UINT32_MAX;
    uint32_t minus1 = F2.neg(1);
    for (uint32_t x = 0; x < F2.q(); ++x) {
        uint32_t t = trace_to_fq(x);
        if (b0 == UINT32_MAX && t == minus1) b0 = x;
        if (b2 == UINT32_MAX && x != 0 && t == 0) b2 = x;
    }
    if (b0 == UINT32_MAX || b2 == UINT32_MAX) throw std::logic_error("su3: trace equation unsolvable");

    auto unipotent = [&](uint32_t a, uint32_t b) {
        Mat m = mat_identity(F2, 3);
        m.at(0, 1) = a;
        m.at(0, 2) = b;
        m.at(1, 2) = F2.neg(sigma(F2, e, a));
        return m;
    };
    std::vector<Mat> gens;
    gens.push_back(unipotent(1, b0));
    gens.push_back(unipotent(0, b2));
    uint32_t l = F2.generator();
    Mat h(3);
    h.at(0, 0) = l;
    h.at(1, 1) = F2.pow(l, q - 1);
    h.at(2, 2) = F2.inv(F2.pow(l, q));
    gens.push_back(h);
    Mat w(3);
    w.at(0, 2) = 1;
    w.at(1, 1) = F2.neg(1);
    w.at(2, 0) = 1;
    gens.push_back(w);
    for (const auto& m : gens) check_unitary_det1(F2, e, m, "su3 generator");
    return gens;
}

}  // namespace

FiniteGroup psl2(const mpz_class& q) {
    auto [p, e, qi] = decompose_q(q, "psl2");
    if (qi < 4) throw std::invalid_argument("psl2: requires q >= 4");
    Gf F(p, e);
    PointSet line = projective_line(F);
    std::vector<Mat> mats;
    Mat t = mat_identity(F, 2);
    t.at(0, 1) = 1;
    mats.push_back(t);
    if (qi > 2) {
        Mat t2 = mat_identity(F, 2);
        t2.at(0, 1) = F.generator();
        mats.push_back(t2);
        Mat d(2);
        d.at(0, 0) = F.generator();
        d.at(1, 1) = F.inv(F.generator());
        mats.push_back(d);
    }
    Mat s(2);
    s.at(0, 1) = 1;
    s.at(1, 0) = F.neg(1);
    mats.push_back(s);
    std::vector<Perm> gens;
    for (const auto& m : mats) gens.push_back(action_perm(F, line, m, true));
    return make_group(std::move(gens), "PSL(2," + std::to_string(qi) + ")");
}

FiniteGroup psl3(const mpz_class& q) {
    auto [p, e, qi] = decompose_q(q, "psl3");
    if (static_cast<uint64_t>(qi) * qi + qi + 1 > 65535)
        throw std::invalid_argument("psl3: degree exceeds permutation limit");
    Gf F(p, e);
    PointSet plane = projective_plane(F);
    std::vector<Perm> gens;
    for (const auto& m : sl3_generators(F)) gens.push_back(action_perm(F, plane, m, true));
    return make_group(std::move(gens), "PSL(3," + std::to_string(qi) + ")");
}

FiniteGroup sl3_cover(const mpz_class& q) {
    auto [p, e, qi] = decompose_q(q, "sl3");
    uint64_t deg = static_cast<uint64_t>(qi) * qi * qi - 1;
    if (deg > 65535) throw std::invalid_argument("sl3: degree exceeds permutation limit");
    Gf F(p, e);
    PointSet vecs;
    vecs.q = qi;
    vecs.dim = 3;
    for (uint32_t x = 0; x < qi; ++x)
        for (uint32_t y = 0; y < qi; ++y)
            for (uint32_t z = 0; z < qi; ++z)
                if (x || y || z) vecs.pts.push_back({x, y, z});
    vecs.build_lookup();
    std::vector<Perm> gens;
    for (const auto& m : sl3_generators(F)) gens.push_back(action_perm(F, vecs, m, false));
    return make_group(std::move(gens), "SL(3," + std::to_string(qi) + ")");
}

namespace {

PointSet isotropic_points(const Gf& F2, uint32_t e, bool projective) {
    PointSet ps;
    ps.q = F2.q();
    ps.dim = 3;
    uint32_t Q = F2.q();
    for (uint32_t x = 0; x < Q; ++x)
        for (uint32_t y = 0; y < Q; ++y)
            for (uint32_t z = 0; z < Q; ++z) {
                if (!(x || y || z)) continue;
                std::vector<uint32_t> v{x, y, z};
                if (hermitian_norm(F2, e, v) != 0) continue;
                if (projective) {
                    auto n = normalize_projective(F2, v);
                    if (n != v) continue;  // keep normalized representatives only
                }
                ps.pts.push_back(v);
            }
    ps.build_lookup();
    return ps;
}

}  // namespace

FiniteGroup psu3(const mpz_class& q) {
    auto [p, e, qi] = decompose_q(q, "psu3");
    if (qi < 3) throw std::invalid_argument("psu3: requires q >= 3 (PSU(3,2) is not simple)");
    uint64_t deg = static_cast<uint64_t>(qi) * qi * qi + 1;
    if (deg > 65535) throw std::invalid_argument("psu3: degree exceeds permutation limit");
    Gf F2(p, 2 * e);
    PointSet iso = isotropic_points(F2, e, true);
    if (iso.pts.size() != deg) throw std::logic_error("psu3: isotropic point count mismatch");
    std::vector<Perm> gens;
    for (const auto& m : su3_generators(F2, qi, e)) gens.push_back(action_perm(F2, iso, m, true));
    return make_group(std::move(gens), "PSU(3," + std::to_string(qi) + ")");
}

FiniteGroup su3_cover(const mpz_class& q) {
    auto [p, e, qi] = decompose_q(q, "su3");
    uint64_t deg = (static_cast<uint64_t>(qi) * qi * qi + 1) * (static_cast<uint64_t>(qi) * qi - 1);
    if (deg > 65535) throw std::invalid_argument("su3: degree exceeds permutation limit");
    Gf F2(p, 2 * e);
    PointSet iso = isotropic_points(F2, e, false);
    if (iso.pts.size() != deg) throw std::logic_error("su3: isotropic vector count mismatch");
    std::vector<Perm> gens;
    for (const auto& m : su3_generators(F2, qi, e)) gens.push_back(action_perm(F2, iso, m, false));
    return make_group(std::move(gens), "SU(3," + std::to_string(qi) + ")");
}

FiniteGroup symmetric(uint32_t n) {
    if (n < 1) throw std::invalid_argument("symmetric: n >= 1 required");
    if (n == 1) return make_group({Perm(1)}, "S1");
    std::vector<uint16_t> cyc(n);
    for (uint32_t i = 0; i < n; ++i) cyc[i] = static_cast<uint16_t>((i + 1) % n);
    std::vector<uint16_t> tr(n);
    for (uint32_t i = 0; i < n; ++i) tr[i] = static_cast<uint16_t>(i);
    std::swap(tr[0], tr[1]);
    return make_group({Perm::from_images(tr), Perm::from_images(cyc)}, "S" + std::to_string(n));
}

FiniteGroup alternating(uint32_t n) {
    if (n < 3) throw std::invalid_argument("alternating: n >= 3 required");
    Perm three = Perm::parse_cycles("(0 1 2)", n);
    Perm big;
    if (n % 2 == 1) {
        std::vector<uint16_t> cyc(n);
        for (uint32_t i = 0; i < n; ++i) cyc[i] = static_cast<uint16_t>((i + 1) % n);
        big = Perm::from_images(cyc);
    } else {
        std::vector<uint16_t> cyc(n);
        cyc[0] = 0;
        for (uint32_t i = 1; i < n; ++i) cyc[i] = static_cast<uint16_t>(i % (n - 1) + 1);
        big = Perm::from_images(cyc);
    }
    return make_group({three, big}, "A" + std::to_string(n));
}

FiniteGroup cyclic(uint32_t n) {
    if (n < 1) throw std::invalid_argument("cyclic: n >= 1 required");
    if (n == 1) return make_group({Perm(1)}, "C1");
    std::vector<uint16_t> cyc(n);
    for (uint32_t i = 0; i < n; ++i) cyc[i] = static_cast<uint16_t>((i + 1) % n);
    return make_group({Perm::from_images(cyc)}, "C" + std::to_string(n));
}

namespace {

// Suzuki group Sz(q), q = 2^(2f+1), acting on the q^2+1 points of the Suzuki ovoid
//   { (1 : a : b : ab + a^(t+2) + b^t) } u { (0:0:0:1) },  t = 2^(f+1).
// Generators: the two unipotent maps S(1,0), S(0,1), the torus diag(1, l, l^(t+1), l^(t+2)),
// and the flip reversing the coordinates.
FiniteGroup suzuki(uint32_t f) {
    uint32_t exp2 = 2 * f + 1;
    Gf F(2, exp2);
    uint32_t q = F.q();
    uint32_t theta = 1u << (f + 1);  // x -> x^theta squares to Frobenius-squaring

    auto ovoid_last = [&](uint32_t a, uint32_t b) {
        return F.add(F.add(F.mul(a, b), F.pow(a, theta + 2)), F.pow(b, theta));
    };

    PointSet ps;
    ps.q = q;
    ps.dim = 4;
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b) ps.pts.push_back({1, a, b, ovoid_last(a, b)});
    ps.pts.push_back({0, 0, 0, 1});
    ps.build_lookup();

    auto s_mat = [&](uint32_t a, uint32_t b) {
        Mat m = mat_identity(F, 4);
        m.at(1, 0) = a;
        m.at(2, 0) = b;
        m.at(2, 1) = F.pow(a, theta);
        m.at(3, 0) = ovoid_last(a, b);
        m.at(3, 1) = F.add(F.pow(a, theta + 1), b);
        m.at(3, 2) = a;
        return m;
    };
    std::vector<Mat> mats;
    mats.push_back(s_mat(1, 0));
    mats.push_back(s_mat(0, 1));
    uint32_t l = F.generator();
    Mat d(4);
    d.at(0, 0) = 1;
    d.at(1, 1) = l;
    d.at(2, 2) = F.pow(l, theta + 1);
    d.at(3, 3) = F.pow(l, theta + 2);
    mats.push_back(d);
    Mat tau(4);
    tau.at(0, 3) = 1;
    tau.at(1, 2) = 1;
    tau.at(2, 1) = 1;
    tau.at(3, 0) = 1;
    mats.push_back(tau);

    std::vector<Perm> gens;
    for (const auto& m : mats) gens.push_back(action_perm(F, ps, m, true));
    return make_group(std::move(gens), "Sz(" + std::to_string(q) + ")");
}

FiniteGroup mathieu11() {
    Perm a = Perm::parse_cycles("(0 1 2 3 4 5 6 7 8 9 10)", 11);
    Perm b = Perm::parse_cycles("(2 6 10 7)(3 9 4 5)", 11);
    return make_group({a, b}, "M11");
}

FiniteGroup alt7() {
    Perm a = Perm::parse_cycles("(0 1 2 3 4 5 6)", 7);
    Perm b = Perm::parse_cycles("(4 5 6)", 7);
    return make_group({a, b}, "A7");
}

// Embedded 266-point generators for J1 are appended near the end of this file.
FiniteGroup janko1();

}  // namespace

FiniteGroup named_group(NamedTag tag) {
    switch (tag) {
        case NamedTag::A7: return alt7();
        case NamedTag::M11: return mathieu11();
        case NamedTag::J1: return janko1();
        case NamedTag::SZ8: return suzuki(1);
        case NamedTag::PSL3_3: return psl3(3);
        case NamedTag::PSL3_4: return psl3(4);
        case NamedTag::G2_2_PRIME: {
            FiniteGroup g = psu3(3);
            g.name = "G2(2)'";
            return g;
        }
    }
    throw std::invalid_argument("named_group: unknown tag");
}

NamedTag named_tag_from_string(std::string_view s) {
    std::string u(s);
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    if (u == "A7") return NamedTag::A7;
    if (u == "M11") return NamedTag::M11;
    if (u == "J1") return NamedTag::J1;
    if (u == "SZ8") return NamedTag::SZ8;
    if (u == "PSL3_3") return NamedTag::PSL3_3;
    if (u == "PSL3_4") return NamedTag::PSL3_4;
    if (u == "G2_2_PRIME") return NamedTag::G2_2_PRIME;
    throw std::invalid_argument("unknown group tag: " + std::string(s));
}

std::string to_string(NamedTag tag) {
    switch (tag) {
        case NamedTag::A7: return "A7";
        case NamedTag::M11: return "M11";
        case NamedTag::J1: return "J1";
        case NamedTag::SZ8: return "SZ8";
        case NamedTag::PSL3_3: return "PSL3_3";
        case NamedTag::PSL3_4: return "PSL3_4";
        case NamedTag::G2_2_PRIME: return "G2_2_PRIME";
    }
    return "?";
}

FiniteGroup load_generators_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open generators file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
        if (blank) {
            if (!lines.empty()) break;  // empty line terminates
            continue;
        }
        lines.push_back(line);
    }
    if (lines.empty()) throw std::runtime_error("generators file has no permutations: " + path);
    std::vector<Perm> gens;
    uint32_t degree = 0;
    for (const auto& l : lines) {
        Perm p = Perm::parse_cycles(l);
        degree = std::max(degree, p.degree());
        gens.push_back(std::move(p));
    }
    for (auto& g : gens) g = g.extended_to(degree);
    return make_group(std::move(gens), path);
}

namespace {

// J1 on 266 points: the action on cosets of an index-266 subgroup (isomorphic to
// PSL(2,11)) of the group generated by Janko's two 7x7 matrices over GF(11); the
// coset permutations induced by those two matrix generators are embedded below.
constexpr uint16_t kJankoGenA[266] = {
    1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 20, 22, 24, 26, 28, 30, 32, 33, 35, 12, 38, 39, 41, 43,
    45, 47, 49, 51, 53, 55, 56, 58, 25, 60, 62, 64, 66, 68, 8, 71, 73, 74, 76, 31, 48, 80, 75,
    79, 57, 37, 27, 83, 85, 69, 88, 90, 0, 92, 94, 6, 10, 97, 99, 101, 103, 105, 107, 109, 59,
    111, 113, 114, 116, 118, 93, 44, 120, 18, 42, 122, 4, 125, 127, 128, 52, 131, 133, 135, 136,
    108, 139, 141, 134, 2, 123, 144, 91, 146, 148, 150, 152, 154, 156, 158, 87, 67, 161, 163,
    165, 167, 168, 170, 65, 173, 174, 176, 178, 169, 181, 183, 124, 185, 143, 186, 187, 189,
    191, 192, 194, 98, 197, 199, 86, 95, 46, 200, 201, 203, 54, 206, 61, 207, 209, 16, 211, 164,
    212, 84, 82, 119, 106, 117, 215, 172, 217, 151, 177, 132, 219, 220, 222, 223, 115, 225, 205,
    226, 227, 202, 81, 230, 232, 137, 149, 184, 234, 214, 229, 235, 236, 100, 238, 239, 196,
    240, 182, 160, 23, 241, 140, 130, 244, 63, 195, 21, 246, 129, 247, 110, 218, 213, 210, 142,
    112, 251, 252, 121, 253, 254, 159, 138, 204, 157, 216, 147, 102, 255, 188, 256, 257, 77, 89,
    258, 145, 34, 259, 166, 208, 36, 171, 260, 261, 179, 14, 262, 193, 249, 198, 180, 245, 190,
    242, 78, 153, 231, 40, 248, 50, 70, 224, 175, 29, 221, 104, 250, 233, 243, 126, 72, 228,
    237, 264, 263, 96, 155, 265, 162};

constexpr uint16_t kJankoGenB[266] = {
    2, 4, 6, 8, 10, 12, 14, 16, 18, 5, 21, 23, 25, 27, 29, 31, 24, 34, 36, 37, 7, 40, 42, 44,
    46, 48, 50, 52, 54, 0, 57, 26, 59, 61, 63, 65, 67, 69, 70, 72, 1, 75, 77, 78, 79, 45, 20,
    33, 9, 81, 82, 84, 86, 87, 89, 91, 68, 93, 58, 95, 96, 98, 100, 102, 104, 106, 108, 3, 110,
    112, 30, 115, 117, 119, 32, 120, 71, 121, 62, 123, 124, 126, 15, 129, 130, 132, 134, 109,
    137, 138, 140, 142, 94, 38, 143, 122, 145, 147, 149, 151, 153, 155, 157, 159, 160, 113, 162,
    164, 166, 146, 169, 171, 172, 103, 175, 177, 179, 180, 182, 49, 184, 133, 74, 11, 188, 190,
    73, 193, 195, 196, 198, 111, 80, 22, 13, 88, 202, 204, 205, 173, 148, 208, 210, 187, 76,
    211, 213, 83, 158, 47, 214, 156, 216, 43, 218, 178, 194, 17, 201, 221, 125, 224, 215, 206,
    128, 139, 228, 114, 229, 231, 163, 222, 19, 233, 154, 232, 116, 144, 237, 161, 181, 39, 174,
    241, 240, 189, 60, 242, 85, 243, 64, 238, 99, 245, 192, 207, 97, 248, 249, 168, 250, 90,
    219, 55, 220, 28, 150, 107, 185, 66, 203, 186, 199, 53, 170, 35, 127, 255, 118, 258, 135,
    105, 246, 236, 176, 225, 167, 136, 209, 244, 239, 56, 226, 251, 230, 197, 217, 263, 235,
    262, 41, 254, 92, 141, 212, 152, 131, 223, 191, 51, 183, 165, 252, 234, 200, 247, 264, 260,
    227, 257, 256, 261, 253, 101, 259, 265};

FiniteGroup janko1() {
    std::vector<uint16_t> a(kJankoGenA, kJankoGenA + 266), b(kJankoGenB, kJankoGenB + 266);
    return make_group({Perm::from_images(std::move(a)), Perm::from_images(std::move(b))}, "J1");
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec.rfind("name:", 0) == 0) return named_group(named_tag_from_string(spec.substr(5)));
    auto parse_q = [&](size_t pos) {
        mpz_class q;
        std::string tail = spec.substr(pos);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad q in group spec: " + spec);
        q = mpz_class(tail);
        return q;
    };
    if (spec.rfind("psl:2:", 0) == 0) return psl2(parse_q(6));
    if (spec.rfind("psl:3:", 0) == 0) return psl3(parse_q(6));
    if (spec.rfind("psu:3:", 0) == 0) return psu3(parse_q(6));
    return load_generators_file(spec);
}

}  // namespace cdg
