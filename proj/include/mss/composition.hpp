#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace mss {

// Symplectic plane V with basis v (index 0), w (index 1) and <v|w> = 1.
inline F3 symp(int a, int b) {
    if (a == 0 && b == 1) return 1;
    if (a == 1 && b == 0) return -1;
    return 0;
}
inline const char* symp_label(int a) { return a == 0 ? "v" : "w"; }

struct CompositionSuperalgebra {
    std::string name;
    std::size_t dim = 0;
    std::vector<int> parity;
    std::vector<Vec> table;  // table[x*dim + y] = e_x * e_y
    Mat bform;
    std::vector<F3> q0;  // meaningful on even basis vectors only
    std::optional<Vec> unit;
    std::vector<std::string> labels;

    const Vec& prod(std::size_t x, std::size_t y) const { return table[x * dim + y]; }
    Vec& prod(std::size_t x, std::size_t y) { return table[x * dim + y]; }

    std::size_t even_dim() const {
        std::size_t c = 0;
        for (int p : parity) c += (p == 0);
        return c;
    }
    std::size_t odd_dim() const { return dim - even_dim(); }

    F3 b(const Vec& x, const Vec& y) const {
        F3 s;
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i].zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) s += x[i] * bform(i, j) * y[j];
        }
        return s;
    }
};

inline CompositionSuperalgebra empty_algebra(std::string name, std::vector<int> parity,
                                             std::vector<std::string> labels) {
    CompositionSuperalgebra s;
    s.name = std::move(name);
    s.dim = parity.size();
    s.parity = std::move(parity);
    s.labels = std::move(labels);
    s.table.assign(s.dim * s.dim, Vec(s.dim));
    s.bform = Mat(s.dim, s.dim);
    s.q0.assign(s.dim, F3(0));
    return s;
}

inline Vec product(const CompositionSuperalgebra& s, const Vec& x, const Vec& y) {
    if (x.size() != s.dim || y.size() != s.dim) throw std::invalid_argument("product: dimension mismatch");
    Vec r(s.dim);
    for (std::size_t i = 0; i < s.dim; ++i) {
        if (x[i].zero()) continue;
        for (std::size_t j = 0; j < s.dim; ++j) {
            F3 c = x[i] * y[j];
            if (!c.zero()) axpy(r, c, s.prod(i, j));
        }
    }
    return r;
}

// x -> b(x,1)1 - x, for algebras carrying a unit.
inline Vec conjugation(const CompositionSuperalgebra& s, const Vec& x) {
    if (!s.unit) throw std::invalid_argument("conjugation: " + s.name + " has no unit");
    const Vec& one = *s.unit;
    return s.b(x, one) * one - x;
}

// x . y = conj(x) conj(y)
inline CompositionSuperalgebra para_twist(const CompositionSuperalgebra& h, std::string name) {
    CompositionSuperalgebra s = h;
    s.name = std::move(name);
    s.unit.reset();
    std::vector<Vec> bar(h.dim);
    for (std::size_t i = 0; i < h.dim; ++i) bar[i] = conjugation(h, unit(h.dim, i));
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j) s.prod(i, j) = product(h, bar[i], bar[j]);
    return s;
}

// Hurwitz superalgebra B(1,2) = k1 + V.
inline CompositionSuperalgebra hurwitz_b12() {
    auto s = empty_algebra("B(1,2)", {0, 1, 1}, {"1", "v", "w"});
    s.prod(0, 0) = unit(3, 0);
    for (int u = 0; u < 2; ++u) {
        s.prod(0, 1 + u) = unit(3, 1 + u);
        s.prod(1 + u, 0) = unit(3, 1 + u);
        for (int t = 0; t < 2; ++t) s.prod(1 + u, 1 + t) = symp(u, t) * unit(3, 0);
    }
    s.bform(0, 0) = 2;
    for (int u = 0; u < 2; ++u)
        for (int t = 0; t < 2; ++t) s.bform(1 + u, 1 + t) = symp(u, t);
    s.q0[0] = 1;
    s.unit = unit(3, 0);
    return s;
}

// index of x (x) y in the basis vv, vw, wv, ww
inline int tens(int x, int y) { return 2 * x + y; }

// Hurwitz superalgebra B(4,2) = (V (x) V) + V, with x (x) y read as <x|.>y in End(V).
inline CompositionSuperalgebra hurwitz_b42() {
    auto s = empty_algebra("B(4,2)", {0, 0, 0, 0, 1, 1}, {"v.v", "v.w", "w.v", "w.w", "v", "w"});
    const std::size_t n = 6;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                for (int t = 0; t < 2; ++t) {
                    s.prod(tens(x, y), tens(z, t)) = symp(x, t) * unit(n, tens(z, y));
                    s.bform(tens(x, y), tens(z, t)) = symp(x, z) * symp(y, t);
                }
    for (int u = 0; u < 2; ++u)
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                // u (x (x) y) = <x|u> y,  (y (x) x) u = -<x|u> y
                s.prod(4 + u, tens(x, y)) = symp(x, u) * unit(n, 4 + y);
                s.prod(tens(y, x), 4 + u) = -symp(x, u) * unit(n, 4 + y);
            }
    for (int u = 0; u < 2; ++u)
        for (int t = 0; t < 2; ++t) {
            s.prod(4 + u, 4 + t) = -1 * unit(n, tens(u, t));
            s.bform(4 + u, 4 + t) = symp(u, t);
        }
    // q0 = det, which vanishes on rank one maps
    Vec one(n);
    one[tens(0, 1)] = 1;
    one[tens(1, 0)] = -1;
    s.unit = one;
    return s;
}

// Split quaternions: the even part of B(4,2).
inline CompositionSuperalgebra hurwitz_quaternions() {
    auto big = hurwitz_b42();
    auto s = empty_algebra("Q", {0, 0, 0, 0}, {"v.v", "v.w", "w.v", "w.w"});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            s.prod(i, j) = Vec(big.prod(i, j).begin(), big.prod(i, j).begin() + 4);
            s.bform(i, j) = big.bform(i, j);
        }
    s.unit = Vec(big.unit->begin(), big.unit->begin() + 4);
    return s;
}

// Cayley-Dickson double C = Q + Q:
//   (a,b)(c,d) = (ac + conj(d) b, d a + b conj(c)),  conj(a,b) = (conj a, -b),
//   b((a,b),(c,d)) = b(a,c) - b(b,d).
inline CompositionSuperalgebra hurwitz_octonions() {
    auto q = hurwitz_quaternions();
    std::vector<std::string> labels;
    for (int half = 0; half < 2; ++half)
        for (auto& l : q.labels) labels.push_back(half == 0 ? "(" + l + ",0)" : "(0," + l + ")");
    auto s = empty_algebra("C", std::vector<int>(8, 0), labels);
    auto split = [](const Vec& x) {
        return std::pair<Vec, Vec>{Vec(x.begin(), x.begin() + 4), Vec(x.begin() + 4, x.end())};
    };
    auto join = [](const Vec& a, const Vec& b) {
        Vec r(a);
        r.insert(r.end(), b.begin(), b.end());
        return r;
    };
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            auto [a, b] = split(unit(8, i));
            auto [c, d] = split(unit(8, j));
            Vec first = product(q, a, c) + product(q, conjugation(q, d), b);
            Vec second = product(q, d, a) + product(q, b, conjugation(q, c));
            s.prod(i, j) = join(first, second);
            auto [a2, b2] = split(unit(8, j));
            s.bform(i, j) = q.b(a, a2) - q.b(b, b2);
        }
    for (std::size_t i = 0; i < 8; ++i) s.q0[i] = kHalf * s.bform(i, i);
    s.unit = join(*q.unit, Vec(4));
    return s;
}

inline CompositionSuperalgebra build_s1() {
    auto s = empty_algebra("S1", {0}, {"1"});
    s.prod(0, 0) = unit(1, 0);
    s.bform(0, 0) = 2;
    s.q0[0] = 1;
    return s;
}

inline CompositionSuperalgebra build_s2() {
    auto s = empty_algebra("S2", {0, 0}, {"e+", "e-"});
    s.prod(0, 0) = unit(2, 1);
    s.prod(1, 1) = unit(2, 0);
    s.bform(0, 1) = 1;
    s.bform(1, 0) = 1;
    return s;
}

inline CompositionSuperalgebra build_s12() { return para_twist(hurwitz_b12(), "S12"); }
inline CompositionSuperalgebra build_s42() { return para_twist(hurwitz_b42(), "S42"); }
inline CompositionSuperalgebra build_s8() { return para_twist(hurwitz_octonions(), "S8"); }

inline CompositionSuperalgebra build_s4() {
    auto s = para_twist(hurwitz_quaternions(), "S4");
    return s;
}

// x * y = phi(conj x) phi^2(conj y) on B(1,2), with phi(v) = v, phi(w) = lambda v + w.
inline CompositionSuperalgebra build_b12bar_lambda(F3 lambda) {
    auto h = hurwitz_b12();
    Mat phi = Mat::identity(3);
    phi(1, 2) = lambda;  // column of w gets lambda in the v row
    Mat phi2 = phi * phi;
    std::ostringstream nm;
    nm << "B12bar_" << lambda;
    auto s = h;
    s.name = nm.str();
    s.unit.reset();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Vec x = phi * conjugation(h, unit(3, i));
            Vec y = phi2 * conjugation(h, unit(3, j));
            s.prod(i, j) = product(h, x, y);
        }
    return s;
}

inline const std::vector<std::string>& algebra_names() {
    static const std::vector<std::string> n{"S1", "S2", "S4", "S8", "S12", "S42"};
    return n;
}

inline CompositionSuperalgebra build_composition(const std::string& name,
                                                 std::optional<F3> lambda = std::nullopt) {
    if (name == "B12bar_lambda") {
        if (!lambda) throw std::invalid_argument("B12bar_lambda needs lambda");
        return build_b12bar_lambda(*lambda);
    }
    if (lambda) throw std::invalid_argument("lambda given for " + name);
    if (name == "S1") return build_s1();
    if (name == "S2") return build_s2();
    if (name == "S4") return build_s4();
    if (name == "S8") return build_s8();
    if (name == "S12") return build_s12();
    if (name == "S42") return build_s42();
    throw std::invalid_argument("unknown algebra: " + name);
}

struct AxiomViolation {
    std::string identity;
    std::vector<std::size_t> indices;
    F3 lhs, rhs;

    std::string str() const {
        std::ostringstream os;
        os << identity << " at (";
        for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
        os << "): " << lhs << " != " << rhs;
        return os.str();
    }
};

// Composition axioms on all basis combinations. The quadratic identities are
// checked on the diagonal and in fully polarized form, which is equivalent in
// characteristic 3.
inline std::vector<AxiomViolation> verify_composition_axioms(const CompositionSuperalgebra& s) {
    std::vector<AxiomViolation> out;
    const std::size_t n = s.dim;
    auto e = [&](std::size_t i) { return unit(n, i); };
    auto B = [&](std::size_t i, std::size_t j) { return s.bform(i, j); };
    auto bv = [&](const Vec& x, const Vec& y) { return s.b(x, y); };
    auto P = [&](std::size_t i, std::size_t j) -> const Vec& { return s.prod(i, j); };
    auto par = [&](std::size_t i) { return s.parity[i]; };
    auto report = [&](const char* id, std::vector<std::size_t> idx, F3 l, F3 r) {
        if (l != r) out.push_back({id, std::move(idx), l, r});
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (par(i) != par(j)) report("b mixed blocks", {i, j}, B(i, j), 0);
            else if (par(i) == 0) report("b symmetric", {i, j}, B(i, j), B(j, i));
            else {
                report("b alternating", {i, j}, B(i, j), -B(j, i));
                if (i == j) report("b alternating", {i, i}, B(i, i), 0);
            }
            for (std::size_t k = 0; k < n; ++k)
                if (!P(i, j)[k].zero() && par(k) != ((par(i) + par(j)) & 1))
                    report("parity", {i, j, k}, P(i, j)[k], 0);
        }
    if (rank(s.bform) != n) out.push_back({"b nondegenerate", {}, F3(int(rank(s.bform) % 3)), F3(int(n % 3))});
    for (std::size_t i = 0; i < n; ++i)
        if (par(i) == 0) report("polar", {i}, B(i, i), 2 * s.q0[i]);

    auto q0v = [&](const Vec& x) { return kHalf * bv(x, x); };
    for (std::size_t x = 0; x < n; ++x) {
        if (par(x)) continue;
        for (std::size_t y = 0; y < n; ++y) {
            if (par(y) == 0) report("q multiplicative", {x, y}, q0v(P(x, y)), s.q0[x] * s.q0[y]);
            for (std::size_t z = 0; z < n; ++z) {
                report("q(x)b(y,z) left", {x, y, z}, bv(P(x, y), P(x, z)), s.q0[x] * B(y, z));
                report("q(x)b(y,z) right", {x, y, z}, bv(P(y, x), P(z, x)), s.q0[x] * B(y, z));
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            if (par(x) || par(x2)) continue;
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    F3 rhs = B(x, x2) * B(y, z);
                    if (par(y) == 0 && par(z) == 0)
                        report("q multiplicative, polarized", {x, x2, y, z}, bv(P(x, y), P(x2, z)) + bv(P(x2, y), P(x, z)), rhs);
                    report("q(x)b(y,z) left, polarized", {x, x2, y, z}, bv(P(x, y), P(x2, z)) + bv(P(x2, y), P(x, z)), rhs);
                    report("q(x)b(y,z) right, polarized", {x, x2, y, z}, bv(P(y, x), P(z, x2)) + bv(P(y, x2), P(z, x)), rhs);
                }
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                report("symmetric", {x, y, z}, bv(P(x, y), e(z)), bv(e(x), P(y, z)));
                for (std::size_t t = 0; t < n; ++t) {
                    int sg = par(x) * par(y) + par(x) * par(z) + par(y) * par(z);
                    F3 lhs = bv(P(x, y), P(z, t)) + sign(sg) * bv(P(z, y), P(x, t));
                    report("b(xy,zt) linearized", {x, y, z, t}, lhs, sign(par(y) * par(z)) * B(x, z) * B(y, t));
                }
            }
    return out;
}

}  // namespace mss
