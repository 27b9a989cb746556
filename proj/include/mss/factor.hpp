#pragma once

#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lie.hpp"
#include "triality.hpp"

namespace mss {

// A composition superalgebra together with a lattice grading of its three
// copies and a homogeneous basis of tri(S). D[i][x] is the degree of
// iota_i(e_x (x) .) contributed by this factor.
struct Factor {
    CompositionSuperalgebra s;
    TriModel tri;
    std::vector<Degree> tri_deg;
    std::array<std::vector<Degree>, 3> D;
    std::vector<std::string> lattice;
    std::vector<std::size_t> cartan;   // indices into tri.basis
    std::vector<std::vector<int>> R;   // R[g][j] = R(lattice gen g)(cartan j)
};

inline Degree zero_degree(std::size_t n) { return Degree(n, 0); }

inline Degree lattice_unit(std::size_t n, std::size_t k, int c = 1) {
    Degree d(n, 0);
    d[k] = c;
    return d;
}

// R(deg)(h_j), as an integer
inline int pair_R(const std::vector<std::vector<int>>& R, const Degree& deg, std::size_t j) {
    int s = 0;
    for (std::size_t g = 0; g < deg.size(); ++g) s += deg[g] * R[g][j];
    return s;
}

inline std::string degree_string(const Degree& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str();
}

namespace detail {

using Q = boost::rational<long long>;

// Row reduction over Q of [A | B]; returns the unique solution X of A X = B
// or an error message.
inline std::vector<std::vector<Q>> solve_rational(std::vector<std::vector<Q>> a, std::size_t nvars,
                                                  std::size_t nrhs, std::string& err) {
    std::size_t row = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < nvars && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c].numerator() == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Q inv = Q(1) / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c].numerator() == 0) continue;
            Q f = a[i][c];
            for (std::size_t j = 0; j < nvars + nrhs; ++j) a[i][j] -= f * a[row][j];
        }
        piv.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < a.size(); ++i)
        for (std::size_t j = nvars; j < nvars + nrhs; ++j)
            if (a[i][j].numerator() != 0) {
                err = "inconsistent degree constraints";
                return {};
            }
    if (row < nvars) {
        std::vector<bool> has(nvars, false);
        for (auto p : piv) has[p] = true;
        std::size_t free = 0;
        while (has[free]) ++free;
        err = "ambiguous grading: unknown " + std::to_string(free) + " is not determined by the anchors";
        return {};
    }
    std::vector<std::vector<Q>> x(nvars, std::vector<Q>(nrhs));
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < nrhs; ++j) x[piv[i]][j] = a[i][nvars + j];
    return x;
}

}  // namespace detail

struct DegreeAnchor {
    int copy;
    std::size_t index;
    Degree deg;
};

// Degrees D_i(x) for an algebra with monomial basis products, from the rules
//   D_{i+2}(k) = D_i(x) + D_{i+1}(y) for k in the support of x.y,
//   D_i(x) + D_i(y) = 0 whenever b(x,y) != 0,
// plus anchors. Throws on inconsistency, ambiguity or non-integral solutions.
inline std::array<std::vector<Degree>, 3> propagate_degrees(const CompositionSuperalgebra& s,
                                                            const std::vector<DegreeAnchor>& anchors,
                                                            std::size_t rank) {
    using detail::Q;
    const std::size_t n = s.dim, nv = 3 * n, w = nv + rank;
    auto var = [n](int i, std::size_t x) { return static_cast<std::size_t>(i) * n + x; };
    std::vector<std::vector<Q>> rows;
    for (int i = 0; i < 3; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const Vec& p = s.prod(x, y);
                for (std::size_t k = 0; k < n; ++k) {
                    if (p[k].zero()) continue;
                    std::vector<Q> r(w);
                    r[var((i + 2) % 3, k)] += 1;
                    r[var(i, x)] -= 1;
                    r[var((i + 1) % 3, y)] -= 1;
                    rows.push_back(std::move(r));
                }
                if (!s.bform(x, y).zero()) {
                    std::vector<Q> r(w);
                    r[var(i, x)] += 1;
                    r[var(i, y)] += 1;
                    rows.push_back(std::move(r));
                }
            }
    for (auto& a : anchors) {
        std::vector<Q> r(w);
        r[var(a.copy, a.index)] = 1;
        for (std::size_t g = 0; g < rank; ++g) r[nv + g] = a.deg[g];
        rows.push_back(std::move(r));
    }
    std::string err;
    auto sol = detail::solve_rational(rows, nv, rank, err);
    if (!err.empty()) throw std::runtime_error("propagate_degrees(" + s.name + "): " + err);
    std::array<std::vector<Degree>, 3> D;
    for (int i = 0; i < 3; ++i)
        for (std::size_t x = 0; x < n; ++x) {
            Degree d(rank);
            for (std::size_t g = 0; g < rank; ++g) {
                const Q& q = sol[var(i, x)][g];
                if (q.denominator() != 1)
                    throw std::runtime_error("propagate_degrees(" + s.name + "): non-integral degree");
                d[g] = static_cast<int>(q.numerator());
            }
            D[i].push_back(d);
        }
    return D;
}

// Anchors for S8: the first quaternion copy carries +-e1+-e2, the second +-e3+-e4.
inline std::vector<DegreeAnchor> s8_anchors() {
    // basis of C: (v.v,0) (v.w,0) (w.v,0) (w.w,0) (0,v.v) (0,v.w) (0,w.v) (0,w.w)
    return {{0, 3, {1, 1, 0, 0}}, {0, 2, {1, -1, 0, 0}}, {0, 7, {0, 0, 1, 1}}, {0, 6, {0, 0, 1, -1}}};
}

// Homogeneous basis of tri(S) for a graded S, with Cartan elements h_j acting
// on copy i by x -> (D_i(x))_j x. Degree-0 part must be spanned by the h_j.
inline void solve_graded_tri(Factor& f) {
    const auto& s = f.s;
    const std::size_t n = s.dim, r = f.lattice.size();
    std::set<Degree> cand;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
            Degree d = f.D[0][z];
            for (std::size_t g = 0; g < r; ++g) d[g] -= f.D[0][x][g];
            cand.insert(d);
        }
    std::vector<TrialityElement> h, roots;
    std::vector<Degree> root_deg;
    std::vector<std::string> root_labels;
    std::size_t total = 0;
    for (const auto& alpha : cand) {
        auto mask = [&](int i, std::size_t z, std::size_t x) { return f.D[i][z] == f.D[i][x] + alpha; };
        for (int p = 0; p < 2; ++p) {
            auto sol = tri_solve_parity(s, p, mask);
            total += sol.size();
            if (sol.empty()) continue;
            if (is_zero_degree(alpha)) {
                if (p != 0 || sol.size() != r)
                    throw std::runtime_error("solve_graded_tri: degree-0 part is not a Cartan of rank " +
                                             std::to_string(r));
                std::vector<Vec> span;
                for (auto& t : sol) span.push_back(t.flat());
                Coordinatizer co(span, 3 * n * n);
                for (std::size_t j = 0; j < r; ++j) {
                    TrialityElement t;
                    for (int i = 0; i < 3; ++i) {
                        t.d[i] = Mat(n, n);
                        for (std::size_t x = 0; x < n; ++x) t.d[i](x, x) = F3(f.D[i][x][j]);
                    }
                    if (!co.coords(t.flat()))
                        throw std::runtime_error("solve_graded_tri: diagonal Cartan element missing");
                    h.push_back(t);
                }
                if (rank(span, 3 * n * n) != rank([&] {
                        std::vector<Vec> v;
                        for (auto& t : h) v.push_back(t.flat());
                        return v;
                    }(), 3 * n * n))
                    throw std::runtime_error("solve_graded_tri: Cartan elements are dependent");
            } else {
                for (auto& t : sol) {
                    roots.push_back(t);
                    root_deg.push_back(alpha);
                    root_labels.push_back("x(" + degree_string(alpha) + ")" +
                                          (sol.size() > 1 ? "#" + std::to_string(&t - sol.data()) : ""));
                }
            }
        }
    }
    if (total != tri_solve(s).size()) throw std::runtime_error("solve_graded_tri: graded pieces do not fill tri");
    f.tri.kind = TriKind::solved;
    f.tri.basis.clear();
    f.tri.labels.clear();
    f.tri_deg.clear();
    f.cartan.clear();
    for (std::size_t j = 0; j < r; ++j) {
        f.cartan.push_back(f.tri.basis.size());
        f.tri.basis.push_back(h[j]);
        f.tri.labels.push_back("h" + std::to_string(j + 1));
        f.tri_deg.push_back(zero_degree(r));
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        f.tri.basis.push_back(roots[k]);
        f.tri.labels.push_back(root_labels[k]);
        f.tri_deg.push_back(root_deg[k]);
    }
    f.R.assign(r, std::vector<int>(r, 0));
    for (std::size_t j = 0; j < r; ++j) f.R[j][j] = 1;
}

inline Factor build_factor(const std::string& name) {
    Factor f;
    f.s = build_composition(name);
    if (name == "S1") {
        f.tri = tri_model(f.s);
        for (int i = 0; i < 3; ++i) f.D[i] = {Degree{}};
        return f;
    }
    if (name == "S2") {
        f.tri = tri_model(f.s);
        f.lattice = {"d1", "d2"};
        f.tri_deg = {zero_degree(2), zero_degree(2)};
        // e+ has degree d1, d2, -(d1+d2) in the three copies
        f.D[0] = {{1, 0}, {-1, 0}};
        f.D[1] = {{0, 1}, {0, -1}};
        f.D[2] = {{-1, -1}, {1, 1}};
        f.cartan = {0, 1};
        f.R = {{1, 0}, {-1, 1}};
        return f;
    }
    if (name == "S12") {
        f.tri = tri_model(f.s);
        f.lattice = {"e"};
        f.tri_deg = {{2}, {0}, {-2}, {-1}, {1}};
        for (int i = 0; i < 3; ++i) f.D[i] = {{0}, {-1}, {1}};
        f.cartan = {1};
        f.R = {{1}};
        return f;
    }
    if (name == "S42" || name == "S4") {
        f.tri = tri_model(f.s);
        f.lattice = {"e1", "e2", "e3"};
        auto wdeg = [](int u) { return u == 1 ? 1 : -1; };  // w -> +e, v -> -e
        for (int slot = 0; slot < 3; ++slot)
            for (int c : {2, 0, -2}) f.tri_deg.push_back(lattice_unit(3, slot, c));
        if (name == "S42")
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int c = 0; c < 2; ++c) f.tri_deg.push_back({wdeg(a), wdeg(b), wdeg(c)});
        // copy i: x (x) y with x in V_i, y in V_{i+1}; odd u in V_{i+2}
        for (int i = 0; i < 3; ++i) {
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    Degree d(3, 0);
                    d[i] += wdeg(x);
                    d[(i + 1) % 3] += wdeg(y);
                    f.D[i].push_back(d);
                }
            if (name == "S42")
                for (int u = 0; u < 2; ++u) f.D[i].push_back(lattice_unit(3, (i + 2) % 3, wdeg(u)));
        }
        f.cartan = {1, 4, 7};
        f.R = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        return f;
    }
    if (name == "S8") {
        f.lattice = {"e1", "e2", "e3", "e4"};
        f.D = propagate_degrees(f.s, s8_anchors(), 4);
        solve_graded_tri(f);
        return f;
    }
    throw std::invalid_argument("build_factor: unknown algebra " + name);
}

// Consistency of a factor's grading; returns human-readable problems.
inline std::vector<std::string> verify_factor(const Factor& f) {
    std::vector<std::string> out;
    const auto& s = f.s;
    const std::size_t n = s.dim;
    for (std::size_t k = 0; k < f.tri.basis.size(); ++k) {
        const auto& t = f.tri.basis[k];
        if (!satisfies_triality(s, t)) out.push_back("tri element " + f.tri.labels[k] + " fails triality");
        for (int i = 0; i < 3; ++i)
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t z = 0; z < n; ++z)
                    if (!t.d[i](z, x).zero() && f.D[i][z] != f.D[i][x] + f.tri_deg[k])
                        out.push_back("tri element " + f.tri.labels[k] + " is not homogeneous");
    }
    for (int i = 0; i < 3; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const Vec& p = s.prod(x, y);
                for (std::size_t k = 0; k < n; ++k)
                    if (!p[k].zero() && f.D[(i + 2) % 3][k] != f.D[i][x] + f.D[(i + 1) % 3][y])
                        out.push_back("product rule fails in copy " + std::to_string(i));
                if (!s.bform(x, y).zero() && !is_zero_degree(f.D[i][x] + f.D[i][y]))
                    out.push_back("form rule fails in copy " + std::to_string(i));
            }
    for (std::size_t j = 0; j < f.cartan.size(); ++j) {
        const auto& h = f.tri.basis[f.cartan[j]];
        for (int i = 0; i < 3; ++i) {
            Mat want(n, n);
            for (std::size_t x = 0; x < n; ++x) want(x, x) = F3(pair_R(f.R, f.D[i][x], j));
            if (h.d[i] != want) out.push_back("Cartan element " + f.tri.labels[f.cartan[j]] + " has wrong eigenvalues");
        }
    }
    return out;
}

}  // namespace mss
