#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "factor.hpp"
#include "lie.hpp"

namespace mss {

// g(S,S') = tri(S) + tri(S') + iota_0(S (x) S') + iota_1(S (x) S') + iota_2(S (x) S').
class MagicBuilder {
public:
    MagicBuilder(const Factor& a, const Factor& b) : A_(a), B_(b) {
        for (const Factor* f : {&a, &b}) {
            auto v = verify_composition_axioms(f->s);
            if (!v.empty()) throw std::invalid_argument("build_magic: " + f->s.name + " fails the composition axioms");
        }
        nT_ = a.tri.basis.size();
        nTp_ = b.tri.basis.size();
        n_ = a.s.dim;
        np_ = b.s.dim;
        N_ = n_ * np_;
        off_ = nT_ + nTp_;
        dim_ = off_ + 3 * N_;
        prepare(A_, triA_, tA_);
        prepare(B_, triB_, tB_);
    }

    std::size_t dim() const { return dim_; }

    LieSuperalgebra build() const {
        LieSuperalgebra g;
        g.name = A_.s.name + B_.s.name;
        g.dim = dim_;
        const std::size_t ra = A_.lattice.size(), rb = B_.lattice.size();
        auto cat = [&](const Degree& x, const Degree& y) {
            Degree d = x;
            d.insert(d.end(), y.begin(), y.end());
            return d;
        };
        for (std::size_t k = 0; k < nT_; ++k) {
            g.parity.push_back(A_.tri.basis[k].parity);
            g.labels.push_back("T[" + A_.tri.labels[k] + "]");
            g.blocks.push_back("tri");
            g.deg.push_back(cat(A_.tri_deg[k], zero_degree(rb)));
        }
        for (std::size_t k = 0; k < nTp_; ++k) {
            g.parity.push_back(B_.tri.basis[k].parity);
            g.labels.push_back("T'[" + B_.tri.labels[k] + "]");
            g.blocks.push_back("tri'");
            g.deg.push_back(cat(zero_degree(ra), B_.tri_deg[k]));
        }
        for (int i = 0; i < 3; ++i)
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t xp = 0; xp < np_; ++xp) {
                    g.parity.push_back((A_.s.parity[x] + B_.s.parity[xp]) & 1);
                    g.labels.push_back("i" + std::to_string(i) + "(" + A_.s.labels[x] + "|" + B_.s.labels[xp] + ")");
                    g.blocks.push_back("i" + std::to_string(i));
                    g.deg.push_back(cat(A_.D[i][x], B_.D[i][xp]));
                }
        g.lattice = A_.lattice;
        g.lattice.insert(g.lattice.end(), B_.lattice.begin(), B_.lattice.end());
        for (auto c : A_.cartan) g.cartan.push_back(c);
        for (auto c : B_.cartan) g.cartan.push_back(nT_ + c);
        const std::size_t ca = A_.cartan.size(), cb = B_.cartan.size();
        g.R.assign(ra + rb, std::vector<int>(ca + cb, 0));
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < ca; ++j) g.R[i][j] = A_.R[i][j];
        for (std::size_t i = 0; i < rb; ++i)
            for (std::size_t j = 0; j < cb; ++j) g.R[ra + i][ca + j] = B_.R[i][j];
        ScBuilder sb(dim_, g.parity);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j) sb.set(i, j, raw(i, j));
        sb.finalize(g);
        return g;
    }

    // Compares every lower-triangle bracket computed directly from the rules
    // against the value the builder derived by anticommutativity.
    std::size_t anticommutativity_violations(const LieSuperalgebra& g) const {
        std::size_t bad = 0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (raw(i, j) != basis_bracket(g, i, j)) ++bad;
        return bad;
    }

private:
    // tri bracket coordinates and theta^i(t_{x,y}) coordinates for one factor
    struct TriTables {
        std::vector<Vec> bracket;  // [k*m + l]
    };

    static void prepare(const Factor& f, TriTables& tt, std::array<std::vector<Vec>, 3>& tcoord) {
        const std::size_t m = f.tri.basis.size(), n = f.s.dim;
        std::vector<Vec> flats;
        for (auto& t : f.tri.basis) flats.push_back(t.flat());
        Coordinatizer co(flats, 3 * n * n);
        auto coords = [&](const TrialityElement& t, const char* what) {
            auto c = co.coords(t.flat());
            if (!c) throw std::logic_error(std::string("build_magic: ") + what + " outside tri(" + f.s.name + ")");
            return *c;
        };
        tt.bracket.resize(m * m);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l)
                tt.bracket[k * m + l] = coords(tri_bracket(f.tri.basis[k], f.tri.basis[l]), "bracket");
        for (int i = 0; i < 3; ++i) tcoord[i].resize(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                TrialityElement t = t_pair(f.s, unit(n, x), unit(n, y));
                for (int i = 0; i < 3; ++i) {
                    tcoord[i][x * n + y] = coords(t, "t_{x,y}");
                    t = theta_raw(t);
                }
            }
    }

    int par(std::size_t i) const {
        if (i < nT_) return A_.tri.basis[i].parity;
        if (i < off_) return B_.tri.basis[i - nT_].parity;
        std::size_t r = (i - off_) % N_;
        return (A_.s.parity[r / np_] + B_.s.parity[r % np_]) & 1;
    }

    std::size_t iota(int i, std::size_t x, std::size_t xp) const { return off_ + i * N_ + x * np_ + xp; }

    // [d, iota_i(x (x) x')] for d = tri basis k (left factor)
    void act_left(std::size_t k, int i, std::size_t x, std::size_t xp, F3 c, Vec& out) const {
        const Mat& d = A_.tri.basis[k].d[i];
        for (std::size_t z = 0; z < n_; ++z)
            if (!d(z, x).zero()) out[iota(i, z, xp)] += c * d(z, x);
    }

    // [d', iota_i(x (x) x')] = (-1)^{|d'||x|} iota_i(x (x) d'_i x')
    void act_right(std::size_t k, int i, std::size_t x, std::size_t xp, F3 c, Vec& out) const {
        const auto& t = B_.tri.basis[k];
        F3 s = c * sign(t.parity * A_.s.parity[x]);
        for (std::size_t z = 0; z < np_; ++z)
            if (!t.d[i](z, xp).zero()) out[iota(i, x, z)] += s * t.d[i](z, xp);
    }

    Vec raw(std::size_t a, std::size_t b) const {
        Vec out(dim_);
        if (a < off_ && b < off_) {
            if (a < nT_ && b < nT_) {
                const Vec& c = triA_.bracket[a * nT_ + b];
                for (std::size_t k = 0; k < nT_; ++k) out[k] = c[k];
            } else if (a >= nT_ && b >= nT_) {
                const Vec& c = triB_.bracket[(a - nT_) * nTp_ + (b - nT_)];
                for (std::size_t k = 0; k < nTp_; ++k) out[nT_ + k] = c[k];
            }
            return out;
        }
        if (a >= off_ && b < off_) {
            // [X, d] = -(-1)^{|X||d|} [d, X]
            Vec r = raw(b, a);
            return -sign(par(a) * par(b)) * r;
        }
        std::size_t rb = b - off_;
        int j = static_cast<int>(rb / N_);
        std::size_t y = (rb % N_) / np_, yp = rb % np_;
        if (a < nT_) {
            act_left(a, j, y, yp, 1, out);
            return out;
        }
        if (a < off_) {
            act_right(a - nT_, j, y, yp, 1, out);
            return out;
        }
        std::size_t ra = a - off_;
        int i = static_cast<int>(ra / N_);
        std::size_t x = (ra % N_) / np_, xp = ra % np_;
        const auto& ps = A_.s.parity;
        const auto& pp = B_.s.parity;
        if (j == (i + 1) % 3) {
            // (-1)^{|x'||y|} iota_{i+2}((x.y) (x) (x'*y'))
            F3 s = sign(pp[xp] * ps[y]);
            const Vec& u = A_.s.prod(x, y);
            const Vec& up = B_.s.prod(xp, yp);
            for (std::size_t z = 0; z < n_; ++z) {
                if (u[z].zero()) continue;
                for (std::size_t zp = 0; zp < np_; ++zp)
                    if (!up[zp].zero()) out[iota((i + 2) % 3, z, zp)] += s * u[z] * up[zp];
            }
            return out;
        }
        if (i == (j + 1) % 3) {
            Vec r = raw(b, a);
            return -sign(par(a) * par(b)) * r;
        }
        // same copy
        F3 bp = B_.s.bform(xp, yp), bb = A_.s.bform(x, y);
        if (!bp.zero()) {
            F3 s = sign(ps[x] * pp[xp] + ps[x] * pp[yp] + ps[y] * pp[yp]) * bp;
            const Vec& c = tA_[i][x * n_ + y];
            for (std::size_t k = 0; k < nT_; ++k) out[k] += s * c[k];
        }
        if (!bb.zero()) {
            F3 s = sign(ps[y] * pp[xp]) * bb;
            const Vec& c = tB_[i][xp * np_ + yp];
            for (std::size_t k = 0; k < nTp_; ++k) out[nT_ + k] += s * c[k];
        }
        return out;
    }

    const Factor& A_;
    const Factor& B_;
    std::size_t nT_ = 0, nTp_ = 0, n_ = 0, np_ = 0, N_ = 0, off_ = 0, dim_ = 0;
    TriTables triA_, triB_;
    std::array<std::vector<Vec>, 3> tA_, tB_;
};

inline LieSuperalgebra build_magic(const Factor& a, const Factor& b) { return MagicBuilder(a, b).build(); }

// d_{2,1} on its own, graded by e1, e2, e3.
inline LieSuperalgebra build_d21() {
    Factor f = build_factor("S42");
    const auto& T = f.tri;
    const std::size_t m = T.basis.size(), n = f.s.dim;
    std::vector<Vec> flats;
    for (auto& t : T.basis) flats.push_back(t.flat());
    Coordinatizer co(flats, 3 * n * n);
    LieSuperalgebra g;
    g.name = "d21";
    g.dim = m;
    for (std::size_t k = 0; k < m; ++k) {
        g.parity.push_back(T.basis[k].parity);
        g.labels.push_back(T.labels[k]);
        g.blocks.push_back(T.basis[k].parity ? "V(x)V(x)V" : "sp+sp+sp");
        g.deg.push_back(f.tri_deg[k]);
    }
    g.lattice = f.lattice;
    g.cartan = f.cartan;
    g.R = f.R;
    ScBuilder sb(m, g.parity);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            auto c = co.coords(tri_bracket(T.basis[i], T.basis[j]).flat());
            if (!c) throw std::logic_error("build_d21: bracket outside the model");
            sb.set(i, j, *c);
        }
    sb.finalize(g);
    return g;
}

}  // namespace mss

namespace mss {

namespace detail {

inline Mat mat2(int a, int b, int c, int d) { return Mat::from_ints({{a, b}, {c, d}}); }

// x0, x1, x2 in Mat_2(GF(3)) with x_i^2 = -1 and x_i x_{i+1} = -x_{i+1} x_i = x_{i+2};
// first solution in a fixed enumeration order.
inline std::array<Mat, 3> quaternion_units() {
    const Mat minus_one = F3(-1) * Mat::identity(2);
    std::vector<Mat> sq;
    for (int k = 0; k < 81; ++k) {
        Mat m = mat2(k % 3, (k / 3) % 3, (k / 9) % 3, (k / 27) % 3);
        if (m * m == minus_one) sq.push_back(m);
    }
    for (auto& x0 : sq)
        for (auto& x1 : sq) {
            Mat x2 = x0 * x1;
            if (x1 * x0 != F3(-1) * x2 || x2 * x2 != minus_one) continue;
            if (x1 * x2 != x0 || x2 * x0 != x1) continue;
            return {x0, x1, x2};
        }
    throw std::logic_error("quaternion_units: no solution");
}

// Coordinates (c, c0, c1, c2) of a 2x2 matrix in the basis 1, x0, x1, x2.
inline std::array<F3, 4> quaternion_coords(const Mat& m, const std::array<Mat, 3>& x) {
    std::vector<Vec> basis{Mat::identity(2).a, x[0].a, x[1].a, x[2].a};
    auto c = Coordinatizer(basis, 4).coords(m.a);
    if (!c) throw std::logic_error("quaternion_coords: not in span");
    return {(*c)[0], (*c)[1], (*c)[2], (*c)[3]};
}

}  // namespace detail

// Re-expresses g(S12,S12) or g(S1,S12) as
//   (sp(V1) + sp(V2) + sl2) + V1 (x) V2 (x) sl2  |  (V1 + V2) (x) gl2
// graded by e1, e2, e, d (e1 and V1 absent for S1). sl2 is identified with
// span{iota_i(1 (x) 1)} via iota_i(1 (x) 1) -> -x_i, and gl2 with the
// quaternions 1, x0, x1, x2.
inline LieSuperalgebra regrade_b12_pair(const LieSuperalgebra& g) {
    const bool with_v1 = g.name == "S12S12";
    if (!with_v1 && g.name != "S1S12") throw std::invalid_argument("regrade_b12_pair: unsupported entry " + g.name);
    std::map<std::string, std::size_t> at;
    for (std::size_t i = 0; i < g.dim; ++i) at[g.labels[i]] = i;
    auto idx = [&](const std::string& l) {
        auto it = at.find(l);
        if (it == at.end()) throw std::logic_error("regrade_b12_pair: missing basis label " + l);
        return it->second;
    };
    auto iota = [&](int i, const std::string& a, const std::string& b) {
        return idx("i" + std::to_string(i) + "(" + a + "|" + b + ")");
    };
    const auto x = detail::quaternion_units();
    const char* uv[2] = {"v", "w"};
    const int ud[2] = {-1, 1};

    BasisChange bc;
    const std::size_t nl = with_v1 ? 4 : 3;
    const std::size_t L_e1 = 0, L_e2 = with_v1 ? 1 : 0, L_e = nl - 2, L_d = nl - 1;
    bc.lattice = with_v1 ? std::vector<std::string>{"e1", "e2", "e", "d"} : std::vector<std::string>{"e2", "e", "d"};
    auto push = [&](Vec v, int par, std::string label, std::string block, Degree d) {
        bc.basis.push_back(std::move(v));
        bc.parity.push_back(par);
        bc.labels.push_back(std::move(label));
        bc.blocks.push_back(std::move(block));
        bc.deg.push_back(std::move(d));
    };
    auto deg = [&](std::initializer_list<std::pair<std::size_t, int>> parts) {
        Degree d(nl, 0);
        for (auto [k, c] : parts) d[k] += c;
        return d;
    };
    const char* gam[3] = {"g(w,w)", "g(v,w)", "g(v,v)"};
    const int gd[3] = {2, 0, -2};
    if (with_v1)
        for (int k = 0; k < 3; ++k)
            push(unit(g.dim, idx(std::string("T[") + gam[k] + "]")), 0, std::string("sp1:") + gam[k], "sp(V1)",
                 deg({{L_e1, gd[k]}}));
    const std::string right_tri = "T'[";
    for (int k = 0; k < 3; ++k)
        push(unit(g.dim, idx(right_tri + gam[k] + "]")), 0, std::string("sp2:") + gam[k], "sp(V2)",
             deg({{L_e2, gd[k]}}));

    // sl2: h = E11 - E22, e = E12, f = E21
    const Mat sl2[3] = {detail::mat2(1, 0, 0, -1), detail::mat2(0, 1, 0, 0), detail::mat2(0, 0, 1, 0)};
    const char* sl2n[3] = {"h", "e", "f"};
    const int sl2d[3] = {0, 2, -2};
    auto q0_vec = [&](const Mat& p, auto&& image) {
        auto c = detail::quaternion_coords(p, x);
        if (!c[0].zero()) throw std::logic_error("regrade_b12_pair: sl2 element with trace");
        Vec v(g.dim);
        for (int i = 0; i < 3; ++i) axpy(v, c[1 + i], image(i));
        return v;
    };
    const std::string A1 = "1";  // the unit of S12, or the basis vector of S1
    for (int k = 0; k < 3; ++k)
        push(q0_vec(sl2[k], [&](int i) { return F3(-1) * unit(g.dim, iota(i, A1, "1")); }), 0, sl2n[k], "sl2",
             deg({{L_e, sl2d[k]}}));
    if (with_v1)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int k = 0; k < 3; ++k)
                    push(q0_vec(sl2[k], [&](int i) { return unit(g.dim, iota(i, uv[a], uv[b])); }), 0,
                         std::string(uv[a]) + "1." + uv[b] + "2." + sl2n[k], "V1.V2.sl2",
                         deg({{L_e1, ud[a]}, {L_e2, ud[b]}, {L_e, sl2d[k]}}));

    // gl2 basis E11, E21, E12, E22 with degrees e+d, -e+d, e-d, -e-d
    const Mat gl2[4] = {detail::mat2(1, 0, 0, 0), detail::mat2(0, 0, 1, 0), detail::mat2(0, 1, 0, 0),
                        detail::mat2(0, 0, 0, 1)};
    const char* gl2n[4] = {"E11", "E21", "E12", "E22"};
    const int gle[4] = {1, -1, 1, -1}, gldd[4] = {1, 1, -1, -1};
    auto odd_vec = [&](const Mat& q, std::size_t tri_u, F3 tri_sign, auto&& image) {
        auto c = detail::quaternion_coords(q, x);
        Vec v = (tri_sign * c[0]) * unit(g.dim, tri_u);
        for (int i = 0; i < 3; ++i) axpy(v, c[1 + i], image(i));
        return v;
    };
    if (with_v1)
        for (int a = 0; a < 2; ++a)
            for (int k = 0; k < 4; ++k)
                push(odd_vec(gl2[k], idx(std::string("T[") + uv[a] + "]"), 1,
                             [&](int i) { return F3(-1) * unit(g.dim, iota(i, uv[a], "1")); }),
                     1, std::string(uv[a]) + "1." + gl2n[k], "V1.gl2",
                     deg({{L_e1, ud[a]}, {L_e, gle[k]}, {L_d, gldd[k]}}));
    for (int b = 0; b < 2; ++b)
        for (int k = 0; k < 4; ++k)
            push(odd_vec(gl2[k], idx(right_tri + uv[b] + "]"), -1,
                         [&](int i) { return unit(g.dim, iota(i, A1, uv[b])); }),
                 1, std::string(uv[b]) + "2." + gl2n[k], "V2.gl2",
                 deg({{L_e2, ud[b]}, {L_e, gle[k]}, {L_d, gldd[k]}}));

    // Cartan: h1, h2 (gamma_{v,w}) and h
    if (with_v1) bc.cartan = {1, 4, 6};
    else bc.cartan = {1, 3};
    bc.R.assign(nl, std::vector<int>(bc.cartan.size(), 0));
    for (std::size_t j = 0; j < bc.cartan.size(); ++j) bc.R[j][j] = 1;  // d pairs to zero
    return change_basis(g, bc, g.name);
}

}  // namespace mss
