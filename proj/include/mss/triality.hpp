#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "composition.hpp"

namespace mss {

struct TrialityElement {
    std::array<Mat, 3> d;
    int parity = 0;

    friend bool operator==(const TrialityElement& a, const TrialityElement& b) {
        return a.d == b.d && (a.parity == b.parity || a.is_zero());
    }
    bool is_zero() const { return d[0].is_zero() && d[1].is_zero() && d[2].is_zero(); }

    Vec flat() const {
        Vec v;
        for (auto& m : d) v.insert(v.end(), m.a.begin(), m.a.end());
        return v;
    }
    static TrialityElement from_flat(const Vec& v, std::size_t n, int parity) {
        TrialityElement t;
        t.parity = parity;
        for (int i = 0; i < 3; ++i) {
            t.d[i] = Mat(n, n);
            std::copy(v.begin() + i * n * n, v.begin() + (i + 1) * n * n, t.d[i].a.begin());
        }
        return t;
    }
};

inline TrialityElement operator+(TrialityElement a, const TrialityElement& b) {
    for (int i = 0; i < 3; ++i) a.d[i] = a.d[i] + b.d[i];
    return a;
}
inline TrialityElement operator*(F3 s, TrialityElement a) {
    for (auto& m : a.d) m = s * m;
    return a;
}

inline TrialityElement theta_raw(const TrialityElement& t) {
    return TrialityElement{{t.d[2], t.d[0], t.d[1]}, t.parity};
}

// Componentwise supercommutator.
inline TrialityElement tri_bracket(const TrialityElement& a, const TrialityElement& b) {
    TrialityElement r;
    r.parity = (a.parity + b.parity) & 1;
    F3 s = sign(a.parity * b.parity);
    for (int i = 0; i < 3; ++i) r.d[i] = a.d[i] * b.d[i] - s * (b.d[i] * a.d[i]);
    return r;
}

inline std::optional<int> vector_parity(const CompositionSuperalgebra& s, const Vec& x) {
    std::optional<int> p;
    for (std::size_t i = 0; i < s.dim; ++i) {
        if (x[i].zero()) continue;
        if (p && *p != s.parity[i]) return std::nullopt;
        p = s.parity[i];
    }
    return p ? p : std::optional<int>(0);
}

inline int homogeneous_parity(const CompositionSuperalgebra& s, const Vec& x) {
    auto p = vector_parity(s, x);
    if (!p) throw std::invalid_argument("non-homogeneous element");
    return *p;
}

// Matrix of z -> e_i * z (left) or z -> e_i-free product maps for a general x.
inline Mat left_mult(const CompositionSuperalgebra& s, const Vec& x) {
    Mat m(s.dim, s.dim);
    for (std::size_t z = 0; z < s.dim; ++z) m.set_col(z, product(s, x, unit(s.dim, z)));
    return m;
}

// r_x(z) = (-1)^{|x||z|} z * x
inline Mat right_mult_signed(const CompositionSuperalgebra& s, const Vec& x) {
    int px = homogeneous_parity(s, x);
    Mat m(s.dim, s.dim);
    for (std::size_t z = 0; z < s.dim; ++z)
        m.set_col(z, sign(px * s.parity[z]) * product(s, unit(s.dim, z), x));
    return m;
}

// sigma_{x,y}(z) = (-1)^{|y||z|} b(x,z) y - (-1)^{|x|(|y|+|z|)} b(y,z) x
inline Mat sigma_op(const CompositionSuperalgebra& s, const Vec& x, const Vec& y) {
    int px = homogeneous_parity(s, x), py = homogeneous_parity(s, y);
    Mat m(s.dim, s.dim);
    for (std::size_t z = 0; z < s.dim; ++z) {
        Vec ez = unit(s.dim, z);
        int pz = s.parity[z];
        Vec col = (sign(py * pz) * s.b(x, ez)) * y - (sign(px * (py + pz)) * s.b(y, ez)) * x;
        m.set_col(z, col);
    }
    return m;
}

// gamma_{x,y}(z) = <x|z> y + <y|z> x on the plane V (coordinates in the basis v, w).
inline Mat gamma_op(const Vec& x, const Vec& y) {
    auto form = [](const Vec& a, const Vec& b) {
        F3 s;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s += a[i] * symp(i, j) * b[j];
        return s;
    };
    Mat m(2, 2);
    for (int z = 0; z < 2; ++z) m.set_col(z, form(x, unit(2, z)) * y + form(y, unit(2, z)) * x);
    return m;
}
inline Mat gamma_basis(int a, int b) { return gamma_op(unit(2, a), unit(2, b)); }

inline bool in_osp(const CompositionSuperalgebra& s, const Mat& d, int parity) {
    for (std::size_t x = 0; x < s.dim; ++x)
        for (std::size_t y = 0; y < s.dim; ++y) {
            if (!d(x, y).zero() && s.parity[x] != ((s.parity[y] + parity) & 1)) return false;
            Vec ex = unit(s.dim, x), ey = unit(s.dim, y);
            if (s.b(d * ex, ey) + sign(parity * s.parity[x]) * s.b(ex, d * ey) != F3(0)) return false;
        }
    return true;
}

// d0(x*y) = d1(x)*y + (-1)^{|d||x|} x*d2(y) on basis pairs, and each d_i in osp.
inline bool satisfies_triality(const CompositionSuperalgebra& s, const TrialityElement& t) {
    for (int i = 0; i < 3; ++i)
        if (!in_osp(s, t.d[i], t.parity)) return false;
    for (std::size_t x = 0; x < s.dim; ++x)
        for (std::size_t y = 0; y < s.dim; ++y) {
            Vec ex = unit(s.dim, x), ey = unit(s.dim, y);
            Vec lhs = t.d[0] * s.prod(x, y);
            Vec rhs = product(s, t.d[1] * ex, ey) + sign(t.parity * s.parity[x]) * product(s, ex, t.d[2] * ey);
            if (lhs != rhs) return false;
        }
    return true;
}

inline TrialityElement theta_apply(const CompositionSuperalgebra& s, const TrialityElement& t) {
    if (!satisfies_triality(s, t)) throw std::invalid_argument("theta_apply: not a triality element");
    return theta_raw(t);
}

// Entry (i, z, x) is the coefficient of e_z in d_i(e_x).
using TriMask = std::function<bool(int i, std::size_t z, std::size_t x)>;

// Linear solve for the parity-p part of tri(S), optionally restricted by a mask.
// With fix_d0_zero the first component is forced to vanish.
inline std::vector<TrialityElement> tri_solve_parity(const CompositionSuperalgebra& s, int p,
                                                     const TriMask& mask = nullptr,
                                                     bool fix_d0_zero = false) {
    const std::size_t n = s.dim, nn = n * n, nu = 3 * nn;
    auto idx = [&](int i, std::size_t z, std::size_t x) { return i * nn + z * n + x; };
    std::vector<Vec> rows;
    for (int i = 0; i < 3; ++i)
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t x = 0; x < n; ++x) {
                bool allowed = s.parity[z] == ((s.parity[x] + p) & 1);
                if (allowed && mask) allowed = mask(i, z, x);
                if (allowed && fix_d0_zero && i == 0) allowed = false;
                if (!allowed) rows.push_back(unit(nu, idx(i, z, x)));
            }
    // osp: sum_z d(z,x) b(z,y) + (-1)^{p|x|} sum_z b(x,z) d(z,y) = 0
    for (int i = 0; i < 3; ++i)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Vec r(nu);
                F3 sg = sign(p * s.parity[x]);
                for (std::size_t z = 0; z < n; ++z) {
                    r[idx(i, z, x)] += s.bform(z, y);
                    r[idx(i, z, y)] += sg * s.bform(x, z);
                }
                if (!is_zero(r)) rows.push_back(std::move(r));
            }
    // triality, one equation per output coordinate w
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Vec& xy = s.prod(x, y);
            F3 sg = sign(p * s.parity[x]);
            for (std::size_t w = 0; w < n; ++w) {
                Vec r(nu);
                for (std::size_t u = 0; u < n; ++u)
                    if (!xy[u].zero()) r[idx(0, w, u)] += xy[u];
                for (std::size_t z = 0; z < n; ++z) {
                    F3 a = s.prod(z, y)[w];
                    if (!a.zero()) r[idx(1, z, x)] -= a;
                    F3 c = s.prod(x, z)[w];
                    if (!c.zero()) r[idx(2, z, y)] -= sg * c;
                }
                if (!is_zero(r)) rows.push_back(std::move(r));
            }
        }
    std::vector<TrialityElement> out;
    for (auto& v : nullspace(Mat::from_rows(rows, nu))) out.push_back(TrialityElement::from_flat(v, n, p));
    return out;
}

inline std::vector<TrialityElement> tri_solve(const CompositionSuperalgebra& s) {
    auto even = tri_solve_parity(s, 0);
    auto odd = tri_solve_parity(s, 1);
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

inline std::vector<Mat> osp_basis(const CompositionSuperalgebra& s, int p) {
    const std::size_t n = s.dim, nn = n * n;
    std::vector<Vec> rows;
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t x = 0; x < n; ++x)
            if (s.parity[z] != ((s.parity[x] + p) & 1)) rows.push_back(unit(nn, z * n + x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vec r(nn);
            F3 sg = sign(p * s.parity[x]);
            for (std::size_t z = 0; z < n; ++z) {
                r[z * n + x] += s.bform(z, y);
                r[z * n + y] += sg * s.bform(x, z);
            }
            rows.push_back(std::move(r));
        }
    std::vector<Mat> out;
    for (auto& v : nullspace(Mat::from_rows(rows, nn))) {
        Mat m(n, n);
        m.a = v;
        out.push_back(std::move(m));
    }
    return out;
}

// t_{x,y} = (sigma_{x,y}, 1/2 b(x,y) - r_x l_y, 1/2 b(x,y) - l_x r_y)
inline TrialityElement t_pair(const CompositionSuperalgebra& s, const Vec& x, const Vec& y) {
    int px = homogeneous_parity(s, x), py = homogeneous_parity(s, y);
    F3 hb = kHalf * s.b(x, y);
    Mat id = Mat::identity(s.dim);
    TrialityElement t;
    t.parity = (px + py) & 1;
    t.d[0] = sigma_op(s, x, y);
    t.d[1] = hb * id - right_mult_signed(s, x) * left_mult(s, y);
    t.d[2] = hb * id - left_mult(s, x) * right_mult_signed(s, y);
    if (!satisfies_triality(s, t)) throw std::logic_error("t_pair: triality check failed in " + s.name);
    return t;
}

enum class TriKind { zero, t2, b01, d21, d21_even, solved };

struct TriModel {
    TriKind kind = TriKind::solved;
    std::vector<TrialityElement> basis;
    std::vector<std::string> labels;

    std::size_t even_dim() const {
        std::size_t c = 0;
        for (auto& t : basis) c += (t.parity == 0);
        return c;
    }
    std::size_t odd_dim() const { return basis.size() - even_dim(); }
};

namespace detail {

// f in d_{2,1}: either (gamma_1, gamma_2, gamma_3) or u1 (x) u2 (x) u3.
struct D21Elem {
    bool odd = false;
    std::array<Mat, 3> g{Mat(2, 2), Mat(2, 2), Mat(2, 2)};
    std::array<int, 3> u{0, 0, 0};
};

inline D21Elem d21_theta_inv(const D21Elem& f, int times) {
    D21Elem r = f;
    for (int t = 0; t < times; ++t) {
        D21Elem s = r;
        // theta^{-1}(g1,g2,g3) = (g2,g3,g1); theta^{-1}(u1 u2 u3) = u2 u3 u1
        s.g = {r.g[1], r.g[2], r.g[0]};
        s.u = {r.u[1], r.u[2], r.u[0]};
        r = s;
    }
    return r;
}

// rho(f) on S42 = (V (x) V) + V, and optionally only its even block.
inline Mat d21_rho(const D21Elem& f, bool even_only, F3 odd_sign = 1) {
    const std::size_t n = even_only ? 4 : 6;
    Mat m(n, n);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            Vec col(n);
            if (!f.odd) {
                for (int a = 0; a < 2; ++a) {
                    col[tens(a, y)] += f.g[0](a, x);
                    col[tens(x, a)] += f.g[1](a, y);
                }
            } else if (!even_only) {
                // x (x) y -> -<u1|x><u2|y> u3
                col[4 + f.u[2]] += -(symp(f.u[0], x) * symp(f.u[1], y)) * odd_sign;
            }
            m.set_col(tens(x, y), col);
        }
    if (!even_only)
        for (int u = 0; u < 2; ++u) {
            Vec col(n);
            if (!f.odd) {
                for (int a = 0; a < 2; ++a) col[4 + a] += f.g[2](a, u);
            } else {
                // u -> <u3|u> u1 (x) u2
                col[tens(f.u[0], f.u[1])] += symp(f.u[2], u);
            }
            m.set_col(4 + u, col);
        }
    return m;
}

inline TrialityElement d21_triple(const D21Elem& f, bool even_only, F3 odd_sign = 1) {
    TrialityElement t;
    t.parity = f.odd ? 1 : 0;
    for (int i = 0; i < 3; ++i) t.d[i] = d21_rho(d21_theta_inv(f, i), even_only, odd_sign);
    return t;
}

inline std::vector<std::pair<D21Elem, std::string>> d21_basis(bool even_only) {
    std::vector<std::pair<D21Elem, std::string>> out;
    const int gam[3][2] = {{1, 1}, {0, 1}, {0, 0}};  // gamma_{w,w}, gamma_{v,w}, gamma_{v,v}
    for (int slot = 0; slot < 3; ++slot)
        for (auto& g : gam) {
            D21Elem f;
            f.g[slot] = gamma_basis(g[0], g[1]);
            out.push_back({f, "g" + std::to_string(slot + 1) + "(" + symp_label(g[0]) + "," + symp_label(g[1]) + ")"});
        }
    if (!even_only)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    D21Elem f;
                    f.odd = true;
                    f.u = {a, b, c};
                    out.push_back({f, std::string(symp_label(a)) + "." + symp_label(b) + "." + symp_label(c)});
                }
    return out;
}

}  // namespace detail

inline TriModel tri_model(const CompositionSuperalgebra& s) {
    TriModel m;
    if (s.name == "S1") {
        m.kind = TriKind::zero;
    } else if (s.name == "S2") {
        m.kind = TriKind::t2;
        Mat phi = sigma_op(s, unit(2, 1), unit(2, 0));
        Mat z(2, 2);
        m.basis = {TrialityElement{{phi, -1 * phi, z}, 0}, TrialityElement{{z, phi, -1 * phi}, 0}};
        m.labels = {"t1", "t2"};
    } else if (s.name == "S12") {
        m.kind = TriKind::b01;
        const int gam[3][2] = {{1, 1}, {0, 1}, {0, 0}};
        for (auto& g : gam) {
            Mat d(3, 3), gm = gamma_basis(g[0], g[1]);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) d(1 + i, 1 + j) = gm(i, j);
            m.basis.push_back({{d, d, d}, 0});
            m.labels.push_back(std::string("g(") + symp_label(g[0]) + "," + symp_label(g[1]) + ")");
        }
        for (int u = 0; u < 2; ++u) {
            Mat d = sigma_op(s, unit(3, 0), unit(3, 1 + u));
            m.basis.push_back({{d, d, d}, 1});
            m.labels.push_back(symp_label(u));
        }
    } else if (s.name == "S42" || s.name == "S4") {
        bool even_only = s.name == "S4";
        m.kind = even_only ? TriKind::d21_even : TriKind::d21;
        for (auto& [f, label] : detail::d21_basis(even_only)) {
            m.basis.push_back(detail::d21_triple(f, even_only));
            m.labels.push_back(label);
        }
    } else {
        throw std::invalid_argument("tri_model: no labeled model for " + s.name);
    }
    return m;
}

inline bool span_equal(const std::vector<TrialityElement>& a, const std::vector<TrialityElement>& b,
                       std::size_t n) {
    std::vector<Vec> va, vb, all;
    for (auto& t : a) va.push_back(t.flat());
    for (auto& t : b) vb.push_back(t.flat());
    all = va;
    all.insert(all.end(), vb.begin(), vb.end());
    std::size_t m = 3 * n * n;
    std::size_t ra = rank(va, m), rb = rank(vb, m), r = rank(all, m);
    return ra == rb && ra == r;
}

struct TrialityModelViolation {
    std::size_t f, x, y;
};

// rho(f)(x.y) = rho(theta^-1 f)(x).y + (-1)^{|f||x|} x.rho(theta^-2 f)(y), on S42.
// odd_sign != 1 corrupts the odd part of rho (negative control).
inline std::vector<TrialityModelViolation> verify_triality_model(F3 odd_sign = 1) {
    auto s = build_s42();
    std::vector<TrialityModelViolation> out;
    auto basis = detail::d21_basis(false);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto t = detail::d21_triple(basis[k].first, false, odd_sign);
        for (std::size_t x = 0; x < s.dim; ++x)
            for (std::size_t y = 0; y < s.dim; ++y) {
                Vec ex = unit(s.dim, x), ey = unit(s.dim, y);
                Vec lhs = t.d[0] * s.prod(x, y);
                Vec rhs = product(s, t.d[1] * ex, ey) + sign(t.parity * s.parity[x]) * product(s, ex, t.d[2] * ey);
                if (lhs != rhs) out.push_back({k, x, y});
            }
    }
    return out;
}

struct LocalTriality {
    std::size_t osp_dim[2];
    std::size_t tri_dim[2];
    std::size_t kernel_dim[2];  // solutions with d0 = 0
    bool unique() const {
        return kernel_dim[0] == 0 && kernel_dim[1] == 0 && osp_dim[0] == tri_dim[0] && osp_dim[1] == tri_dim[1];
    }
};

// Each d0 in osp(S) extends to exactly one triality triple.
inline LocalTriality local_triality(const CompositionSuperalgebra& s) {
    LocalTriality r{};
    for (int p = 0; p < 2; ++p) {
        r.osp_dim[p] = osp_basis(s, p).size();
        r.tri_dim[p] = tri_solve_parity(s, p).size();
        r.kernel_dim[p] = tri_solve_parity(s, p, nullptr, true).size();
    }
    return r;
}

}  // namespace mss
