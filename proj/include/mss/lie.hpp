#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace mss {

struct Term {
    std::uint32_t k;
    F3 c;
};

using Degree = std::vector<int>;

inline Degree operator+(Degree a, const Degree& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline Degree operator-(Degree a) {
    for (auto& x : a) x = -x;
    return a;
}
inline bool is_zero_degree(const Degree& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

// Lie superalgebra on a fixed basis. Structure constants are held in CSR form
// over ordered pairs (i,j); only i <= j is supplied by builders, the rest follows
// from super-anticommutativity.
struct LieSuperalgebra {
    std::string name;
    std::size_t dim = 0;
    std::vector<int> parity;
    std::vector<std::string> labels;
    std::vector<std::string> blocks;
    std::vector<Degree> deg;                 // empty tuples when ungraded
    std::vector<std::string> lattice;        // names of lattice generators
    std::vector<std::size_t> cartan;         // basis indices spanning the chosen Cartan subalgebra
    std::vector<std::vector<int>> R;         // R[g][j] = R(generator g)(cartan j)

    std::vector<std::uint32_t> off;  // size dim*dim + 1
    std::vector<Term> terms;

    std::span<const Term> sc(std::size_t i, std::size_t j) const {
        std::size_t p = i * dim + j;
        return {terms.data() + off[p], terms.data() + off[p + 1]};
    }

    std::size_t rank() const { return lattice.size(); }
    std::size_t even_dim() const {
        std::size_t c = 0;
        for (int p : parity) c += (p == 0);
        return c;
    }
    std::size_t odd_dim() const { return dim - even_dim(); }
};

struct Dims {
    std::size_t even = 0, odd = 0;
    friend bool operator==(const Dims&, const Dims&) = default;
};
inline Dims dims(const LieSuperalgebra& g) { return {g.even_dim(), g.odd_dim()}; }

inline std::vector<Term> sparse(const Vec& v) {
    std::vector<Term> t;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].zero()) t.push_back({static_cast<std::uint32_t>(k), v[k]});
    return t;
}

// Collects upper-triangular brackets and finalizes the CSR table.
class ScBuilder {
public:
    explicit ScBuilder(std::size_t dim, std::vector<int> parity)
        : dim_(dim), parity_(std::move(parity)), upper_(dim * dim) {}

    void set(std::size_t i, std::size_t j, const Vec& v) {
        if (i > j) throw std::invalid_argument("ScBuilder::set expects i <= j");
        upper_[i * dim_ + j] = sparse(v);
    }

    void finalize(LieSuperalgebra& g) const {
        g.off.assign(dim_ * dim_ + 1, 0);
        g.terms.clear();
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                g.off[i * dim_ + j] = static_cast<std::uint32_t>(g.terms.size());
                if (i <= j) {
                    for (auto t : upper_[i * dim_ + j]) g.terms.push_back(t);
                } else {
                    // [e_i,e_j] = -(-1)^{|i||j|} [e_j,e_i]
                    F3 s = -sign(parity_[i] * parity_[j]);
                    for (auto t : upper_[j * dim_ + i]) g.terms.push_back({t.k, s * t.c});
                }
            }
        g.off[dim_ * dim_] = static_cast<std::uint32_t>(g.terms.size());
    }

private:
    std::size_t dim_;
    std::vector<int> parity_;
    std::vector<std::vector<Term>> upper_;
};

inline Vec basis_bracket(const LieSuperalgebra& g, std::size_t i, std::size_t j) {
    Vec r(g.dim);
    for (auto t : g.sc(i, j)) r[t.k] += t.c;
    return r;
}

inline Vec bracket_eval(const LieSuperalgebra& g, const Vec& x, const Vec& y) {
    if (x.size() != g.dim || y.size() != g.dim) throw std::invalid_argument("bracket_eval: dimension mismatch");
    Vec r(g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) {
        if (x[i].zero()) continue;
        for (std::size_t j = 0; j < g.dim; ++j) {
            if (y[j].zero()) continue;
            F3 c = x[i] * y[j];
            for (auto t : g.sc(i, j)) r[t.k] += c * t.c;
        }
    }
    return r;
}

// ad(e_i) applied to v
inline Vec ad_basis(const LieSuperalgebra& g, std::size_t i, const Vec& v) {
    Vec r(g.dim);
    for (std::size_t j = 0; j < g.dim; ++j) {
        if (v[j].zero()) continue;
        for (auto t : g.sc(i, j)) r[t.k] += v[j] * t.c;
    }
    return r;
}

inline Mat ad_matrix(const LieSuperalgebra& g, const Vec& x) {
    Mat m(g.dim, g.dim);
    for (std::size_t j = 0; j < g.dim; ++j) m.set_col(j, bracket_eval(g, x, unit(g.dim, j)));
    return m;
}

// Parity of a vector, or -1 when it mixes parities; zero counts as even.
inline int vector_parity(const LieSuperalgebra& g, const Vec& v) {
    int p = -2;
    for (std::size_t i = 0; i < g.dim; ++i) {
        if (v[i].zero()) continue;
        if (p == -2) p = g.parity[i];
        else if (p != g.parity[i]) return -1;
    }
    return p == -2 ? 0 : p;
}

struct ParityViolation {
    std::size_t i, j, k;
};

inline std::vector<ParityViolation> check_parity_additivity(const LieSuperalgebra& g) {
    std::vector<ParityViolation> out;
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            for (auto t : g.sc(i, j))
                if (g.parity[t.k] != ((g.parity[i] + g.parity[j]) & 1)) out.push_back({i, j, t.k});
    return out;
}

inline std::size_t count_anticommutativity_violations(const LieSuperalgebra& g) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = i; j < g.dim; ++j) {
            Vec a = basis_bracket(g, i, j), b = basis_bracket(g, j, i);
            F3 s = sign(g.parity[i] * g.parity[j]);
            if (a + s * b != Vec(g.dim)) ++bad;
        }
    return bad;
}

namespace detail {

// Dense mod-3 accumulator that remembers which slots were touched.
class Accumulator {
public:
    explicit Accumulator(std::size_t n) : acc_(n, 0) {}
    void add(std::uint32_t k, int c) {
        if (acc_[k] == 0) touched_.push_back(k);
        acc_[k] += c;
    }
    bool zero_and_reset() {
        bool z = true;
        for (auto k : touched_) {
            if (acc_[k] % 3 != 0) z = false;
            acc_[k] = 0;
        }
        touched_.clear();
        return z;
    }

private:
    std::vector<int> acc_;
    std::vector<std::uint32_t> touched_;
};

inline void add_double_bracket(const LieSuperalgebra& g, Accumulator& acc, std::size_t x, std::size_t y,
                               std::size_t z, F3 s) {
    for (auto t : g.sc(x, y)) {
        F3 c = s * t.c;
        for (auto u : g.sc(t.k, z)) acc.add(u.k, (c * u.c).v);
    }
}

}  // namespace detail

// (-1)^{|x||z|}[[x,y],z] + (-1)^{|y||x|}[[y,z],x] + (-1)^{|z||y|}[[z,x],y] == 0 ?
inline bool jacobi_holds(const LieSuperalgebra& g, detail::Accumulator& acc, std::size_t x, std::size_t y,
                         std::size_t z) {
    const auto& p = g.parity;
    detail::add_double_bracket(g, acc, x, y, z, sign(p[x] * p[z]));
    detail::add_double_bracket(g, acc, y, z, x, sign(p[y] * p[x]));
    detail::add_double_bracket(g, acc, z, x, y, sign(p[z] * p[y]));
    return acc.zero_and_reset();
}

struct JacobiReport {
    std::uint64_t triples = 0;
    std::uint64_t violations = 0;
    std::vector<std::array<std::size_t, 3>> witnesses;  // first few
};

inline JacobiReport verify_super_jacobi_exhaustive(const LieSuperalgebra& g) {
    JacobiReport r;
    detail::Accumulator acc(g.dim);
    for (std::size_t x = 0; x < g.dim; ++x)
        for (std::size_t y = 0; y < g.dim; ++y)
            for (std::size_t z = 0; z < g.dim; ++z) {
                ++r.triples;
                if (!jacobi_holds(g, acc, x, y, z)) {
                    ++r.violations;
                    if (r.witnesses.size() < 8) r.witnesses.push_back({x, y, z});
                }
            }
    return r;
}

inline JacobiReport verify_super_jacobi_sampled(const LieSuperalgebra& g, std::uint64_t n, std::uint64_t seed) {
    JacobiReport r;
    if (g.dim == 0) return r;
    detail::Accumulator acc(g.dim);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, g.dim - 1);
    for (std::uint64_t s = 0; s < n; ++s) {
        std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
        ++r.triples;
        if (!jacobi_holds(g, acc, x, y, z)) {
            ++r.violations;
            if (r.witnesses.size() < 8) r.witnesses.push_back({x, y, z});
        }
    }
    return r;
}

// Flips the sign of one stored bracket (and its mirror), for negative controls.
inline LieSuperalgebra corrupt_sign(LieSuperalgebra g, std::size_t i, std::size_t j) {
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        std::size_t p = a * g.dim + b;
        for (std::size_t t = g.off[p]; t < g.off[p + 1]; ++t) g.terms[t].c = -g.terms[t].c;
        if (a == b) break;
    }
    return g;
}

struct BasisChange {
    std::vector<Vec> basis;  // new basis vectors in old coordinates
    std::vector<int> parity;
    std::vector<std::string> labels, blocks;
    std::vector<Degree> deg;
    std::vector<std::string> lattice;
    std::vector<std::size_t> cartan;
    std::vector<std::vector<int>> R;
};

// Rewrites the structure constants of g in a new basis.
inline LieSuperalgebra change_basis(const LieSuperalgebra& g, const BasisChange& bc, std::string name) {
    if (bc.basis.size() != g.dim) throw std::invalid_argument("change_basis: need a full basis");
    Coordinatizer co(bc.basis, g.dim);
    LieSuperalgebra h;
    h.name = std::move(name);
    h.dim = g.dim;
    h.parity = bc.parity;
    h.labels = bc.labels;
    h.blocks = bc.blocks;
    h.deg = bc.deg;
    h.lattice = bc.lattice;
    h.cartan = bc.cartan;
    h.R = bc.R;
    for (std::size_t i = 0; i < g.dim; ++i)
        if (vector_parity(g, bc.basis[i]) != bc.parity[i])
            throw std::invalid_argument("change_basis: basis vector " + bc.labels[i] + " has wrong parity");
    ScBuilder sb(g.dim, h.parity);
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = i; j < g.dim; ++j) {
            auto c = co.coords(bracket_eval(g, bc.basis[i], bc.basis[j]));
            if (!c) throw std::logic_error("change_basis: bracket outside span");
            sb.set(i, j, *c);
        }
    sb.finalize(h);
    return h;
}

// Subspace spanned by all brackets [e_i,e_j].
inline Subspace derived_subalgebra(const LieSuperalgebra& g) {
    Subspace s(g.dim);
    for (std::size_t i = 0; i < g.dim && s.dim() < g.dim; ++i)
        for (std::size_t j = i; j < g.dim; ++j) {
            auto sc = g.sc(i, j);
            if (sc.empty()) continue;
            Vec v(g.dim);
            for (auto t : sc) v[t.k] += t.c;
            s.add(v);
        }
    return s;
}

// Center: vectors killed by every ad(e_i). The joint kernel of the Cartan
// elements is computed first, which keeps the final system small.
inline std::vector<Vec> center(const LieSuperalgebra& g) {
    std::vector<Vec> cand;
    if (g.cartan.empty()) {
        for (std::size_t i = 0; i < g.dim; ++i) cand.push_back(unit(g.dim, i));
    } else {
        std::vector<Vec> rows;
        for (auto h : g.cartan) {
            Mat a = ad_matrix(g, unit(g.dim, h));
            for (std::size_t r = 0; r < g.dim; ++r) {
                Vec row = a.row(r);
                if (!is_zero(row)) rows.push_back(row);
            }
        }
        cand = rows.empty() ? std::vector<Vec>{} : nullspace(Mat::from_rows(rows, g.dim));
        if (rows.empty())
            for (std::size_t i = 0; i < g.dim; ++i) cand.push_back(unit(g.dim, i));
    }
    if (cand.empty()) return {};
    // unknown coefficients c over cand; constraint sum_k c_k [cand_k, e_i] = 0
    std::size_t m = cand.size();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < g.dim; ++i) {
        std::vector<Vec> imgs;
        for (auto& c : cand) imgs.push_back(bracket_eval(g, c, unit(g.dim, i)));
        for (std::size_t r = 0; r < g.dim; ++r) {
            Vec row(m);
            for (std::size_t k = 0; k < m; ++k) row[k] = imgs[k][r];
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    std::vector<Vec> coeffs;
    if (rows.empty()) {
        for (std::size_t k = 0; k < m; ++k) coeffs.push_back(unit(m, k));
    } else {
        coeffs = nullspace(Mat::from_rows(rows, m));
    }
    std::vector<Vec> out;
    for (auto& c : coeffs) {
        Vec z(g.dim);
        for (std::size_t k = 0; k < m; ++k) axpy(z, c[k], cand[k]);
        out.push_back(std::move(z));
    }
    return out;
}

// Smallest subalgebra containing the given vectors.
inline Subspace generated_subalgebra(const LieSuperalgebra& g, const std::vector<Vec>& gens) {
    std::vector<LinearOp> ops;
    for (auto& x : gens) ops.push_back([&g, x](const Vec& v) { return bracket_eval(g, x, v); });
    return span_closure(gens, ops, g.dim);
}

// Ideal closure through generic span_closure under all ad(e_i).
inline Subspace ideal_closure(const LieSuperalgebra& g, const Vec& seed) {
    std::vector<LinearOp> ops;
    for (std::size_t i = 0; i < g.dim; ++i) ops.push_back([&g, i](const Vec& v) { return ad_basis(g, i, v); });
    return span_closure({seed}, ops, g.dim);
}

}  // namespace mss
