#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lie.hpp"
#include "roots.hpp"

namespace mss {

// A finite-dimensional module given by the matrices of a spanning set of the
// acting algebra, with a weight attached to each coordinate.
struct ModuleRep {
    std::size_t dim = 0;
    std::vector<Mat> action;
    std::vector<Degree> weights;
    std::vector<std::string> labels;  // coordinate names, optional
};

// Odd part of g as a module over the even vectors `acting` (defaults to the even basis).
inline ModuleRep odd_module(const LieSuperalgebra& g, std::optional<std::vector<Vec>> acting = std::nullopt) {
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < g.dim; ++i)
        if (g.parity[i]) odd.push_back(i);
    std::vector<Vec> ev;
    if (acting) {
        ev = *acting;
    } else {
        for (std::size_t i = 0; i < g.dim; ++i)
            if (!g.parity[i]) ev.push_back(unit(g.dim, i));
    }
    ModuleRep m;
    m.dim = odd.size();
    for (auto k : odd) {
        m.weights.push_back(g.deg[k]);
        m.labels.push_back(g.labels[k]);
    }
    for (auto& x : ev) {
        Mat a(m.dim, m.dim);
        for (std::size_t c = 0; c < m.dim; ++c) {
            Vec img = bracket_eval(g, x, unit(g.dim, odd[c]));
            for (std::size_t r = 0; r < m.dim; ++r) a(r, c) = img[odd[r]];
        }
        m.action.push_back(std::move(a));
    }
    return m;
}

// Even part of [g,g] as a list of homogeneous vectors.
inline std::vector<Vec> derived_even_part(const LieSuperalgebra& g) {
    std::vector<Vec> out;
    for (auto& h : derived_homogeneous_basis(g))
        if (vector_parity(g, h.x) == 0) out.push_back(h.x);
    return out;
}

// action([x,y]) = [action(x), action(y)] for all even basis pairs of g.
inline std::size_t representation_violations(const LieSuperalgebra& g, const ModuleRep& m) {
    std::vector<std::size_t> even;
    for (std::size_t i = 0; i < g.dim; ++i)
        if (!g.parity[i]) even.push_back(i);
    if (m.action.size() != even.size()) throw std::invalid_argument("representation_violations: needs the full even basis");
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < even.size(); ++k) pos[even[k]] = k;
    std::size_t bad = 0;
    for (std::size_t a = 0; a < even.size(); ++a)
        for (std::size_t b = a; b < even.size(); ++b) {
            Mat lhs(m.dim, m.dim);
            for (auto t : g.sc(even[a], even[b])) lhs = lhs + t.c * m.action[pos.at(t.k)];
            Mat rhs = m.action[a] * m.action[b] - m.action[b] * m.action[a];
            if (!(lhs - rhs).is_zero()) ++bad;
        }
    return bad;
}

inline Subspace spin(const ModuleRep& m, const std::vector<Vec>& seeds) { return span_closure(seeds, m.action, m.dim); }

// ---------------------------------------------------------------- highest weights

struct WeightVector {
    Vec v;
    Degree weight;
};

// Joint kernel of the given operators (each with m.dim columns), split by weight.
inline std::vector<WeightVector> joint_kernel_by_weight(const ModuleRep& m, const std::vector<Mat>& ops) {
    std::map<Degree, std::vector<std::size_t>> spaces;
    for (std::size_t i = 0; i < m.dim; ++i) spaces[m.weights[i]].push_back(i);
    std::vector<WeightVector> out;
    for (auto& [w, idx] : spaces) {
        std::vector<Vec> rows;
        for (auto& op : ops)
            for (std::size_t r = 0; r < op.rows; ++r) {
                Vec row(idx.size());
                for (std::size_t c = 0; c < idx.size(); ++c) row[c] = op(r, idx[c]);
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
        std::vector<Vec> ker;
        if (rows.empty())
            for (std::size_t c = 0; c < idx.size(); ++c) ker.push_back(unit(idx.size(), c));
        else
            ker = nullspace(Mat::from_rows(rows, idx.size()));
        for (auto& k : ker) {
            Vec v(m.dim);
            for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = k[c];
            out.push_back({std::move(v), w});
        }
    }
    return out;
}

// Vectors killed by every positive even root vector of g (order-dependent).
inline std::vector<WeightVector> highest_weight_vectors(const LieSuperalgebra& g, const ModuleRep& m, const LexOrder& o) {
    std::vector<std::size_t> even;
    for (std::size_t i = 0; i < g.dim; ++i)
        if (!g.parity[i]) even.push_back(i);
    if (m.action.size() != even.size()) throw std::invalid_argument("highest_weight_vectors: needs the full even basis");
    std::vector<Mat> pos;
    for (std::size_t k = 0; k < even.size(); ++k)
        if (o.positive(g.deg[even[k]])) pos.push_back(m.action[k]);
    return joint_kernel_by_weight(m, pos);
}

// ---------------------------------------------------------------- Norton test

enum class NortonVerdict { irreducible, reducible, inconclusive };

inline const char* to_string(NortonVerdict v) {
    switch (v) {
        case NortonVerdict::irreducible: return "irreducible";
        case NortonVerdict::reducible: return "reducible";
        default: return "inconclusive";
    }
}

struct NortonResult {
    NortonVerdict verdict = NortonVerdict::inconclusive;
    std::vector<Vec> witness;  // proper submodule (or, from the dual side, its annihilator)
    bool witness_is_dual = false;
    int attempts = 0;
    std::size_t nullity = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed3;
inline constexpr int kNortonAttempts = 64;

namespace detail {

// Projective points of a small subspace: one representative per line.
inline std::vector<Vec> projective_points(const std::vector<Vec>& basis) {
    std::vector<Vec> out;
    const std::size_t k = basis.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    for (std::size_t c = 1; c < total; ++c) {
        std::size_t x = c;
        std::vector<F3> coeff(k);
        for (std::size_t i = 0; i < k; ++i, x /= 3) coeff[i] = F3(static_cast<int>(x % 3));
        std::size_t lead = 0;
        while (coeff[lead].zero()) ++lead;
        if (coeff[lead] != F3(1)) continue;
        Vec v(basis[0].size());
        for (std::size_t i = 0; i < k; ++i) axpy(v, coeff[i], basis[i]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

// MeatAxe-style test: random elements of the enveloping algebra, kernel spin-ups,
// and the dual check on the transposed action.
inline NortonResult norton_irreducible(const ModuleRep& m, std::uint64_t seed = kDefaultSeed,
                                       int attempts = kNortonAttempts, std::size_t max_nullity = 3) {
    NortonResult res;
    if (m.dim == 0) return res;
    if (m.dim == 1) {
        res.verdict = NortonVerdict::irreducible;
        return res;
    }
    std::mt19937_64 rng(seed);
    auto rnd3 = [&] { return F3(static_cast<int>(rng() % 3)); };
    std::vector<Mat> gens;
    for (auto& a : m.action)
        if (!a.is_zero()) gens.push_back(a);
    if (gens.empty()) {
        res.verdict = NortonVerdict::reducible;
        res.witness = {unit(m.dim, 0)};
        return res;
    }
    std::vector<Mat> gens_t;
    for (auto& a : gens) gens_t.push_back(transpose(a));
    auto combo = [&] {
        Mat x(m.dim, m.dim);
        for (auto& a : gens) x = x + rnd3() * a;
        return x;
    };
    for (int at = 0; at < attempts; ++at) {
        res.attempts = at + 1;
        Mat x = combo(), y = combo();
        Mat base = x * y + x + y;
        for (int shift = 0; shift < 3; ++shift) {
            Mat theta = base;
            for (std::size_t i = 0; i < m.dim; ++i) theta(i, i) += F3(shift);
            auto ker = nullspace(theta);
            if (ker.empty() || ker.size() > max_nullity) continue;
            res.nullity = ker.size();
            for (auto& v : detail::projective_points(ker)) {
                auto s = span_closure({v}, gens, m.dim);
                if (s.dim() < m.dim) {
                    res.verdict = NortonVerdict::reducible;
                    res.witness = s.basis();
                    return res;
                }
            }
            auto kert = nullspace(transpose(theta));
            auto sd = span_closure({kert.front()}, gens_t, m.dim);
            if (sd.dim() < m.dim) {
                res.verdict = NortonVerdict::reducible;
                res.witness = sd.basis();
                res.witness_is_dual = true;
                return res;
            }
            res.verdict = NortonVerdict::irreducible;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------- two copies

struct Decomposition {
    std::vector<Subspace> summands;
    bool direct = false;  // trivial pairwise intersection and sum = whole module
};

// Spins up each seed and checks that the resulting submodules form a direct sum of the module.
inline Decomposition decompose_from(const ModuleRep& m, const std::vector<Vec>& seeds) {
    Decomposition d;
    std::size_t total = 0;
    Subspace sum(m.dim);
    for (auto& s : seeds) {
        d.summands.push_back(spin(m, {s}));
        total += d.summands.back().dim();
        for (auto& v : d.summands.back().basis()) sum.add(v);
    }
    d.direct = sum.dim() == total && total == m.dim;
    return d;
}

// ---------------------------------------------------------------- exterior models

enum class ExteriorKind { sp6_lambda3, sp8_lambda3, sp6_lambda2 };

inline const char* to_string(ExteriorKind k) {
    switch (k) {
        case ExteriorKind::sp6_lambda3: return "sp6_lambda3";
        case ExteriorKind::sp8_lambda3: return "sp8_lambda3";
        default: return "sp6_lambda2";
    }
}

inline std::optional<ExteriorKind> parse_exterior(const std::string& s) {
    for (auto k : {ExteriorKind::sp6_lambda3, ExteriorKind::sp8_lambda3, ExteriorKind::sp6_lambda2})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

// W with symplectic basis a_1..a_n, b_1..b_n, {a_i|b_i} = 1; b_i has weight +d_i.
class SymplecticSpace {
public:
    explicit SymplecticSpace(std::size_t n) : n_(n) {}
    std::size_t n() const { return n_; }
    std::size_t dim() const { return 2 * n_; }
    // coordinates 0..n-1 are a_i, n..2n-1 are b_i
    int form(std::size_t x, std::size_t y) const {
        if (x < n_ && y == x + n_) return 1;
        if (y < n_ && x == y + n_) return -1;
        return 0;
    }
    Degree weight(std::size_t x) const {
        Degree d(n_, 0);
        d[x % n_] = x < n_ ? -1 : 1;
        return d;
    }
    std::string name(std::size_t x) const { return (x < n_ ? "a" : "b") + std::to_string(x % n_ + 1); }
    // gamma_{x,y}(z) = {x|z} y + {y|z} x on basis vectors
    Vec gamma(std::size_t x, std::size_t y, std::size_t z) const {
        Vec out(dim());
        out[y] += F3(form(x, z));
        out[x] += F3(form(y, z));
        return out;
    }

private:
    std::size_t n_;
};

// Exterior power Lambda^k W on sorted index tuples.
class ExteriorPower {
public:
    ExteriorPower(const SymplecticSpace& w, std::size_t k) : w_(w), k_(k) {
        std::vector<std::size_t> t;
        build(t, 0);
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::size_t>& tuple(std::size_t i) const { return basis_[i]; }

    Degree weight(std::size_t i) const {
        Degree d(w_.n(), 0);
        for (auto x : basis_[i]) d = d + w_.weight(x);
        return d;
    }

    // wedge of basis vectors of W in the given order, as a signed basis element
    std::pair<F3, std::optional<std::size_t>> wedge(std::vector<std::size_t> t) const {
        int sgn = 1;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
                if (t[j] > t[j + 1]) {
                    std::swap(t[j], t[j + 1]);
                    sgn = -sgn;
                } else if (t[j] == t[j + 1]) {
                    return {F3(0), std::nullopt};
                }
        for (std::size_t j = 0; j + 1 < t.size(); ++j)
            if (t[j] == t[j + 1]) return {F3(0), std::nullopt};
        return {F3(sgn), index_.at(t)};
    }

    // action of gamma_{x,y} as a derivation
    Mat action(std::size_t x, std::size_t y) const {
        Mat a(dim(), dim());
        for (std::size_t c = 0; c < dim(); ++c) {
            const auto& t = basis_[c];
            for (std::size_t p = 0; p < k_; ++p) {
                Vec img = w_.gamma(x, y, t[p]);
                for (std::size_t z = 0; z < w_.dim(); ++z) {
                    if (img[z].zero()) continue;
                    auto u = t;
                    u[p] = z;
                    auto [s, r] = wedge(u);
                    if (r) a(*r, c) += img[z] * s;
                }
            }
        }
        return a;
    }

    std::vector<Mat> sp_action() const {
        std::vector<Mat> out;
        for (std::size_t x = 0; x < w_.dim(); ++x)
            for (std::size_t y = x; y < w_.dim(); ++y) out.push_back(action(x, y));
        return out;
    }

    // weights of the operators of sp_action(), in the same order
    std::vector<Degree> sp_weights() const {
        std::vector<Degree> out;
        for (std::size_t x = 0; x < w_.dim(); ++x)
            for (std::size_t y = x; y < w_.dim(); ++y) out.push_back(w_.weight(x) + w_.weight(y));
        return out;
    }

private:
    void build(std::vector<std::size_t>& t, std::size_t from) {
        if (t.size() == k_) {
            basis_.push_back(t);
            return;
        }
        for (std::size_t z = from; z < w_.dim(); ++z) {
            t.push_back(z);
            build(t, z + 1);
            t.pop_back();
        }
    }

    const SymplecticSpace& w_;
    std::size_t k_;
    std::vector<std::vector<std::size_t>> basis_;
    std::map<std::vector<std::size_t>, std::size_t> index_;
};

struct ExteriorModel {
    ExteriorKind kind = ExteriorKind::sp6_lambda3;
    std::size_t wedge_dim = 0;
    std::size_t contraction_rank = 0;  // rank of the contraction map
    std::size_t kernel_dim = 0;
    std::size_t sub_dim = 0;           // W~ (sp8) or the line of sum a_i^b_i (sp6 Lambda^2)
    bool sub_in_kernel = false;
    ModuleRep module;                  // kernel or kernel / sub
    std::vector<WeightVector> highest; // joint kernel of the positive root operators
    Degree expected_highest;           // weight of b1^b2^b3, or of b2^b3 for Lambda^2
};

namespace detail {

// Module on K/U where K is spanned by weight vectors of an ambient module and U <= K.
// Both are given by homogeneous bases with weights.
inline ModuleRep quotient_module(const std::vector<Mat>& ambient_ops, const std::vector<WeightVector>& K,
                                 const std::vector<Vec>& U, std::size_t ambient_dim) {
    // basis of K = U-basis followed by complement vectors, chosen per weight
    Subspace acc(ambient_dim);
    std::vector<Vec> full;
    for (auto& u : U) {
        acc.add(u);
        full.push_back(u);
    }
    std::vector<WeightVector> comp;
    for (auto& k : K)
        if (acc.add(k.v)) {
            comp.push_back(k);
            full.push_back(k.v);
        }
    Coordinatizer co(full, ambient_dim);
    ModuleRep m;
    m.dim = comp.size();
    for (auto& c : comp) m.weights.push_back(c.weight);
    for (auto& op : ambient_ops) {
        Mat a(m.dim, m.dim);
        for (std::size_t c = 0; c < m.dim; ++c) {
            auto x = co.coords(op * comp[c].v);
            if (!x) throw std::logic_error("quotient_module: K is not stable");
            for (std::size_t r = 0; r < m.dim; ++r) a(r, c) = (*x)[U.size() + r];
        }
        m.action.push_back(std::move(a));
    }
    return m;
}

}  // namespace detail

inline ExteriorModel exterior_model(ExteriorKind kind) {
    const std::size_t n = kind == ExteriorKind::sp8_lambda3 ? 4 : 3;
    const std::size_t k = kind == ExteriorKind::sp6_lambda2 ? 2 : 3;
    SymplecticSpace W(n);
    ExteriorPower L(W, k);
    ExteriorModel out;
    out.kind = kind;
    out.wedge_dim = L.dim();

    // contraction: Lambda^3 -> W, z1^z2^z3 -> {z1|z2}z3 + {z2|z3}z1 + {z3|z1}z2;  Lambda^2 -> k, z1^z2 -> {z1|z2}
    const std::size_t target = k == 3 ? W.dim() : 1;
    Mat phi(target, L.dim());
    for (std::size_t c = 0; c < L.dim(); ++c) {
        const auto& t = L.tuple(c);
        if (k == 3) {
            for (int r = 0; r < 3; ++r) {
                std::size_t z1 = t[r], z2 = t[(r + 1) % 3], z3 = t[(r + 2) % 3];
                phi(z3, c) += F3(W.form(z1, z2));
            }
        } else {
            phi(0, c) += F3(W.form(t[0], t[1]));
        }
    }
    out.contraction_rank = rank(phi);

    // weight-homogeneous kernel basis
    ModuleRep amb;
    amb.dim = L.dim();
    for (std::size_t i = 0; i < L.dim(); ++i) amb.weights.push_back(L.weight(i));
    auto ker = joint_kernel_by_weight(amb, {phi.rows == 0 ? Mat(1, L.dim()) : phi});
    out.kernel_dim = ker.size();

    std::vector<Vec> sub;
    if (kind == ExteriorKind::sp8_lambda3) {
        // W~ = { sum_i a_i ^ b_i ^ z }
        for (std::size_t z = 0; z < W.dim(); ++z) {
            Vec v(L.dim());
            for (std::size_t i = 0; i < n; ++i) {
                auto [s, r] = L.wedge({i, i + n, z});
                if (r) v[*r] += s;
            }
            sub.push_back(v);
        }
    } else if (kind == ExteriorKind::sp6_lambda2) {
        Vec v(L.dim());
        for (std::size_t i = 0; i < n; ++i) {
            auto [s, r] = L.wedge({i, i + n});
            v[*r] += s;
        }
        sub.push_back(v);
    }
    out.sub_dim = rank(sub, L.dim());
    Subspace K(L.dim());
    for (auto& kv : ker) K.add(kv.v);
    out.sub_in_kernel = std::all_of(sub.begin(), sub.end(), [&](const Vec& v) { return K.contains(v); });

    auto ops = L.sp_action();
    out.module = detail::quotient_module(ops, ker, out.sub_in_kernel ? sub : std::vector<Vec>{}, L.dim());

    // d1 > d2 > d3 for Lambda^3; d3 > d2 > d1 for Lambda^2
    LexOrder o;
    for (std::size_t i = 0; i < n; ++i) o.priority.push_back(k == 3 ? i : n - 1 - i);
    std::vector<Mat> pos;
    auto wts = L.sp_weights();
    for (std::size_t i = 0; i < ops.size(); ++i)
        if (o.positive(wts[i])) pos.push_back(out.module.action[i]);
    out.highest = joint_kernel_by_weight(out.module, pos);
    std::vector<std::size_t> top = k == 3 ? std::vector<std::size_t>{n, n + 1, n + 2} : std::vector<std::size_t>{n + 1, n + 2};
    out.expected_highest = Degree(n, 0);
    for (auto x : top) out.expected_highest = out.expected_highest + W.weight(x);
    return out;
}

// Weight multiset of a module.
inline std::map<Degree, std::size_t> weight_multiset(const ModuleRep& m) {
    std::map<Degree, std::size_t> out;
    for (auto& w : m.weights) ++out[w];
    return out;
}

// Weights of a tensor product with coordinates concatenated: (a, b) for each pair.
inline std::map<Degree, std::size_t> tensor_weights(const std::map<Degree, std::size_t>& a,
                                                    const std::map<Degree, std::size_t>& b) {
    std::map<Degree, std::size_t> out;
    for (auto& [x, m] : a)
        for (auto& [y, n] : b) {
            Degree d = x;
            d.insert(d.end(), y.begin(), y.end());
            out[d] += m * n;
        }
    return out;
}

}  // namespace mss
