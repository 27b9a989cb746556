#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lie.hpp"

namespace mss {

// g(S1,S42) decomposed as the sum of V(s) = tensor product of V_i over i in s,
// s running over subsets of {1,2,3}. V(empty) = sp(V1)+sp(V2)+sp(V3).
//
// Subsets are bitmasks (bit i-1 for index i). A basis tensor of V(s) is the
// word of letters 'v'/'w' for the indices of s in increasing order.

namespace epsilon_detail {

// <v|w> = 1
inline int form(char a, char b) {
    if (a == b) return 0;
    return a == 'v' ? 1 : -1;
}

// gamma_{a,b}(z) = <a|z> b + <b|z> a, as coefficients on (v, w).
inline std::array<int, 2> gamma_apply(char a, char b, char z) {
    std::array<int, 2> out{0, 0};
    auto add = [&](char c, int s) { out[c == 'v' ? 0 : 1] += s; };
    add(b, form(a, z));
    add(a, form(b, z));
    return out;
}

inline const std::array<std::pair<char, char>, 3>& gamma_basis() {
    static const std::array<std::pair<char, char>, 3> g = {{{'w', 'w'}, {'v', 'w'}, {'v', 'v'}}};
    return g;
}

inline std::string gamma_label(int j, char a, char b) {
    return "T'[g" + std::to_string(j) + "(" + a + "," + b + ")]";
}

// 2x2 matrix (columns = images of v, w) of an sp2 element with gamma coordinates c.
inline std::array<std::array<int, 2>, 2> sp_matrix(const std::array<F3, 3>& c) {
    std::array<std::array<int, 2>, 2> m{};
    for (int k = 0; k < 3; ++k) {
        auto [a, b] = gamma_basis()[k];
        for (int z = 0; z < 2; ++z) {
            auto img = gamma_apply(a, b, z == 0 ? 'v' : 'w');
            for (int r = 0; r < 2; ++r) m[r][z] += c[k].v * img[r];
        }
    }
    return m;
}

}  // namespace epsilon_detail

inline std::string subset_name(unsigned s) {
    if (s == 0) return "{}";
    std::string out = "{";
    for (int i = 1; i <= 3; ++i)
        if (s >> (i - 1) & 1) out += (out.size() > 1 ? "," : "") + std::to_string(i);
    return out + "}";
}

inline std::optional<unsigned> parse_subset(const std::string& s) {
    unsigned m = 0;
    for (char c : s) {
        if (c >= '1' && c <= '3') m |= 1u << (c - '1');
        else if (c != '{' && c != '}' && c != ',' && c != ' ') return std::nullopt;
    }
    return m;
}

class EpsilonModel {
public:
    explicit EpsilonModel(const LieSuperalgebra& g) : g_(g) {
        if (g.name != "S1S42") throw std::invalid_argument("EpsilonModel: needs g(S1,S42), got " + g.name);
        for (std::size_t i = 0; i < g.dim; ++i) at_[g.labels[i]] = i;
    }

    // Basis of V(s): words for nonempty s, (j, gamma index) pairs for the empty set.
    std::vector<std::string> words(unsigned s) const {
        std::vector<std::string> out;
        if (s == 0) {
            for (int j = 1; j <= 3; ++j)
                for (int k = 0; k < 3; ++k) out.push_back(std::to_string(j) + std::to_string(k));
            return out;
        }
        int n = __builtin_popcount(s);
        for (int m = 0; m < (1 << n); ++m) {
            std::string w;
            for (int b = n - 1; b >= 0; --b) w += (m >> b & 1) ? 'w' : 'v';
            out.push_back(w);
        }
        return out;
    }

    // The basis vector of g matching a word of V(s).
    Vec embed(unsigned s, const std::string& w) const {
        using namespace epsilon_detail;
        if (s == 0) {
            auto [a, b] = gamma_basis()[w[1] - '0'];
            return unit(g_.dim, idx(gamma_label(w[0] - '0', a, b)));
        }
        auto letter = [&](int i) {  // letter of index i in w
            int pos = 0;
            for (int k = 1; k < i; ++k) pos += s >> (k - 1) & 1;
            return std::string(1, w[pos]);
        };
        switch (s) {
            case 0b111: return unit(g_.dim, idx("T'[" + letter(1) + "." + letter(2) + "." + letter(3) + "]"));
            case 0b011: return unit(g_.dim, idx("i0(1|" + letter(1) + "." + letter(2) + ")"));
            case 0b100: return unit(g_.dim, idx("i0(1|" + letter(3) + ")"));
            case 0b110: return unit(g_.dim, idx("i1(1|" + letter(2) + "." + letter(3) + ")"));
            case 0b001: return unit(g_.dim, idx("i1(1|" + letter(1) + ")"));
            case 0b101: return unit(g_.dim, idx("i2(1|" + letter(3) + "." + letter(1) + ")"));
            case 0b010: return unit(g_.dim, idx("i2(1|" + letter(2) + ")"));
        }
        throw std::logic_error("EpsilonModel: bad subset");
    }

    // phi_{s,t}(x,y) for basis words, as a vector of g.
    Vec phi(unsigned s, const std::string& x, unsigned t, const std::string& y) const {
        using namespace epsilon_detail;
        Vec out(g_.dim);
        if (s == 0 && t == 0) {
            // commutator in sp(V_j); zero across different j
            if (x[0] != y[0]) return out;
            int j = x[0] - '0';
            std::array<F3, 3> cx{}, cy{};
            cx[x[1] - '0'] = 1;
            cy[y[1] - '0'] = 1;
            auto mx = sp_matrix(cx), my = sp_matrix(cy);
            std::array<std::array<int, 2>, 2> c{};
            for (int r = 0; r < 2; ++r)
                for (int q = 0; q < 2; ++q)
                    for (int k = 0; k < 2; ++k) c[r][q] += mx[r][k] * my[k][q] - my[r][k] * mx[k][q];
            // match against all 27 elements of sp2 in the gamma basis
            for (int m = 0; m < 27; ++m) {
                std::array<F3, 3> cc{F3(m % 3), F3(m / 3 % 3), F3(m / 9)};
                auto mm = sp_matrix(cc);
                bool eq = true;
                for (int r = 0; r < 2; ++r)
                    for (int q = 0; q < 2; ++q) eq = eq && F3(mm[r][q]) == F3(c[r][q]);
                if (!eq) continue;
                for (int l = 0; l < 3; ++l) {
                    auto [a, b] = gamma_basis()[l];
                    out[idx(gamma_label(j, a, b))] = cc[l];
                }
                return out;
            }
            throw std::logic_error("EpsilonModel: commutator outside sp2");
        }
        if (s == 0 || t == 0) {
            // natural action of sp(V_j) on the j-th slot; phi_{s,0}(x,d) = -d.x
            bool left = s == 0;
            const std::string& d = left ? x : y;
            const std::string& u = left ? y : x;
            unsigned m = left ? t : s;
            int j = d[0] - '0';
            if (!(m >> (j - 1) & 1)) return out;
            int pos = 0;
            for (int k = 1; k < j; ++k) pos += m >> (k - 1) & 1;
            auto [a, b] = gamma_basis()[d[1] - '0'];
            auto img = gamma_apply(a, b, u[pos]);
            for (int r = 0; r < 2; ++r) {
                if (img[r] == 0) continue;
                std::string w = u;
                w[pos] = r == 0 ? 'v' : 'w';
                axpy(out, F3(left ? img[r] : -img[r]), embed(m, w));
            }
            return out;
        }
        auto letter = [](unsigned m, const std::string& w, int i) {
            int pos = 0;
            for (int k = 1; k < i; ++k) pos += m >> (k - 1) & 1;
            return w[pos];
        };
        if (s == t) {
            for (int j = 1; j <= 3; ++j) {
                if (!(s >> (j - 1) & 1)) continue;
                int c = 1;
                for (int k = 1; k <= 3; ++k)
                    if (k != j && (s >> (k - 1) & 1)) c *= form(letter(s, x, k), letter(s, y, k));
                if (c == 0) continue;
                char a = letter(s, x, j), b = letter(s, y, j);
                if (a == 'w' && b == 'v') std::swap(a, b);  // gamma is symmetric
                axpy(out, F3(c), unit(g_.dim, idx(gamma_label(j, a, b))));
            }
            return out;
        }
        unsigned r = s ^ t;
        int c = 1;
        std::string w;
        for (int i = 1; i <= 3; ++i) {
            bool ins = s >> (i - 1) & 1, int_ = t >> (i - 1) & 1;
            if (ins && int_) c *= form(letter(s, x, i), letter(t, y, i));
            else if (ins) w += letter(s, x, i);
            else if (int_) w += letter(t, y, i);
        }
        if (c != 0) axpy(out, F3(c), embed(r, w));
        return out;
    }

    // The constant e with [x,y] = e phi(x,y) for all basis x in V(s), y in V(t), if any.
    std::optional<F3> epsilon(unsigned s, unsigned t) const {
        std::optional<F3> e;
        for (auto& x : words(s))
            for (auto& y : words(t)) {
                Vec br = bracket_eval(g_, embed(s, x), embed(t, y));
                Vec ph = phi(s, x, t, y);
                if (is_zero(ph)) {
                    if (!is_zero(br)) return std::nullopt;
                    continue;
                }
                F3 c = 0;
                for (std::size_t k = 0; k < ph.size(); ++k)
                    if (!ph[k].zero()) {
                        c = br[k] / ph[k];
                        break;
                    }
                if (c.zero() || br != c * ph) return std::nullopt;
                if (e && *e != c) return std::nullopt;
                e = c;
            }
        return e;
    }

private:
    std::size_t idx(const std::string& l) const {
        auto it = at_.find(l);
        if (it == at_.end()) throw std::logic_error("EpsilonModel: missing basis label " + l);
        return it->second;
    }

    const LieSuperalgebra& g_;
    std::map<std::string, std::size_t> at_;
};

struct EpsilonTable {
    std::vector<unsigned> subsets;
    std::vector<std::vector<std::optional<F3>>> values;
};

inline EpsilonTable epsilon_table(const LieSuperalgebra& g, const std::vector<unsigned>& subsets) {
    EpsilonModel m(g);
    EpsilonTable t{subsets, {}};
    for (auto s : subsets) {
        std::vector<std::optional<F3>> row;
        for (auto u : subsets) row.push_back(m.epsilon(s, u));
        t.values.push_back(std::move(row));
    }
    return t;
}

}  // namespace mss
