#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace mss {

using Vec = std::vector<F3>;

inline Vec zeros(std::size_t n) { return Vec(n); }

inline Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](F3 a) { return a.zero(); });
}

inline void axpy(Vec& y, F3 a, const Vec& x) {
    if (a.zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline Vec operator+(Vec a, const Vec& b) {
    axpy(a, 1, b);
    return a;
}
inline Vec operator-(Vec a, const Vec& b) {
    axpy(a, -1, b);
    return a;
}
inline Vec operator*(F3 s, Vec a) {
    for (auto& x : a) x *= s;
    return a;
}

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<F3> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rs, std::size_t cols) {
        Mat m(rs.size(), cols);
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
            std::copy(rs[i].begin(), rs[i].end(), m.a.begin() + i * cols);
        }
        return m;
    }
    static Mat from_ints(std::initializer_list<std::initializer_list<int>> rs) {
        std::size_t c = rs.size() ? rs.begin()->size() : 0;
        Mat m(rs.size(), c);
        std::size_t i = 0;
        for (auto& r : rs) {
            std::size_t j = 0;
            for (int x : r) m(i, j++) = F3(x);
            ++i;
        }
        return m;
    }

    F3& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    F3 operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Vec row(std::size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    Vec col(std::size_t j) const {
        Vec v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const Vec& v) {
        for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](F3 x) { return x.zero(); });
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

inline Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
    Mat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            F3 s = x(i, k);
            if (s.zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += s * y(k, j);
        }
    return r;
}

inline Vec operator*(const Mat& m, const Vec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("matvec: shape mismatch");
    Vec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        F3 s;
        for (std::size_t j = 0; j < m.cols; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

inline Mat operator+(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
}
inline Mat operator-(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
}
inline Mat operator*(F3 s, Mat x) {
    for (auto& e : x.a) e *= s;
    return x;
}

struct RrefResult {
    Mat r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan with first-nonzero pivoting, so bases are reproducible.
inline RrefResult rref(Mat m) {
    RrefResult out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols && row < m.rows; ++c) {
        std::size_t p = row;
        while (p < m.rows && m(p, c).zero()) ++p;
        if (p == m.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
        F3 inv = m(row, c).inv();
        for (std::size_t j = c; j < m.cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            F3 f = m(i, c);
            if (f.zero()) continue;
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.rank = row;
    out.r = std::move(m);
    return out;
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

inline std::size_t rank(const std::vector<Vec>& vs, std::size_t n) {
    return vs.empty() ? 0 : rank(Mat::from_rows(vs, n));
}

// Basis of {v : M v = 0}, one vector per free column, in column order.
inline std::vector<Vec> nullspace(const Mat& m) {
    auto rr = rref(m);
    std::vector<char> is_pivot(m.cols, 0);
    for (auto p : rr.pivots) is_pivot[p] = 1;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some x with M x = b, or nothing.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    auto rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols) return std::nullopt;
    Vec x(m.cols);
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.r(i, m.cols);
    return x;
}

// Incrementally maintained reduced echelon basis of a subspace.
class Subspace {
public:
    explicit Subspace(std::size_t n = 0) : n_(n) {}

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    Vec reduce(Vec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            F3 f = v[piv_[i]];
            if (!f.zero()) axpy(v, -f, rows_[i]);
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    // Returns true if v enlarged the subspace.
    bool add(const Vec& v) {
        Vec r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p].zero()) ++p;
        if (p == n_) return false;
        F3 inv = r[p].inv();
        for (auto& x : r) x *= inv;
        for (auto& row : rows_) {
            F3 f = row[p];
            if (!f.zero()) axpy(row, -f, r);
        }
        auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
        piv_.insert(piv_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(r));
        return true;
    }

private:
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> piv_;
};

using LinearOp = std::function<Vec(const Vec&)>;

// Smallest subspace containing the seeds and stable under every operator.
inline Subspace span_closure(const std::vector<Vec>& seeds, const std::vector<LinearOp>& ops,
                             std::size_t n) {
    Subspace s(n);
    std::vector<Vec> queue;
    for (auto& v : seeds) {
        if (v.size() != n) throw std::invalid_argument("span_closure: dimension mismatch");
        Vec r = s.reduce(v);
        if (s.add(r)) queue.push_back(r);
    }
    for (std::size_t q = 0; q < queue.size() && s.dim() < n; ++q) {
        Vec cur = queue[q];
        for (auto& op : ops) {
            Vec img = op(cur);
            Vec r = s.reduce(img);
            if (s.add(r)) {
                queue.push_back(std::move(r));
                if (s.dim() == n) break;
            }
        }
    }
    return s;
}

inline Subspace span_closure(const std::vector<Vec>& seeds, const std::vector<Mat>& ops, std::size_t n) {
    std::vector<LinearOp> fs;
    for (auto& m : ops) {
        if (m.rows != n || m.cols != n) throw std::invalid_argument("span_closure: operator shape");
        fs.push_back([&m](const Vec& v) { return m * v; });
    }
    return span_closure(seeds, fs, n);
}

// Coordinates relative to a fixed independent list of vectors.
class Coordinatizer {
public:
    Coordinatizer() = default;
    Coordinatizer(const std::vector<Vec>& basis, std::size_t n) : basis_(basis), n_(n) {
        std::size_t m = basis.size();
        // rows: basis vectors augmented by identity; rref exposes the transition matrix
        Mat aug(m, n + m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = basis[i][j];
            aug(i, n + i) = 1;
        }
        auto rr = rref(aug);
        for (std::size_t i = 0; i < rr.rank; ++i)
            if (rr.pivots[i] >= n) throw std::invalid_argument("Coordinatizer: dependent basis");
        piv_.assign(rr.pivots.begin(), rr.pivots.begin() + m);
        trans_ = Mat(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) trans_(i, j) = rr.r(i, n + j);
    }

    std::size_t size() const { return basis_.size(); }

    // c with sum c_i basis_i = v; nothing if v is outside the span.
    std::optional<Vec> coords(const Vec& v) const {
        std::size_t m = basis_.size();
        Vec c(m);
        for (std::size_t i = 0; i < m; ++i) {
            F3 f = v[piv_[i]];
            if (!f.zero()) axpy(c, f, trans_.row(i));
        }
        Vec back(n_);
        for (std::size_t i = 0; i < m; ++i) axpy(back, c[i], basis_[i]);
        if (back != v) return std::nullopt;
        return c;
    }

private:
    std::vector<Vec> basis_;
    std::size_t n_ = 0;
    std::vector<std::size_t> piv_;
    Mat trans_;
};

}  // namespace mss
