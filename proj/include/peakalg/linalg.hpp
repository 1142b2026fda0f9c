#pragma once

#include "peakalg/cyclo.hpp"

#include <optional>
#include <vector>

namespace peakalg {

// Dense exact matrix over one field. Row-major.
template <class K> struct Mat {
    int rows = 0, cols = 0;
    std::vector<std::vector<K>> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(r, std::vector<K>(c, FieldTraits<K>::zero())) {}

    std::vector<K> &operator[](int i) { return a[i]; }
    const std::vector<K> &operator[](int i) const { return a[i]; }

    Mat transposed() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
        return t;
    }

    friend bool operator==(const Mat &x, const Mat &y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

template <class K> struct RrefResult {
    Mat<K> reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Reduced row echelon form with the deterministic first-nonzero pivot rule:
// scan columns left to right, pick the first row with a nonzero entry.
template <class K> RrefResult<K> rref(Mat<K> m) {
    RrefResult<K> out;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.a[i][c])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m.a[r], m.a[piv]);
        K inv = inverse(m.a[r][c]);
        for (int j = c; j < m.cols; ++j) m.a[r][j] = m.a[r][j] * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.a[i][c])) continue;
            K f = m.a[i][c];
            for (int j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

template <class K> int rank(const Mat<K> &m) { return rref(m).rank; }

// Echelonized span of a set of row vectors, with membership queries.
// Keeps the transform expressing each echelon row over the original rows,
// so coordinates can be reported against the input spanning set.
template <class K> class SpanSolver {
  public:
    SpanSolver() = default;
    explicit SpanSolver(const std::vector<std::vector<K>> &rows) { build(rows); }

    void build(const std::vector<std::vector<K>> &rows) {
        nrows_ = static_cast<int>(rows.size());
        dim_ = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        ech_.clear();
        trans_.clear();
        pivots_.clear();
        for (int i = 0; i < nrows_; ++i) {
            if (static_cast<int>(rows[i].size()) != dim_)
                throw std::invalid_argument("span rows of unequal dimension");
            std::vector<K> v = rows[i];
            std::vector<K> t(nrows_, FieldTraits<K>::zero());
            t[i] = FieldTraits<K>::one();
            reduce_against(v, t);
            int p = first_nonzero(v);
            if (p < 0) continue;
            K inv = inverse(v[p]);
            for (auto &x : v) x = x * inv;
            for (auto &x : t) x = x * inv;
            insert_sorted(std::move(v), std::move(t), p);
        }
        back_substitute();
    }

    int rank() const { return static_cast<int>(ech_.size()); }
    int dimension() const { return dim_; }
    const std::vector<std::vector<K>> &echelon_rows() const { return ech_; }
    const std::vector<int> &pivot_columns() const { return pivots_; }

    bool contains(const std::vector<K> &v) const {
        std::vector<K> w = v;
        for (size_t r = 0; r < ech_.size(); ++r) {
            const K &c = w[pivots_[r]];
            if (is_zero(c)) continue;
            K f = c;
            for (int j = 0; j < dim_; ++j) w[j] -= f * ech_[r][j];
        }
        return first_nonzero(w) < 0;
    }

    // Coordinates over the echelon rows, or nullopt when outside the span.
    std::optional<std::vector<K>> coords_echelon(const std::vector<K> &v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("dimension mismatch");
        std::vector<K> w = v;
        std::vector<K> c(ech_.size(), FieldTraits<K>::zero());
        for (size_t r = 0; r < ech_.size(); ++r) {
            const K &x = w[pivots_[r]];
            if (is_zero(x)) continue;
            c[r] = x;
            K f = x;
            for (int j = 0; j < dim_; ++j) w[j] -= f * ech_[r][j];
        }
        if (first_nonzero(w) >= 0) return std::nullopt;
        return c;
    }

    // Coordinates over the original spanning rows (one deterministic choice
    // when the input rows were dependent).
    std::optional<std::vector<K>> coords(const std::vector<K> &v) const {
        auto ce = coords_echelon(v);
        if (!ce) return std::nullopt;
        std::vector<K> c(nrows_, FieldTraits<K>::zero());
        for (size_t r = 0; r < ech_.size(); ++r) {
            if (is_zero((*ce)[r])) continue;
            for (int j = 0; j < nrows_; ++j) c[j] += (*ce)[r] * trans_[r][j];
        }
        return c;
    }

  private:
    static int first_nonzero(const std::vector<K> &v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (!is_zero(v[j])) return static_cast<int>(j);
        return -1;
    }

    void reduce_against(std::vector<K> &v, std::vector<K> &t) const {
        for (size_t r = 0; r < ech_.size(); ++r) {
            const K &c = v[pivots_[r]];
            if (is_zero(c)) continue;
            K f = c;
            for (int j = 0; j < dim_; ++j) v[j] -= f * ech_[r][j];
            for (int j = 0; j < nrows_; ++j) t[j] -= f * trans_[r][j];
        }
    }

    void insert_sorted(std::vector<K> v, std::vector<K> t, int pivot) {
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
        ech_.insert(ech_.begin() + pos, std::move(v));
        trans_.insert(trans_.begin() + pos, std::move(t));
        pivots_.insert(pivots_.begin() + pos, pivot);
    }

    void back_substitute() {
        for (size_t r = 0; r < ech_.size(); ++r) {
            for (size_t s = r + 1; s < ech_.size(); ++s) {
                const K &c = ech_[r][pivots_[s]];
                if (is_zero(c)) continue;
                K f = c;
                for (int j = 0; j < dim_; ++j) ech_[r][j] -= f * ech_[s][j];
                for (int j = 0; j < nrows_; ++j) trans_[r][j] -= f * trans_[s][j];
            }
        }
    }

    int nrows_ = 0;
    int dim_ = 0;
    std::vector<std::vector<K>> ech_;
    std::vector<std::vector<K>> trans_;
    std::vector<int> pivots_;
};

// Basis of { c : sum_i c_i rows[i] = 0 }, echelonized for determinism.
template <class K>
std::vector<std::vector<K>> left_kernel(const std::vector<std::vector<K>> &rows) {
    int n = static_cast<int>(rows.size());
    int d = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Mat<K> aug(n, d + n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) aug.a[i][j] = rows[i][j];
        aug.a[i][d + i] = FieldTraits<K>::one();
    }
    // Eliminate on the first d columns only; rows reducing to zero there
    // carry kernel combinations in the augmented part.
    int r = 0;
    for (int c = 0; c < d && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (!is_zero(aug.a[i][c])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(aug.a[r], aug.a[piv]);
        K inv = inverse(aug.a[r][c]);
        for (int j = c; j < d + n; ++j) aug.a[r][j] = aug.a[r][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || is_zero(aug.a[i][c])) continue;
            K f = aug.a[i][c];
            for (int j = c; j < d + n; ++j) aug.a[i][j] -= f * aug.a[r][j];
        }
        ++r;
    }
    std::vector<std::vector<K>> kernel;
    for (int i = r; i < n; ++i)
        kernel.emplace_back(aug.a[i].begin() + d, aug.a[i].end());
    if (kernel.empty()) return kernel;
    SpanSolver<K> canon(kernel);
    return canon.echelon_rows();
}

// Intersection of two row spans (Zassenhaus): echelonized basis.
template <class K>
std::vector<std::vector<K>> span_intersection(const std::vector<std::vector<K>> &u,
                                              const std::vector<std::vector<K>> &w) {
    if (u.empty() || w.empty()) return {};
    int d = static_cast<int>(u[0].size());
    std::vector<std::vector<K>> block;
    for (const auto &row : u) {
        std::vector<K> b(2 * d, FieldTraits<K>::zero());
        for (int j = 0; j < d; ++j) b[j] = b[d + j] = row[j];
        block.push_back(std::move(b));
    }
    for (const auto &row : w) {
        std::vector<K> b(2 * d, FieldTraits<K>::zero());
        for (int j = 0; j < d; ++j) b[j] = row[j];
        block.push_back(std::move(b));
    }
    Mat<K> m(static_cast<int>(block.size()), 2 * d);
    m.a = block;
    auto rr = rref(std::move(m));
    std::vector<std::vector<K>> inter;
    for (int i = 0; i < rr.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < d; ++j)
            if (!is_zero(rr.reduced.a[i][j])) { left_zero = false; break; }
        if (left_zero) {
            std::vector<K> row(rr.reduced.a[i].begin() + d, rr.reduced.a[i].end());
            bool nz = false;
            for (const auto &x : row)
                if (!is_zero(x)) { nz = true; break; }
            if (nz) inter.push_back(std::move(row));
        }
    }
    if (inter.empty()) return inter;
    SpanSolver<K> canon(inter);
    return canon.echelon_rows();
}

template <class K>
bool same_span(const std::vector<std::vector<K>> &u, const std::vector<std::vector<K>> &w) {
    SpanSolver<K> su(u), sw(w);
    if (su.rank() != sw.rank()) return false;
    for (const auto &row : w)
        if (!su.contains(row)) return false;
    return true;
}

} // namespace peakalg
