#pragma once

#include "errors.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace torus_lab {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const F& x) { return torus_lab::is_zero(x); });
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, ErrorKind::internal_error, "matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (torus_lab::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Vertical concatenation; an empty matrix acts as the neutral element.
    static Matrix stack(const Matrix& top, const Matrix& bottom) {
        if (top.rows_ == 0) {
            Matrix b = bottom;
            if (b.rows_ == 0) b.cols_ = std::max(top.cols_, bottom.cols_);
            return b;
        }
        if (bottom.rows_ == 0) return top;
        require(top.cols_ == bottom.cols_, ErrorKind::internal_error, "stack shape mismatch");
        Matrix out(top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
        std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + top.data_.size());
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return row_reduce(m).size();
}

// Columns spanning {x : m x = 0}.
template <class F>
Matrix<F> null_space(Matrix<F> m) {
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix<F> basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free[k]);
    }
    return basis;
}

// Rows spanning {y : y m = 0}.
template <class F>
Matrix<F> left_null_space(const Matrix<F>& m) {
    return null_space(m.transpose()).transpose();
}

// Incremental sparse elimination. Rows are sorted (column, coefficient)
// lists kept with leading coefficient 1; Hom systems between string and
// band modules have at most two terms per equation, so fill-in stays low.
template <class F>
class SparseEliminator {
public:
    using Row = std::vector<std::pair<std::size_t, F>>;

    explicit SparseEliminator(std::size_t ncols) : pivot_of_(ncols, npos) {}

    // Returns true when the row increased the rank.
    bool add(Row row) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        row = compact(std::move(row));
        while (!row.empty()) {
            std::size_t lead = row.front().first;
            std::size_t p = pivot_of_[lead];
            if (p == npos) {
                F inv = F(1) / row.front().second;
                for (auto& e : row) e.second *= inv;
                pivot_of_[lead] = rows_.size();
                rows_.push_back(std::move(row));
                return true;
            }
            row = axpy(row, rows_[p], -row.front().second);
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t columns() const { return pivot_of_.size(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_of_;
    std::vector<Row> rows_;

    static Row compact(Row row) {
        Row out;
        out.reserve(row.size());
        for (auto& e : row) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else
                out.push_back(std::move(e));
            if (!out.empty() && is_zero(out.back().second)) out.pop_back();
        }
        return out;
    }

    // a + f * b for sorted rows.
    static Row axpy(const Row& a, const Row& b, const F& f) {
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, f * b[j].second);
                ++j;
            } else {
                F v = a[i].second + f * b[j].second;
                if (!is_zero(v)) out.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }
};

} // namespace torus_lab
