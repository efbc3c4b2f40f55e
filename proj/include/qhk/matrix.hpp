#pragma once

#include "qhk/integer.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace qhk {

// Dense integer matrix, row-major. Semantics are always dense; the sparse
// machinery in smith.hpp is an internal optimization only.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw input_error("IntMatrix: negative dimension");
    }

    static IntMatrix identity(long n) {
        IntMatrix m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        long r = static_cast<long>(rows.size());
        long c = r == 0 ? 0 : static_cast<long>(rows.begin()->size());
        IntMatrix m(r, c);
        long i = 0;
        for (const auto& row : rows) {
            if (static_cast<long>(row.size()) != c) throw input_error("IntMatrix: ragged rows");
            long j = 0;
            for (long long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Int& operator()(long i, long j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(long i, long j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const {
        for (const Int& v : a_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw input_error("IntMatrix: dimension mismatch in product");
        IntMatrix out(rows_, rhs.cols_);
        for (long i = 0; i < rows_; ++i)
            for (long k = 0; k < cols_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (long j = 0; j < rhs.cols_; ++j) {
                    const Int& w = rhs(k, j);
                    if (w != 0) out(i, j) += v * w;
                }
            }
        return out;
    }

    IntMatrix operator-(const IntMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("IntMatrix: dimension mismatch");
        IntMatrix out(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - rhs.a_[k];
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix out(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    std::vector<Int> column(long j) const {
        std::vector<Int> c(rows_);
        for (long i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    // y = this * x
    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<long>(x.size()) != cols_) throw input_error("IntMatrix: vector size mismatch");
        std::vector<Int> y(rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    void negate_row(long i) {
        for (long k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

    void negate_col(long j) {
        for (long k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
    }

    // row i += c * row j
    void add_row(long i, long j, const Int& c) {
        for (long k = 0; k < cols_; ++k)
            if ((*this)(j, k) != 0) (*this)(i, k) += c * (*this)(j, k);
    }

    // col i += c * col j
    void add_col(long i, long j, const Int& c) {
        for (long k = 0; k < rows_; ++k)
            if ((*this)(k, j) != 0) (*this)(k, i) += c * (*this)(k, j);
    }

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<Int> a_;
};

// Column-sparse matrix used internally by the homology pipeline; never part
// of a public contract.
struct SparseMat {
    long rows = 0;
    long cols = 0;
    // columns[j] = sorted (row, value) pairs with value != 0
    std::vector<std::vector<std::pair<long, Int>>> columns;

    static SparseMat from_dense(const IntMatrix& m) {
        SparseMat s;
        s.rows = m.rows();
        s.cols = m.cols();
        s.columns.resize(m.cols());
        for (long j = 0; j < m.cols(); ++j)
            for (long i = 0; i < m.rows(); ++i)
                if (m(i, j) != 0) s.columns[j].emplace_back(i, m(i, j));
        return s;
    }

    IntMatrix to_dense() const {
        IntMatrix m(rows, cols);
        for (long j = 0; j < cols; ++j)
            for (const auto& [i, v] : columns[j]) m(i, j) = v;
        return m;
    }
};

}  // namespace qhk
