#pragma once

// Dense rectangular matrices over skew polynomials. All entries of one matrix
// share an algebra and a coefficient layer.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orediag/skewpoly.hpp"

namespace orediag {

template <class P>
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, const P& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix");
    }
    static Matrix zero(std::size_t rows, std::size_t cols, AlgebraSpec alg) {
        return Matrix(rows, cols, P(std::move(alg)));
    }
    static Matrix identity(std::size_t n, AlgebraSpec alg) {
        Matrix m = zero(n, n, alg);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = P::constant(m.algebra(), Rat(1));
        return m;
    }
    static Matrix from_rows(std::vector<std::vector<P>> rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("empty matrix");
        Matrix m(rows.size(), rows.front().size(), rows.front().front());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = std::move(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const AlgebraSpec& algebra() const { return data_.front().algebra(); }

    P& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const P& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<P> row(std::size_t i) const {
        return std::vector<P>(data_.begin() + static_cast<long>(i * cols_),
                              data_.begin() + static_cast<long>((i + 1) * cols_));
    }

    bool row_is_zero(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool col_is_zero(std::size_t j) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& e : data_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r = zero(a.rows_, b.cols_, a.algebra());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a);
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Nonzero entries form a diagonal of a square submatrix, in the
    // rectangular sense: at most one nonzero per row and per column, with
    // column index increasing down the rows.
    bool is_rect_diagonal() const {
        long last_col = -1;
        for (std::size_t i = 0; i < rows_; ++i) {
            long found = -1;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero()) continue;
                if (found >= 0) return false;
                found = static_cast<long>(j);
            }
            if (found >= 0) {
                if (found <= last_col) return false;
                last_col = found;
            }
        }
        return true;
    }

    std::size_t max_coeff_bits() const {
        std::size_t m = 0;
        for (const auto& e : data_) m = std::max(m, e.max_coeff_bits());
        return m;
    }

    std::vector<std::vector<std::string>> to_strings() const {
        std::vector<std::vector<std::string>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
        return out;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<P> data_;
};

using OreMatrix = Matrix<OrePoly>;
using OreRatMatrix = Matrix<OreRatPoly>;

inline OreRatMatrix to_rational(const OreMatrix& m) {
    OreRatMatrix r = OreRatMatrix::zero(m.rows(), m.cols(), m.algebra());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = to_rational(m.at(i, j));
    return r;
}

// Denominator clearing: a diagonal T with nonzero K[x] entries (row-wise lcm
// of coefficient denominators) such that T·M has polynomial-layer entries.
// T is invertible over the rational layer, so it is R-unimodular.
struct ClearedMatrix {
    OreMatrix T;
    OreMatrix cleared;
};

inline ClearedMatrix clear_denominators(const OreRatMatrix& m) {
    const AlgebraSpec& alg = m.algebra();
    OreMatrix T = OreMatrix::zero(m.rows(), m.rows(), alg);
    OreMatrix out = OreMatrix::zero(m.rows(), m.cols(), alg);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.row_is_zero(i))
            throw std::invalid_argument("clear_denominators: zero row " + std::to_string(i));
        UniPoly lcm{Rat(1)};
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [e, c] : m.at(i, j).terms()) lcm = poly_lcm(lcm, c.den());
        T.at(i, i) = OrePoly::term(alg, lcm, 0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            OrePoly p(alg);
            for (const auto& [e, c] : m.at(i, j).terms()) {
                UniPoly cleared_coeff = (lcm * c.num()).exact_div(c.den());
                p += OrePoly::term(alg, cleared_coeff, e);
            }
            out.at(i, j) = p;
        }
    }
    return {T, out};
}

}  // namespace orediag
