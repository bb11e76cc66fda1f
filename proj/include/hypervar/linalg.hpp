#ifndef HYPERVAR_LINALG_HPP
#define HYPERVAR_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypervar/field.hpp"

namespace hypervar {

// Dense matrix over a single finite field, row-major packed elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    felem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    felem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (felem x : a_)
            if (x) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ &&
               field_->same_as(*o.field_);
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y, "matrix add");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i)
            r.a_[i] = x.field_->add(x.a_[i], y.a_[i]);
        return r;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y, "matrix sub");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i)
            r.a_[i] = x.field_->sub(x.a_[i], y.a_[i]);
        return r;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        require_same_field(*x.field_, *y.field_, "matrix mul");
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
        Matrix r(x.field_, x.rows_, y.cols_);
        const Field& F = *x.field_;
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                felem v = x.at(i, k);
                if (!v) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
            }
        return r;
    }

    Matrix scaled(felem c) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = field_->mul(x, c);
        return r;
    }

    Matrix negated() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = field_->neg(x);
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix pow(std::size_t n) const {
        if (rows_ != cols_) throw std::invalid_argument("matrix pow: not square");
        Matrix r = identity(field_, rows_);
        Matrix b = *this;
        while (n) {
            if (n & 1) r = r * b;
            if (n >>= 1) b = b * b;
        }
        return r;
    }

    bool commutes_with(const Matrix& o) const { return (*this) * o == o * (*this); }

    // Places a block at offset (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& blk) {
        for (std::size_t i = 0; i < blk.rows_; ++i)
            for (std::size_t j = 0; j < blk.cols_; ++j) at(r0 + i, c0 + j) = blk.at(i, j);
    }

    // Row echelon reduction in place; returns pivot columns.
    std::vector<std::size_t> row_reduce() {
        const Field& F = *field_;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, c) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            felem piv_inv = F.inv(at(r, c));
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), piv_inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                felem f = at(i, c);
                if (!f) continue;
                for (std::size_t j = c; j < cols_; ++j)
                    at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix tmp = *this;
        return tmp.row_reduce().size();
    }

private:
    void check_same_shape(const Matrix& o, const char* where) const {
        require_same_field(*field_, *o.field_, where);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(where) + ": shape mismatch");
    }

    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<felem> a_;
};

// A subspace of F^n held as a reduced column-echelon basis; the basis is
// canonical, so equality of subspaces is entrywise comparison.
class Subspace {
public:
    // Canonicalizes the span of the given columns.
    static Subspace span_of_columns(const Matrix& cols) {
        Matrix t = cols.transpose();
        std::vector<std::size_t> pivots = t.row_reduce();
        Matrix basis(cols.field(), cols.rows(), pivots.size());
        for (std::size_t j = 0; j < pivots.size(); ++j)
            for (std::size_t i = 0; i < cols.rows(); ++i) basis.at(i, j) = t.at(j, i);
        Subspace s;
        s.ambient_ = cols.rows();
        s.basis_ = std::move(basis);
        s.pivot_rows_ = std::move(pivots);
        return s;
    }

    static Subspace zero(FieldPtr field, std::size_t ambient) {
        return span_of_columns(Matrix(std::move(field), ambient, 0));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains_vector(const std::vector<felem>& v) const {
        const Field& F = *basis_.field();
        std::vector<felem> w = v;
        for (std::size_t j = 0; j < basis_.cols(); ++j) {
            felem c = w[pivot_rows_[j]];
            if (!c) continue;
            for (std::size_t i = 0; i < ambient_; ++i)
                w[i] = F.sub(w[i], F.mul(c, basis_.at(i, j)));
        }
        for (felem x : w)
            if (x) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        if (ambient_ != other.ambient_)
            throw std::invalid_argument("subspace contains: ambient mismatch");
        require_same_field(*basis_.field(), *other.basis_.field(), "subspace contains");
        for (std::size_t j = 0; j < other.dim(); ++j) {
            std::vector<felem> v(ambient_);
            for (std::size_t i = 0; i < ambient_; ++i) v[i] = other.basis_.at(i, j);
            if (!contains_vector(v)) return false;
        }
        return true;
    }

    bool operator==(const Subspace& other) const {
        if (ambient_ != other.ambient_)
            throw std::invalid_argument("subspace equal: ambient mismatch");
        return basis_ == other.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivot_rows_;
};

inline Subspace image_basis(const Matrix& a) { return Subspace::span_of_columns(a); }

inline Subspace kernel_basis(const Matrix& a) {
    Matrix r = a;
    std::vector<std::size_t> pivots = r.row_reduce();
    const Field& F = *a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix ker(a.field(), a.cols(), a.cols() - pivots.size());
    std::size_t k = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        ker.at(c, k) = 1;
        for (std::size_t j = 0; j < pivots.size(); ++j)
            ker.at(pivots[j], k) = F.neg(r.at(j, c));
        ++k;
    }
    return Subspace::span_of_columns(ker);
}

// Solves A x = b; returns one solution or nullopt.
inline std::optional<std::vector<felem>> solve(const Matrix& a, const std::vector<felem>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = aug.row_reduce();
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<felem> x(a.cols(), 0);
    for (std::size_t j = 0; j < pivots.size(); ++j) x[pivots[j]] = aug.at(j, a.cols());
    return x;
}

}  // namespace hypervar

#endif
