#ifndef HYPERVAR_SMITH_HPP
#define HYPERVAR_SMITH_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hypervar/poly.hpp"

namespace hypervar {

// Dense matrix of univariate polynomials over one field.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(rows * cols, UPoly(field_)) {}

    static PolyMatrix identity(FieldPtr field, std::size_t n) {
        PolyMatrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = UPoly::constant(m.field_, 1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    UPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const UPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("poly matrix mul: shape mismatch");
        PolyMatrix r(x.field_, x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend PolyMatrix operator*(const PolyMatrix& x, const UPoly& s) {
        PolyMatrix r = x;
        for (auto& e : r.a_) e = e * s;
        return r;
    }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!e.is_zero()) return false;
        return true;
    }

    // Evaluation at a field point.
    Matrix evaluate(felem x) const {
        Matrix m(field_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(x);
        return m;
    }

    // Determinant by cofactor expansion; intended for small matrices.
    UPoly det() const {
        if (rows_ != cols_) throw std::invalid_argument("det: not square");
        if (rows_ == 0) return UPoly::constant(field_, 1);
        if (rows_ == 1) return at(0, 0);
        UPoly acc(field_);
        const Field& F = *field_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(0, j).is_zero()) continue;
            PolyMatrix minor(field_, rows_ - 1, cols_ - 1);
            for (std::size_t i = 1; i < rows_; ++i) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < cols_; ++c) {
                    if (c == j) continue;
                    minor.at(i - 1, cc++) = at(i, c);
                }
            }
            UPoly term = at(0, j) * minor.det();
            if (j % 2) term = term.scaled(F.neg(1));
            acc = acc + term;
        }
        return acc;
    }

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<UPoly> a_;
};

// U * diag(d_1, ..., d_k) * V = input, with d_1 | d_2 | ... and U, V
// invertible over k[s] (unit determinants).
struct SmithForm {
    std::vector<UPoly> invariant_factors;  // length min(rows, cols), zeros trailing
    PolyMatrix U;                          // rows x rows
    PolyMatrix V;                          // cols x cols

    PolyMatrix diagonal(FieldPtr field, std::size_t rows, std::size_t cols) const {
        PolyMatrix d(std::move(field), rows, cols);
        for (std::size_t i = 0; i < invariant_factors.size(); ++i)
            d.at(i, i) = invariant_factors[i];
        return d;
    }
};

// Elementary row/column Euclidean reduction. Maintains the invariant
// input = U * A * V throughout; each elementary step multiplies U or V
// by the inverse of the applied elementary matrix.
inline SmithForm smith_normal_form(const PolyMatrix& input) {
    const FieldPtr field = input.field();
    const Field& F = *field;
    const std::size_t rows = input.rows(), cols = input.cols();
    PolyMatrix a = input;
    PolyMatrix u = PolyMatrix::identity(field, rows);
    PolyMatrix v = PolyMatrix::identity(field, cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t r = 0; r < rows; ++r) std::swap(u.at(r, i), u.at(r, j));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t c = 0; c < cols; ++c) std::swap(v.at(i, c), v.at(j, c));
    };
    // row_i -= q * row_j  (so U gets col_j += q * col_i)
    auto row_sub = [&](std::size_t i, std::size_t j, const UPoly& q) {
        for (std::size_t c = 0; c < cols; ++c) a.at(i, c) = a.at(i, c) - q * a.at(j, c);
        for (std::size_t r = 0; r < rows; ++r) u.at(r, j) = u.at(r, j) + q * u.at(r, i);
    };
    // col_i -= q * col_j  (so V gets row_j += q * row_i)
    auto col_sub = [&](std::size_t i, std::size_t j, const UPoly& q) {
        for (std::size_t r = 0; r < rows; ++r) a.at(r, i) = a.at(r, i) - q * a.at(r, j);
        for (std::size_t c = 0; c < cols; ++c) v.at(j, c) = v.at(j, c) + q * v.at(i, c);
    };
    // row_i += row_j
    auto row_add = [&](std::size_t i, std::size_t j) {
        UPoly minus_one = UPoly::constant(field, F.neg(1));
        row_sub(i, j, minus_one);
    };
    auto scale_row = [&](std::size_t i, felem s) {
        for (std::size_t c = 0; c < cols; ++c) a.at(i, c) = a.at(i, c).scaled(s);
        felem s_inv = F.inv(s);
        for (std::size_t r = 0; r < rows; ++r) u.at(r, i) = u.at(r, i).scaled(s_inv);
    };

    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
        while (true) {
            // find minimal-degree nonzero entry in the trailing block
            long long best = -1;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const UPoly& e = a.at(i, j);
                    if (e.is_zero()) continue;
                    if (best < 0 || e.degree() < best) {
                        best = e.degree();
                        bi = i;
                        bj = j;
                    }
                }
            if (best < 0) break;  // trailing block zero; done with this pivot
            if (bi != t) swap_rows(t, bi);
            if (bj != t) swap_cols(t, bj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a.at(i, t).is_zero()) continue;
                auto [q, r] = a.at(i, t).divmod(a.at(t, t));
                row_sub(i, t, q);
                if (!r.is_zero()) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a.at(t, j).is_zero()) continue;
                auto [q, r] = a.at(t, j).divmod(a.at(t, t));
                col_sub(j, t, q);
                if (!r.is_zero()) dirty = true;
            }
            if (dirty) continue;  // remainders left; pick a smaller pivot

            // pivot must divide every remaining entry for the chain
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    if (!a.at(i, j).divmod(a.at(t, t)).second.is_zero()) {
                        row_add(t, i);
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (!a.at(t, t).is_zero() && a.at(t, t).leading() != 1)
            scale_row(t, F.inv(a.at(t, t).leading()));
    }

    SmithForm out;
    out.invariant_factors.reserve(k);
    for (std::size_t t = 0; t < k; ++t) out.invariant_factors.push_back(a.at(t, t));
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

// gcd (monic) of all r x r minors; zero polynomial when all vanish.
inline UPoly minors_gcd(const PolyMatrix& m, std::size_t r) {
    if (r == 0) return UPoly::constant(m.field(), 1);
    if (r > m.rows() || r > m.cols()) return UPoly(m.field());
    std::vector<std::size_t> ri(r), ci(r);
    UPoly acc(m.field());
    // iterate over r-subsets of rows and columns
    std::vector<std::size_t> rsel(r), csel(r);
    for (std::size_t i = 0; i < r; ++i) rsel[i] = i;
    auto next_subset = [](std::vector<std::size_t>& s, std::size_t n) {
        std::size_t r2 = s.size();
        std::size_t i = r2;
        while (i-- > 0) {
            if (s[i] + (r2 - i) < n) {
                ++s[i];
                for (std::size_t j = i + 1; j < r2; ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        for (std::size_t i = 0; i < r; ++i) csel[i] = i;
        do {
            PolyMatrix sub(m.field(), r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
            UPoly d = sub.det();
            if (!d.is_zero()) acc = acc.is_zero() ? d.monic() : upoly_gcd(acc, d);
            if (acc.degree() == 0) return acc;  // already a unit
        } while (next_subset(csel, m.cols()));
    } while (next_subset(rsel, m.rows()));
    return acc;
}

}  // namespace hypervar

#endif
