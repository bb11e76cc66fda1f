#ifndef HYPERVAR_MODULE_HPP
#define HYPERVAR_MODULE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervar/field.hpp"
#include "hypervar/linalg.hpp"
#include "hypervar/poly.hpp"

namespace hypervar {

// R = k[t_1..t_d] / (t_1^{u_1}, ..., t_c^{u_c}), c <= d, u_q >= 2.
struct RingSpec {
    FieldPtr field;
    std::size_t d = 0;             // number of variables
    std::size_t c = 0;             // number of relations
    std::vector<std::uint32_t> u;  // exponents u_1..u_c

    RingSpec() = default;
    RingSpec(FieldPtr f, std::size_t d_, std::size_t c_, std::vector<std::uint32_t> u_)
        : field(std::move(f)), d(d_), c(c_), u(std::move(u_)) {
        if (c > d) throw std::invalid_argument("RingSpec: c > d");
        if (u.size() != c) throw std::invalid_argument("RingSpec: exponent count != c");
        for (auto e : u)
            if (e < 2) throw std::invalid_argument("RingSpec: exponent < 2");
    }

    // group algebra of an elementary abelian p-group
    static RingSpec elementary_abelian(FieldPtr f, std::size_t d_) {
        std::uint32_t p = f->characteristic();
        return RingSpec(std::move(f), d_, d_, std::vector<std::uint32_t>(d_, p));
    }

    bool is_elementary_abelian() const {
        if (c != d) return false;
        for (auto e : u)
            if (e != field->characteristic()) return false;
        return true;
    }

    bool same_as(const RingSpec& o) const {
        return field->same_as(*o.field) && d == o.d && c == o.c && u == o.u;
    }

    std::shared_ptr<const PolyContext> t_context() const {
        return PolyContext::t_vars(field, d);
    }
};

struct ValidationReport {
    bool ok = true;
    std::string message;  // names the first failing invariant
};

// A finite-dimensional R-module given by d commuting nilpotent operator
// matrices.
struct ModuleRep {
    RingSpec ring;
    std::size_t m = 0;          // k-dimension
    std::vector<Matrix> ops;    // T_1..T_d, each m x m

    ValidationReport validate() const {
        ValidationReport r;
        auto fail = [&](std::string msg) {
            r.ok = false;
            r.message = std::move(msg);
            return r;
        };
        if (ops.size() != ring.d) return fail("operator count != number of variables");
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (ops[i].rows() != m || ops[i].cols() != m)
                return fail("operator " + std::to_string(i + 1) + " is not " +
                            std::to_string(m) + "x" + std::to_string(m));
            if (!ops[i].field()->same_as(*ring.field))
                return fail("operator " + std::to_string(i + 1) + " over wrong field");
        }
        for (std::size_t i = 0; i < ops.size(); ++i)
            for (std::size_t j = i + 1; j < ops.size(); ++j)
                if (!ops[i].commutes_with(ops[j]))
                    return fail("operators do not commute: pair (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + ")");
        for (std::size_t q = 0; q < ring.c; ++q)
            if (!ops[q].pow(ring.u[q]).is_zero())
                return fail("T" + std::to_string(q + 1) + "^" + std::to_string(ring.u[q]) +
                            " != 0");
        for (std::size_t i = 0; i < ops.size(); ++i)
            if (m > 0 && !ops[i].pow(m).is_zero())
                return fail("T" + std::to_string(i + 1) + " is not nilpotent");
        return r;
    }

    bool is_zero_module() const { return m == 0; }
};

namespace detail {

// Monomial basis of the artinian ring R (requires c = d): exponent
// vectors e with e_q < u_q, in lexicographic order with the first
// variable slowest.
inline std::vector<std::vector<std::uint32_t>> monomial_basis(const RingSpec& ring) {
    if (ring.c != ring.d)
        throw std::invalid_argument("monomial basis requires c = d (artinian ring)");
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<std::uint32_t> e(ring.d, 0);
    while (true) {
        basis.push_back(e);
        std::size_t i = ring.d;
        while (i-- > 0) {
            if (++e[i] < ring.u[i]) break;
            e[i] = 0;
            if (i == 0) return basis;
        }
        if (ring.d == 0) return basis;
    }
}

}  // namespace detail

// The free module R as a module over itself: basis is the standard
// monomials, T_q acts as multiplication by t_q.
inline ModuleRep regular_module(const RingSpec& ring) {
    auto basis = detail::monomial_basis(ring);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    ModuleRep M;
    M.ring = ring;
    M.m = basis.size();
    for (std::size_t q = 0; q < ring.d; ++q) {
        Matrix T(ring.field, M.m, M.m);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto e = basis[j];
            if (++e[q] < ring.u[q]) T.at(index[e], j) = 1;
        }
        M.ops.push_back(std::move(T));
    }
    return M;
}

// R/J for a monomial ideal J given by exponent vectors of its
// generators. Basis: standard monomials outside J.
inline ModuleRep cyclic_module(const RingSpec& ring,
                               const std::vector<std::vector<std::uint32_t>>& gens) {
    auto all = detail::monomial_basis(ring);
    auto divides = [&](const std::vector<std::uint32_t>& g,
                       const std::vector<std::uint32_t>& e) {
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > e[i]) return false;
        return true;
    };
    std::vector<std::vector<std::uint32_t>> basis;
    for (const auto& e : all) {
        bool in_ideal = false;
        for (const auto& g : gens)
            if (divides(g, e)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) basis.push_back(e);
    }
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    ModuleRep M;
    M.ring = ring;
    M.m = basis.size();
    for (std::size_t q = 0; q < ring.d; ++q) {
        Matrix T(ring.field, M.m, M.m);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto e = basis[j];
            if (++e[q] < ring.u[q]) {
                auto it = index.find(e);
                if (it != index.end()) T.at(it->second, j) = 1;
            }
        }
        M.ops.push_back(std::move(T));
    }
    return M;
}

// Cokernel of a seeded random R-linear map R^b -> R^a, realized over k.
// The relation submodule is the k-span of all monomial multiples of the
// chosen columns; the quotient basis is the complement of the pivot
// coordinates of its column echelon form.
inline ModuleRep random_module(const RingSpec& ring, std::size_t a, std::size_t b,
                               std::uint64_t seed) {
    if (ring.c != ring.d)
        throw std::invalid_argument("random_module requires c = d");
    auto basis = detail::monomial_basis(ring);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const std::size_t dimR = basis.size();
    const std::size_t mfree = a * dimR;  // coordinate (slot * dimR + monomial)
    const Field& F = *ring.field;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, F.order() - 1);

    // random relation columns in R^a, sparse-ish
    std::vector<std::vector<felem>> rel_cols;
    for (std::size_t j = 0; j < b; ++j) {
        std::vector<felem> col(mfree, 0);
        for (std::size_t s = 0; s < a; ++s)
            for (std::size_t mo = 0; mo < dimR; ++mo)
                if (rng() % 3 == 0)
                    col[s * dimR + mo] = static_cast<felem>(coeff(rng));
        rel_cols.push_back(std::move(col));
    }

    // monomial multiples: t^e * (slot s, monomial e') = (s, e + e') or 0
    std::vector<std::vector<felem>> span_cols;
    for (const auto& col : rel_cols) {
        for (const auto& e : basis) {
            std::vector<felem> mult(mfree, 0);
            bool nonzero = false;
            for (std::size_t s = 0; s < a; ++s)
                for (std::size_t mo = 0; mo < dimR; ++mo) {
                    felem v = col[s * dimR + mo];
                    if (!v) continue;
                    auto prod = basis[mo];
                    bool dies = false;
                    for (std::size_t q = 0; q < ring.d; ++q) {
                        prod[q] += e[q];
                        if (prod[q] >= ring.u[q]) {
                            dies = true;
                            break;
                        }
                    }
                    if (dies) continue;
                    std::size_t tgt = s * dimR + index[prod];
                    mult[tgt] = F.add(mult[tgt], v);
                    nonzero = true;
                }
            if (nonzero) span_cols.push_back(std::move(mult));
        }
    }

    Matrix span(ring.field, mfree, span_cols.size());
    for (std::size_t j = 0; j < span_cols.size(); ++j)
        for (std::size_t i = 0; i < mfree; ++i) span.at(i, j) = span_cols[j][i];
    Subspace sub = Subspace::span_of_columns(span);

    // quotient coordinates: rows that are not pivots of the echelon basis
    std::vector<bool> is_pivot(mfree, false);
    {
        const Matrix& B = sub.basis();
        for (std::size_t j = 0; j < B.cols(); ++j)
            for (std::size_t i = 0; i < mfree; ++i)
                if (B.at(i, j) != 0) {
                    is_pivot[i] = true;  // first nonzero row of an RREF column is its pivot
                    break;
                }
    }
    std::vector<std::size_t> quot_rows;
    for (std::size_t i = 0; i < mfree; ++i)
        if (!is_pivot[i]) quot_rows.push_back(i);
    std::map<std::size_t, std::size_t> quot_index;
    for (std::size_t i = 0; i < quot_rows.size(); ++i) quot_index[quot_rows[i]] = i;

    // canonical reduction of a vector of R^a modulo the relation span
    const Matrix& B = sub.basis();
    std::vector<std::size_t> pivot_of_col(B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j)
        for (std::size_t i = 0; i < mfree; ++i)
            if (B.at(i, j) != 0) {
                pivot_of_col[j] = i;
                break;
            }
    auto reduce = [&](std::vector<felem> v) {
        for (std::size_t j = 0; j < B.cols(); ++j) {
            felem cc = v[pivot_of_col[j]];
            if (!cc) continue;
            for (std::size_t i = 0; i < mfree; ++i)
                v[i] = F.sub(v[i], F.mul(cc, B.at(i, j)));
        }
        return v;
    };

    ModuleRep M;
    M.ring = ring;
    M.m = quot_rows.size();
    for (std::size_t q = 0; q < ring.d; ++q) {
        Matrix T(ring.field, M.m, M.m);
        for (std::size_t jq = 0; jq < quot_rows.size(); ++jq) {
            std::size_t row = quot_rows[jq];
            std::size_t s = row / dimR, mo = row % dimR;
            std::vector<felem> v(mfree, 0);
            auto prod = basis[mo];
            if (++prod[q] < ring.u[q]) v[s * dimR + index[prod]] = 1;
            v = reduce(std::move(v));
            for (std::size_t i = 0; i < quot_rows.size(); ++i) T.at(i, jq) = v[quot_rows[i]];
        }
        M.ops.push_back(std::move(T));
    }
    return M;
}

}  // namespace hypervar

#endif
