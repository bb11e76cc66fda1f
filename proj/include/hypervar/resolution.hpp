#ifndef HYPERVAR_RESOLUTION_HPP
#define HYPERVAR_RESOLUTION_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypervar/koszul.hpp"
#include "hypervar/linalg.hpp"
#include "hypervar/module.hpp"
#include "hypervar/poly.hpp"

namespace hypervar {

// Coefficient polynomials g_1..g_c in the t-variables defining the
// hypersurface element f = sum g_q t_q^{u_q}.
struct HypersurfaceCoeffs {
    RingSpec ring;
    std::vector<MPoly> g;

    HypersurfaceCoeffs() = default;
    HypersurfaceCoeffs(RingSpec r, std::vector<MPoly> coeffs)
        : ring(std::move(r)), g(std::move(coeffs)) {
        if (g.size() != ring.c)
            throw std::invalid_argument("HypersurfaceCoeffs: need one g per relation");
    }

    // constant coefficients a_1..a_c
    static HypersurfaceCoeffs from_point(const RingSpec& r, const std::vector<felem>& a) {
        if (a.size() != r.c)
            throw std::invalid_argument("HypersurfaceCoeffs: point dimension != c");
        auto ctx = r.t_context();
        std::vector<MPoly> g;
        for (felem ai : a) g.push_back(MPoly::constant(ctx, ai));
        return HypersurfaceCoeffs(r, std::move(g));
    }

    MPoly f() const {
        auto ctx = g.empty() ? ring.t_context() : g[0].context();
        MPoly acc(ctx);
        for (std::size_t q = 0; q < g.size(); ++q)
            acc = acc + g[q] * MPoly::variable(ctx, q, ring.u[q]);
        return acc;
    }

    bool regular() const { return !f().is_zero(); }

    std::vector<felem> constant_terms() const { return constant_term_vector(g); }
};

// Basis label in the hypersurface complex: exterior subset S plus
// divided-power index i (degree |S| + 2i).
struct BasisLabel {
    SubsetMask mask = 0;
    std::uint32_t power = 0;
};

// A finite complex of finite-dimensional vector spaces,
// D_n : degree n -> degree n-1, with labeled bases.
struct VectorComplex {
    std::vector<std::size_t> dims;             // dims[n], n = 0..N
    std::vector<Matrix> diffs;                 // diffs[n] = D_n for n = 1..N (diffs[0] unused)
    std::vector<std::vector<BasisLabel>> labels;

    std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }

    void check_square_zero() const {
        for (std::size_t n = 2; n < diffs.size(); ++n)
            if (!(diffs[n - 1] * diffs[n]).is_zero())
                throw std::logic_error("complex differential does not square to zero at degree " +
                                       std::to_string(n));
    }

    // dim H_n; valid for n < top_degree (needs D_{n+1}).
    std::size_t homology_dim(std::size_t n) const {
        std::size_t rank_in = (n + 1 < diffs.size()) ? diffs[n + 1].rank() : 0;
        std::size_t rank_out = (n >= 1 && n < diffs.size()) ? diffs[n].rank() : 0;
        return dims[n] - rank_out - rank_in;
    }
};

struct BettiTable {
    std::vector<std::size_t> betti;  // beta_0..beta_N
    bool stable_period_detected = false;
    std::pair<std::size_t, std::size_t> stable_pair{0, 0};  // (beta_even, beta_odd) past degree d

    bool periodic_from(std::size_t start) const {
        for (std::size_t i = start; i + 2 < betti.size(); ++i)
            if (betti[i + 2] != betti[i]) return false;
        return true;
    }
};

namespace detail {

inline std::vector<BasisLabel> degree_basis(std::size_t d, std::size_t n) {
    std::vector<BasisLabel> out;
    for (SubsetMask mask = 0; mask < (SubsetMask{1} << d); ++mask) {
        std::size_t k = static_cast<std::size_t>(std::popcount(mask));
        if (k <= n && (n - k) % 2 == 0)
            out.push_back({mask, static_cast<std::uint32_t>((n - k) / 2)});
    }
    return out;
}

// position (1-based) of variable index p (0-based) within ascending mask
inline int position_in_mask(SubsetMask mask, int p) {
    SubsetMask below = mask & ((SubsetMask{1} << p) - 1);
    return std::popcount(below) + 1;
}

}  // namespace detail

// Koszul complex on t_1..t_d tensored with M: degree n has one copy of
// M per n-subset; blocks are +/- T_p by the fixed sign convention.
inline VectorComplex koszul_on_module(const ModuleRep& M) {
    auto check = M.validate();
    if (!check.ok) throw std::invalid_argument("koszul_on_module: " + check.message);
    const std::size_t d = M.ring.d;
    const std::size_t m = M.m;
    VectorComplex X;
    std::vector<std::vector<SubsetMask>> bases(d + 1);
    std::vector<std::map<SubsetMask, std::size_t>> pos(d + 1);
    for (SubsetMask mask = 0; mask < (SubsetMask{1} << d); ++mask) {
        std::size_t k = static_cast<std::size_t>(std::popcount(mask));
        pos[k][mask] = bases[k].size();
        bases[k].push_back(mask);
    }
    for (std::size_t n = 0; n <= d; ++n) {
        X.dims.push_back(bases[n].size() * m);
        std::vector<BasisLabel> lbl;
        for (SubsetMask mask : bases[n]) lbl.push_back({mask, 0});
        X.labels.push_back(std::move(lbl));
    }
    X.diffs.resize(d + 1, Matrix(M.ring.field, 0, 0));
    for (std::size_t n = 1; n <= d; ++n) {
        Matrix D(M.ring.field, X.dims[n - 1], X.dims[n]);
        for (std::size_t j = 0; j < bases[n].size(); ++j) {
            SubsetMask mask = bases[n][j];
            for (SubsetMask bit = mask; bit; bit &= bit - 1) {
                SubsetMask lowest = bit & (~bit + 1);
                int p = std::countr_zero(lowest);
                int sign = (detail::position_in_mask(mask, p) % 2) ? 1 : -1;
                Matrix blk = (sign > 0) ? M.ops[p] : M.ops[p].negated();
                D.set_block(pos[n - 1][mask & ~lowest] * m, j * m, blk);
            }
        }
        X.diffs[n] = std::move(D);
    }
    return X;
}

namespace detail {

// Shared builder for the hypersurface resolution tensored with M.
// Allows f = 0 (the complex is still a complex); the public operation
// enforces regularity.
inline VectorComplex hypersurface_complex_impl(const ModuleRep& M,
                                               const HypersurfaceCoeffs& coeffs,
                                               std::size_t N) {
    auto check = M.validate();
    if (!check.ok) throw std::invalid_argument("hypersurface_complex: " + check.message);
    if (!coeffs.ring.same_as(M.ring))
        throw std::invalid_argument("hypersurface_complex: ring mismatch");
    const std::size_t d = M.ring.d;
    const std::size_t c = M.ring.c;
    const std::size_t m = M.m;
    const Field& F = *M.ring.field;

    // g_q(T) * T_q^{u_q - 1}, computed once
    std::vector<Matrix> gq_blocks;
    for (std::size_t q = 0; q < c; ++q) {
        Matrix gT = (m > 0) ? coeffs.g[q].evaluate_at_operators_unchecked(M.ops)
                            : Matrix(M.ring.field, 0, 0);
        gq_blocks.push_back(m > 0 ? gT * M.ops[q].pow(M.ring.u[q] - 1)
                                  : Matrix(M.ring.field, 0, 0));
    }

    VectorComplex X;
    std::vector<std::vector<BasisLabel>> bases(N + 1);
    std::vector<std::map<SubsetMask, std::size_t>> pos(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        bases[n] = degree_basis(d, n);
        for (std::size_t i = 0; i < bases[n].size(); ++i) pos[n][bases[n][i].mask] = i;
        X.dims.push_back(bases[n].size() * m);
        X.labels.push_back(bases[n]);
    }
    X.diffs.resize(N + 1, Matrix(M.ring.field, 0, 0));
    for (std::size_t n = 1; n <= N; ++n) {
        Matrix D(M.ring.field, X.dims[n - 1], X.dims[n]);
        for (std::size_t j = 0; j < bases[n].size(); ++j) {
            const BasisLabel& lbl = bases[n][j];
            SubsetMask mask = lbl.mask;
            int sz = std::popcount(mask);
            // Koszul part: remove p from S
            for (SubsetMask bit = mask; bit; bit &= bit - 1) {
                SubsetMask lowest = bit & (~bit + 1);
                int p = std::countr_zero(lowest);
                int sign = (position_in_mask(mask, p) % 2) ? 1 : -1;
                Matrix blk = (sign > 0) ? M.ops[p] : M.ops[p].negated();
                D.set_block(pos[n - 1][mask & ~lowest] * m, j * m, blk);
            }
            // Tate part: adjoin q, lower the divided power
            if (lbl.power >= 1) {
                for (std::size_t q = 0; q < c; ++q) {
                    if (mask & (SubsetMask{1} << q)) continue;
                    int sign = merge_sign(mask, SubsetMask{1} << q);
                    if (sz % 2) sign = -sign;  // Leibniz (-1)^{|S|}
                    Matrix blk = (sign > 0) ? gq_blocks[q] : gq_blocks[q].negated();
                    D.set_block(pos[n - 1][mask | (SubsetMask{1} << q)] * m, j * m, blk);
                }
            }
        }
        X.diffs[n] = std::move(D);
    }
    X.check_square_zero();
    return X;
}

}  // namespace detail

// The resolution K<y | dy = sum g_q t_q^{u_q - 1} x_q> of k over
// P/(f) tensored with M; its degree-n homology is Tor_n^{P/(f)}(k, M).
inline VectorComplex hypersurface_complex(const ModuleRep& M, const HypersurfaceCoeffs& coeffs,
                                          std::size_t N) {
    if (!coeffs.regular())
        throw std::invalid_argument("hypersurface_complex: f = 0 is not regular");
    return detail::hypersurface_complex_impl(M, coeffs, N);
}

inline std::size_t default_max_degree(const RingSpec& ring) { return 2 * ring.d + 4; }

namespace detail {

inline BettiTable betti_from_complex(const VectorComplex& X, std::size_t N, std::size_t d) {
    BettiTable t;
    for (std::size_t n = 0; n <= N; ++n) t.betti.push_back(X.homology_dim(n));
    if (t.betti.size() >= d + 3 && t.periodic_from(d)) {
        t.stable_period_detected = true;
        std::size_t i = d;
        if (i % 2) t.stable_pair = {t.betti[i + 1], t.betti[i]};
        else t.stable_pair = {t.betti[i], t.betti[i + 1]};
    }
    return t;
}

}  // namespace detail

// Betti numbers of M over the polynomial ring P, via Koszul homology.
inline BettiTable betti_over_P(const ModuleRep& M, std::size_t N) {
    VectorComplex X = koszul_on_module(M);
    BettiTable t;
    for (std::size_t n = 0; n <= N; ++n)
        t.betti.push_back(n <= M.ring.d ? X.homology_dim(n) : 0);
    return t;
}

// Betti numbers of M over the hypersurface P/(f); the table becomes
// 2-periodic past degree d.
inline BettiTable betti_over_hypersurface(const ModuleRep& M, const HypersurfaceCoeffs& coeffs,
                                          std::size_t N) {
    if (!coeffs.regular())
        throw std::invalid_argument("betti_over_hypersurface: f = 0 is not regular");
    VectorComplex X = detail::hypersurface_complex_impl(M, coeffs, N + 1);
    return detail::betti_from_complex(X, N, M.ring.d);
}

// Checks the tensor decomposition of Tor over P/(f) for f in n*I:
// beta_i^{P/(f)} = sum_j beta_{i-2j}^P.
inline bool betti_tensor_formula_check(const ModuleRep& M, const HypersurfaceCoeffs& coeffs,
                                       std::size_t N) {
    for (const auto& gq : coeffs.g)
        if (gq.constant_term() != 0)
            throw std::invalid_argument("tensor formula: coefficients must have zero constant term");
    if (!coeffs.regular())
        throw std::invalid_argument("tensor formula: f = 0 is not regular");
    if (M.m == 0) return true;
    BettiTable over_f = betti_over_hypersurface(M, coeffs, N);
    BettiTable over_p = betti_over_P(M, N);
    for (std::size_t i = 0; i <= N; ++i) {
        std::size_t expect = 0;
        for (std::size_t j = 0; 2 * j <= i; ++j) expect += over_p.betti[i - 2 * j];
        if (over_f.betti[i] != expect) return false;
    }
    return true;
}

// The 2-periodic tail of the hypersurface resolution: A = D_{d+2},
// B = D_{d+1}, both of size r = m * 2^{d-1}.
struct StablePair {
    Matrix A;
    Matrix B;
    std::size_t r = 0;
};

// Numeric stable matrices at a coefficient choice. Accepts f = 0 (the
// all-zero point); the blocks are defined regardless.
inline StablePair stable_matrices(const ModuleRep& M, const HypersurfaceCoeffs& coeffs) {
    const std::size_t d = M.ring.d;
    VectorComplex X = detail::hypersurface_complex_impl(M, coeffs, d + 2);
    StablePair s;
    s.A = X.diffs[d + 2];
    s.B = X.diffs[d + 1];
    s.r = (d == 0) ? M.m : M.m << (d - 1);
    return s;
}

// C(M)(a) = [[0, A], [B, 0]], a square matrix of size 2r whose rank
// detects support membership: rank < r iff a is in the support set.
inline Matrix c_matrix(const ModuleRep& M, const std::vector<felem>& point) {
    StablePair s = stable_matrices(M, HypersurfaceCoeffs::from_point(M.ring, point));
    const std::size_t r = s.r;
    Matrix C(M.ring.field, 2 * r, 2 * r);
    C.set_block(0, r, s.A);
    C.set_block(r, 0, s.B);
    return C;
}

// ---------------------------------------------------------------------------
// The symbolic matrix factorization over k[s]: entry table for the
// 2-periodic resolution of k[s] over Q~ = P[s]/(f~), c = d.

// rows/cols indexed by h in {0,1}^c, ordered by weight then
// lexicographically (h_1 most significant).
inline std::vector<std::vector<std::uint32_t>> weight_lex_sequences(std::size_t c,
                                                                    bool odd_weight) {
    std::vector<std::vector<std::uint32_t>> all;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << c); ++code) {
        std::vector<std::uint32_t> h(c);
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < c; ++i) {
            h[i] = (code >> (c - 1 - i)) & 1;  // h_1 first
            w += h[i];
        }
        if ((w % 2 == 1) == odd_weight) all.push_back(std::move(h));
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        std::uint32_t wx = 0, wy = 0;
        for (auto v : x) wx += v;
        for (auto v : y) wy += v;
        if (wx != wy) return wx < wy;
        return x < y;
    });
    return all;
}

// Symbolic A and B over k[t_1..t_d, s_1..s_c] per the explicit entry
// formula; restricted to c = d where the stable rank readings agree.
struct SymbolicStablePair {
    std::vector<std::vector<MPoly>> A;  // rows: odd weight, cols: even weight
    std::vector<std::vector<MPoly>> B;  // rows: even weight, cols: odd weight
    std::vector<std::vector<std::uint32_t>> odd_index;
    std::vector<std::vector<std::uint32_t>> even_index;
    PolyContextPtr ctx;                 // t's then s's
};

inline SymbolicStablePair example_matrices(const RingSpec& ring) {
    if (ring.c != ring.d)
        throw std::invalid_argument("example_matrices requires c = d");
    if (ring.d > 6) throw std::invalid_argument("example_matrices: d > 6");
    const std::size_t c = ring.c;
    auto ctx = PolyContext::ts_vars(ring.field, ring.d, c);
    SymbolicStablePair out;
    out.ctx = ctx;
    out.odd_index = weight_lex_sequences(c, true);
    out.even_index = weight_lex_sequences(c, false);
    const Field& F = *ring.field;

    auto entry = [&](const std::vector<std::uint32_t>& h,
                     const std::vector<std::uint32_t>& j) -> MPoly {
        std::uint32_t diff = 0;
        std::size_t p = 0;
        for (std::size_t i = 0; i < c; ++i)
            if (h[i] != j[i]) {
                ++diff;
                p = i;
            }
        if (diff != 1) return MPoly(ctx);
        std::uint32_t n = 0;
        for (std::size_t i = 0; i < p; ++i) n += j[i];
        MPoly e(ctx);
        if (h[p] == 1 && j[p] == 0) {
            e = MPoly::variable(ctx, ring.d + p) *
                MPoly::variable(ctx, p, ring.u[p] - 1);
        } else {
            e = MPoly::variable(ctx, p);
        }
        if (n % 2) e = e.negated();
        (void)F;
        return e;
    };

    for (const auto& h : out.odd_index) {
        std::vector<MPoly> row;
        for (const auto& j : out.even_index) row.push_back(entry(h, j));
        out.A.push_back(std::move(row));
    }
    for (const auto& h : out.even_index) {
        std::vector<MPoly> row;
        for (const auto& j : out.odd_index) row.push_back(entry(h, j));
        out.B.push_back(std::move(row));
    }
    return out;
}

// Symbolic stable differentials from the resolution construction itself
// (g_q = s_q), with basis labels given by subset masks; used to verify
// the entry table against the complex up to diagonal signs.
struct SymbolicComplexPair {
    std::vector<std::vector<MPoly>> even_to_odd;  // differential from even subsets to odd
    std::vector<std::vector<MPoly>> odd_to_even;
    std::vector<SubsetMask> even_masks;
    std::vector<SubsetMask> odd_masks;
    PolyContextPtr ctx;
};

inline SymbolicComplexPair symbolic_stable_differentials(const RingSpec& ring) {
    if (ring.c != ring.d)
        throw std::invalid_argument("symbolic stable differentials require c = d");
    const std::size_t d = ring.d;
    auto ctx = PolyContext::ts_vars(ring.field, d, ring.c);
    SymbolicComplexPair out;
    out.ctx = ctx;
    for (SubsetMask mask = 0; mask < (SubsetMask{1} << d); ++mask) {
        if (std::popcount(mask) % 2) out.odd_masks.push_back(mask);
        else out.even_masks.push_back(mask);
    }
    auto build = [&](const std::vector<SubsetMask>& src, const std::vector<SubsetMask>& dst) {
        std::map<SubsetMask, std::size_t> dpos;
        for (std::size_t i = 0; i < dst.size(); ++i) dpos[dst[i]] = i;
        std::vector<std::vector<MPoly>> mat(dst.size(),
                                            std::vector<MPoly>(src.size(), MPoly(ctx)));
        for (std::size_t j = 0; j < src.size(); ++j) {
            SubsetMask mask = src[j];
            int sz = std::popcount(mask);
            for (SubsetMask bit = mask; bit; bit &= bit - 1) {
                SubsetMask lowest = bit & (~bit + 1);
                int p = std::countr_zero(lowest);
                int sign = (detail::position_in_mask(mask, p) % 2) ? 1 : -1;
                MPoly e = MPoly::variable(ctx, p);
                if (sign < 0) e = e.negated();
                mat[dpos[mask & ~lowest]][j] = mat[dpos[mask & ~lowest]][j] + e;
            }
            for (std::size_t q = 0; q < ring.c; ++q) {
                if (mask & (SubsetMask{1} << q)) continue;
                int sign = merge_sign(mask, SubsetMask{1} << q);
                if (sz % 2) sign = -sign;
                MPoly e = MPoly::variable(ctx, d + q) * MPoly::variable(ctx, q, ring.u[q] - 1);
                if (sign < 0) e = e.negated();
                mat[dpos[mask | (SubsetMask{1} << q)]][j] =
                    mat[dpos[mask | (SubsetMask{1} << q)]][j] + e;
            }
        }
        return mat;
    };
    out.even_to_odd = build(out.even_masks, out.odd_masks);
    out.odd_to_even = build(out.odd_masks, out.even_masks);
    return out;
}

// Verifies that the entry-table matrices agree with the complex's
// stable differentials after matching bases (h <-> subset mask) up to
// one global diagonal sign vector epsilon indexed by {0,1}^c.
inline bool example_matrices_agree(const RingSpec& ring) {
    SymbolicStablePair tbl = example_matrices(ring);
    SymbolicComplexPair cx = symbolic_stable_differentials(ring);
    const std::size_t c = ring.c;
    const Field& F = *ring.field;

    auto mask_of = [&](const std::vector<std::uint32_t>& h) {
        SubsetMask m = 0;
        for (std::size_t i = 0; i < c; ++i)
            if (h[i]) m |= SubsetMask{1} << i;
        return m;
    };
    std::map<SubsetMask, std::size_t> even_pos, odd_pos;
    for (std::size_t i = 0; i < cx.even_masks.size(); ++i) even_pos[cx.even_masks[i]] = i;
    for (std::size_t i = 0; i < cx.odd_masks.size(); ++i) odd_pos[cx.odd_masks[i]] = i;

    // epsilon[h] in {+1, -1}, determined by propagation from epsilon[0] = +1
    std::map<SubsetMask, int> eps;
    eps[0] = 1;
    bool progress = true;
    auto relate = [&](SubsetMask hm, SubsetMask jm, const MPoly& table_entry,
                      const MPoly& cx_entry) -> bool {
        // table = eps_h * eps_j * cx  must hold entrywise
        if (table_entry.is_zero() != cx_entry.is_zero()) return false;
        if (table_entry.is_zero()) return true;
        int rel;
        if (table_entry == cx_entry) rel = 1;
        else if (table_entry == cx_entry.negated()) rel = -1;
        else return false;
        auto ih = eps.find(hm), ij = eps.find(jm);
        if (ih != eps.end() && ij != eps.end()) {
            if (ih->second * ij->second != rel) return false;
        } else if (ih != eps.end()) {
            eps[jm] = rel * ih->second;
            progress = true;
        } else if (ij != eps.end()) {
            eps[hm] = rel * ij->second;
            progress = true;
        }
        return true;
    };

    (void)F;
    for (int pass = 0; pass < 3 || progress; ++pass) {
        progress = false;
        for (std::size_t i = 0; i < tbl.odd_index.size(); ++i)
            for (std::size_t j = 0; j < tbl.even_index.size(); ++j) {
                SubsetMask hm = mask_of(tbl.odd_index[i]);
                SubsetMask jm = mask_of(tbl.even_index[j]);
                if (!relate(hm, jm, tbl.A[i][j], cx.even_to_odd[odd_pos[hm]][even_pos[jm]]))
                    return false;
            }
        for (std::size_t i = 0; i < tbl.even_index.size(); ++i)
            for (std::size_t j = 0; j < tbl.odd_index.size(); ++j) {
                SubsetMask hm = mask_of(tbl.even_index[i]);
                SubsetMask jm = mask_of(tbl.odd_index[j]);
                if (!relate(hm, jm, tbl.B[i][j], cx.odd_to_even[even_pos[hm]][odd_pos[jm]]))
                    return false;
            }
        if (pass > 8) break;
    }
    return eps.size() == (std::size_t{1} << c);
}

}  // namespace hypervar

#endif
