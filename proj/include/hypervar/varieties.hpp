#ifndef HYPERVAR_VARIETIES_HPP
#define HYPERVAR_VARIETIES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervar/linalg.hpp"
#include "hypervar/module.hpp"
#include "hypervar/poly.hpp"
#include "hypervar/resolution.hpp"
#include "hypervar/smith.hpp"

namespace hypervar {

// ---------------------------------------------------------------------------
// Nilpotent-operator freeness tests.

// alpha with alpha^n = 0 acts as multiplication by x on a k[x]/(x^n)
// module; the module is free iff alpha V = Ker(alpha^{n-1}), which in
// rank terms is rank(alpha) + rank(alpha^{n-1}) = dim V.
inline bool nilpotent_free_rank_test(const Matrix& alpha, std::uint32_t n) {
    if (!alpha.pow(n).is_zero())
        throw std::invalid_argument("freeness test: alpha^n != 0");
    return alpha.rank() + alpha.pow(n - 1).rank() == alpha.rows();
}

// Evaluates the equivalent characterizations via explicit subspace
// comparisons and checks they agree with the rank-count test; returns
// the common verdict only when all agree.
struct NilpotentConditionsReport {
    bool cond1 = false;  // alpha V = Ker alpha^{n-1}
    bool cond2 = false;  // alpha^{n-1} V = Ker alpha
    bool cond3 = false;  // alpha^i V = Ker alpha^{n-i} for all i
    bool rank_test = false;
    bool all_agree() const {
        return cond1 == cond2 && cond2 == cond3 && cond3 == rank_test;
    }
};

inline NilpotentConditionsReport nilpotent_conditions(const Matrix& alpha, std::uint32_t n) {
    if (!alpha.pow(n).is_zero())
        throw std::invalid_argument("nilpotent conditions: alpha^n != 0");
    NilpotentConditionsReport rep;
    rep.cond1 = image_basis(alpha) == kernel_basis(alpha.pow(n - 1));
    rep.cond2 = image_basis(alpha.pow(n - 1)) == kernel_basis(alpha);
    rep.cond3 = true;
    for (std::uint32_t i = 1; i < n; ++i)
        if (!(image_basis(alpha.pow(i)) == kernel_basis(alpha.pow(n - i)))) {
            rep.cond3 = false;
            break;
        }
    if (n == 1) rep.cond3 = rep.cond1;  // vacuous tower: fall back to condition (1)
    rep.rank_test = nilpotent_free_rank_test(alpha, n);
    return rep;
}

inline bool nilpotent_conditions_agree(const Matrix& alpha, std::uint32_t n) {
    return nilpotent_conditions(alpha, n).all_agree();
}

// Jordan block sizes of a nilpotent matrix from the kernel filtration.
inline std::vector<std::size_t> jordan_block_sizes(const Matrix& alpha) {
    const std::size_t m = alpha.rows();
    std::vector<std::size_t> ker_dims;  // dim Ker alpha^j for j = 0..m
    ker_dims.push_back(0);
    for (std::size_t j = 1; j <= m; ++j) {
        ker_dims.push_back(m - alpha.pow(j).rank());
        if (ker_dims.back() == m) break;
    }
    // number of blocks of size >= j equals ker_dims[j] - ker_dims[j-1]
    std::vector<std::size_t> at_least;
    for (std::size_t j = 1; j < ker_dims.size(); ++j)
        at_least.push_back(ker_dims[j] - ker_dims[j - 1]);
    std::vector<std::size_t> sizes;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
        std::size_t next = (j + 1 < at_least.size()) ? at_least[j + 1] : 0;
        for (std::size_t b = 0; b < at_least[j] - next; ++b) sizes.push_back(j + 1);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

// Freeness of M restricted along the cyclic shifted subgroup defined by
// u in n (elementary-abelian ring only): alpha = u(T), free iff
// rank(alpha) + rank(alpha^{p-1}) = m.
inline bool is_free_over_cyclic(const ModuleRep& M, const MPoly& u) {
    if (!M.ring.is_elementary_abelian())
        throw std::invalid_argument("is_free_over_cyclic: ring is not elementary abelian");
    if (u.constant_term() != 0)
        throw std::invalid_argument("is_free_over_cyclic: u has nonzero constant term");
    const std::uint32_t p = M.ring.field->characteristic();
    if (M.m == 0) return true;
    Matrix alpha = u.evaluate_at_operators_unchecked(M.ops);
    return nilpotent_free_rank_test(alpha, p);
}

// Maximal image at exponent p: alpha V = Ker(alpha^{p-1}), evaluated
// literally (degenerate nilpotency degrees included).
inline bool maximal_image(const Matrix& alpha, std::uint32_t p) {
    if (!alpha.pow(p).is_zero())
        throw std::invalid_argument("maximal_image: alpha^p != 0");
    return alpha.rank() + alpha.pow(p - 1).rank() == alpha.rows();
}

struct OperatorTriple {
    Matrix alpha, beta, gamma;
    std::uint32_t p = 0;

    void validate() const {
        if (!alpha.commutes_with(beta) || !alpha.commutes_with(gamma) ||
            !beta.commutes_with(gamma))
            throw std::invalid_argument("operator triple: operators do not commute");
        if (!alpha.pow(p).is_zero() || !beta.pow(p).is_zero())
            throw std::invalid_argument("operator triple: alpha^p or beta^p nonzero");
    }
};

// maximal_image(alpha) must equal maximal_image(alpha + beta*gamma).
inline bool operators_theorem_check(const OperatorTriple& t) {
    t.validate();
    return maximal_image(t.alpha, t.p) ==
           maximal_image(t.alpha + t.beta * t.gamma, t.p);
}

// ---------------------------------------------------------------------------
// Scalar extension: reinterpret a module over the prime field inside an
// extension of it (entries map through the prime-subfield embedding).
inline ModuleRep extend_scalars(const ModuleRep& M, const FieldPtr& big) {
    if (big->same_as(*M.ring.field)) return M;
    if (M.ring.field->degree() != 1 ||
        big->characteristic() != M.ring.field->characteristic())
        throw std::invalid_argument(
            "extend_scalars: only prime-to-extension embeddings are supported");
    ModuleRep out;
    out.ring = RingSpec(big, M.ring.d, M.ring.c, M.ring.u);
    out.m = M.m;
    for (const auto& T : M.ops) {
        Matrix S(big, M.m, M.m);
        for (std::size_t i = 0; i < M.m; ++i)
            for (std::size_t j = 0; j < M.m; ++j)
                if (T.at(i, j)) S.at(i, j) = big->from_digits({T.at(i, j)});
        out.ops.push_back(std::move(S));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Support sets.

enum class MembershipMethod { homology, rank, both };

struct PointEvidence {
    std::vector<felem> point;
    bool member = false;
    std::size_t beta_d = 0;
    std::size_t beta_d1 = 0;
    std::size_t rank_c = 0;
    std::size_t r = 0;
    bool methods_agree = true;
};

namespace detail {

inline bool is_zero_point(const std::vector<felem>& a) {
    return std::all_of(a.begin(), a.end(), [](felem x) { return x == 0; });
}

}  // namespace detail

// Membership of a point of k^c in the homological support set, with the
// evidence of both membership tests. At the origin the definition
// itself decides (0 is a member exactly when M != 0); both evidence
// paths are still computed and must agree with that verdict.
inline PointEvidence support_membership(const ModuleRep& M, const std::vector<felem>& a,
                                        MembershipMethod method = MembershipMethod::both) {
    if (a.size() != M.ring.c)
        throw std::invalid_argument("support_membership: point dimension != c");
    const std::size_t d = M.ring.d;
    PointEvidence ev;
    ev.point = a;
    ev.r = (M.ring.d == 0) ? M.m : M.m << (M.ring.d - 1);
    const bool origin = detail::is_zero_point(a);

    bool member_homology = false, member_rank = false;
    if (method != MembershipMethod::rank) {
        VectorComplex X = detail::hypersurface_complex_impl(
            M, HypersurfaceCoeffs::from_point(M.ring, a), d + 3);
        ev.beta_d = X.homology_dim(d);
        ev.beta_d1 = X.homology_dim(d + 1);
        member_homology = ev.beta_d + ev.beta_d1 > 0;
    }
    if (method != MembershipMethod::homology) {
        Matrix C = c_matrix(M, a);
        ev.rank_c = C.rank();
        member_rank = ev.rank_c < ev.r;
    }
    switch (method) {
        case MembershipMethod::homology:
            ev.member = member_homology;
            break;
        case MembershipMethod::rank:
            ev.member = member_rank;
            break;
        case MembershipMethod::both:
            ev.methods_agree = (member_homology == member_rank);
            ev.member = member_homology;
            break;
    }
    if (origin) ev.member = M.m > 0;  // the definition's explicit "union {0}" clause
    return ev;
}

struct SupportReport {
    std::vector<PointEvidence> points;
    std::size_t member_count = 0;
    std::uint64_t field_order = 0;
    bool methods_agree = true;
};

inline std::uint64_t ipow_u64(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::vector<std::vector<felem>> enumerate_points(const Field& F, std::size_t n) {
    std::vector<std::vector<felem>> pts;
    std::vector<felem> all = F.enumerate();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<felem> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = all[idx[i]];
        pts.push_back(std::move(p));
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (++idx[i] < all.size()) {
                done = false;
                break;
            }
            idx[i] = 0;
            if (i == 0) break;
        }
        if (n == 0 || done) break;
    }
    return pts;
}

inline SupportReport support_enumerate(const ModuleRep& M, const FieldPtr& enum_field,
                                       std::uint64_t max_points = 1000000) {
    if (!enum_field->same_as(*M.ring.field))
        throw std::invalid_argument("support_enumerate: enumeration field must match module field");
    std::uint64_t total = ipow_u64(enum_field->order(), static_cast<std::uint32_t>(M.ring.c));
    if (total > max_points)
        throw std::invalid_argument("support_enumerate: point count exceeds bound");
    SupportReport rep;
    rep.field_order = enum_field->order();
    for (auto& a : enumerate_points(*enum_field, M.ring.c)) {
        PointEvidence ev = support_membership(M, a, MembershipMethod::both);
        rep.member_count += ev.member ? 1 : 0;
        rep.methods_agree = rep.methods_agree && ev.methods_agree;
        rep.points.push_back(std::move(ev));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Rank varieties (elementary abelian rings).

struct RankPoint {
    std::vector<felem> point;
    bool free = false;
};

struct RankReport {
    std::vector<RankPoint> points;
    std::size_t nonfree_count = 0;
    std::uint64_t field_order = 0;
};

inline MPoly linear_form(const RingSpec& ring, const std::vector<felem>& a) {
    auto ctx = ring.t_context();
    MPoly u(ctx);
    for (std::size_t i = 0; i < a.size(); ++i)
        u = u + MPoly::variable(ctx, i).scaled(a[i]);
    return u;
}

inline RankReport rank_variety_enumerate(const ModuleRep& M, const FieldPtr& enum_field,
                                         std::uint64_t max_points = 1000000) {
    if (!M.ring.is_elementary_abelian())
        throw std::invalid_argument("rank_variety_enumerate: ring is not elementary abelian");
    if (!enum_field->same_as(*M.ring.field))
        throw std::invalid_argument("rank_variety_enumerate: field mismatch");
    std::uint64_t total = ipow_u64(enum_field->order(), static_cast<std::uint32_t>(M.ring.d));
    if (total > max_points)
        throw std::invalid_argument("rank_variety_enumerate: point count exceeds bound");
    RankReport rep;
    rep.field_order = enum_field->order();
    for (auto& a : enumerate_points(*enum_field, M.ring.d)) {
        RankPoint rp;
        rp.point = a;
        if (detail::is_zero_point(a))
            rp.free = (M.m == 0);  // origin is in the rank variety by definition
        else
            rp.free = is_free_over_cyclic(M, linear_form(M.ring, a));
        rep.nonfree_count += rp.free ? 0 : 1;
        rep.points.push_back(std::move(rp));
    }
    return rep;
}

// The coordinatewise p-th power carries the rank variety onto the
// support set. Returns the first failing point if any.
inline std::optional<std::vector<felem>> frobenius_compare(const ModuleRep& M,
                                                           const FieldPtr& enum_field,
                                                           std::uint64_t max_points = 1000000) {
    if (!M.ring.is_elementary_abelian())
        throw std::invalid_argument("frobenius_compare: ring is not elementary abelian");
    if (!enum_field->same_as(*M.ring.field))
        throw std::invalid_argument("frobenius_compare: field mismatch");
    std::uint64_t total = ipow_u64(enum_field->order(), static_cast<std::uint32_t>(M.ring.d));
    if (total > max_points)
        throw std::invalid_argument("frobenius_compare: point count exceeds bound");
    const Field& F = *enum_field;
    for (auto& a : enumerate_points(F, M.ring.d)) {
        bool in_rank_variety;
        if (detail::is_zero_point(a))
            in_rank_variety = (M.m > 0);
        else
            in_rank_variety = !is_free_over_cyclic(M, linear_form(M.ring, a));
        std::vector<felem> ap(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) ap[i] = F.frobenius(a[i]);
        bool in_support = support_membership(M, ap, MembershipMethod::homology).member;
        if (in_rank_variety != in_support) return a;
    }
    return std::nullopt;
}

// Freeness along u depends only on the class of u modulo n^2.
inline bool freeness_invariance_check(const ModuleRep& M, const MPoly& u, const MPoly& w) {
    MPoly diff = u - w;
    if (u.constant_term() != 0 || w.constant_term() != 0)
        throw std::invalid_argument("freeness invariance: nonzero constant term");
    for (const auto& [e, c] : diff.terms()) {
        std::uint64_t deg = 0;
        for (auto x : e) deg += x;
        if (deg < 2)
            throw std::invalid_argument("freeness invariance: u - w not in n^2");
    }
    return is_free_over_cyclic(M, u) == is_free_over_cyclic(M, w);
}

// u^p in characteristic p: p-th powers of coefficients, exponents
// scaled by p.
inline MPoly char_p_power(const MPoly& u) {
    const Field& F = *u.context()->field;
    const std::uint32_t p = F.characteristic();
    MPoly r(u.context());
    for (const auto& [e, c] : u.terms()) {
        Exponents pe = e;
        for (auto& x : pe) x *= p;
        r.add_term(pe, F.pow(c, p));
    }
    return r;
}

// Canonical decomposition u^p = sum h_q t_q^p: each monomial t^{pE} is
// assigned to q = min{q : E_q >= 1}.
inline std::vector<MPoly> decompose_p_power(const MPoly& up, const RingSpec& ring) {
    const std::uint32_t p = ring.field->characteristic();
    auto ctx = up.context();
    std::vector<MPoly> h(ring.c, MPoly(ctx));
    for (const auto& [e, c] : up.terms()) {
        std::size_t q = ring.c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= 1) {
                q = i;
                break;
            }
        if (q >= ring.c || e[q] < p)
            throw std::invalid_argument("decompose_p_power: monomial not divisible by t_q^p");
        Exponents rest = e;
        rest[q] -= p;
        h[q].add_term(rest, c);
    }
    return h;
}

// Agreement between the restriction-freeness test and the vanishing of
// the stable Betti numbers over P/(u^p).
inline bool flatdim_equiv_check(const ModuleRep& M, const MPoly& u) {
    if (u.is_zero()) throw std::invalid_argument("flatdim_equiv_check: u = 0");
    if (!M.ring.is_elementary_abelian())
        throw std::invalid_argument("flatdim_equiv_check: ring is not elementary abelian");
    MPoly up = char_p_power(u);
    HypersurfaceCoeffs coeffs(M.ring, decompose_p_power(up, M.ring));
    bool free_side = is_free_over_cyclic(M, u);
    const std::size_t d = M.ring.d;
    BettiTable t = betti_over_hypersurface(M, coeffs, d + 1);
    bool finite_side = (t.betti[d] == 0 && t.betti[d + 1] == 0);
    return free_side == finite_side;
}

// ---------------------------------------------------------------------------
// Differential modules over k[s].

struct DiffModule {
    PolyMatrix delta;  // 2r x 2r, delta^2 = 0
    std::size_t r = 0;

    void validate() const {
        if (delta.rows() != delta.cols() || delta.rows() != 2 * r)
            throw std::invalid_argument("diff module: delta must be 2r x 2r");
        if (!(delta * delta).is_zero())
            throw std::invalid_argument("diff module: delta^2 != 0");
    }
};

struct DModuleRadicals {
    UPoly ann_radical;     // squarefree part of a generator of ann(H), or 0
    UPoly minors_radical;  // squarefree part of the gcd of r x r minors, or 0
    bool equal = false;
};

// Computes H = Ker(delta)/Im(delta) over the PID k[s] via Smith normal
// form, reads off a generator of its annihilator, and compares radicals
// with the gcd of the r x r minors.
inline DModuleRadicals dmodule_radical_check(const DiffModule& dm) {
    dm.validate();
    const FieldPtr field = dm.delta.field();
    const std::size_t n = dm.delta.rows();
    SmithForm sf = smith_normal_form(dm.delta);

    // delta = U D V. Kernel: x with D(Vx) = 0, so x in V^{-1} * span{e_j : d_j = 0};
    // in the coordinates y = Vx the kernel is exactly the zero-diagonal slots.
    // Image: delta x = U D V x, so Im = U * span{d_j e_j : d_j != 0}.
    // Express the image generators in kernel coordinates: the j-th image
    // generator is U (d_j e_j); its y-coordinates are V * that column.
    std::vector<std::size_t> zero_slots, nonzero_slots;
    for (std::size_t j = 0; j < n; ++j) {
        if (j < sf.invariant_factors.size() && !sf.invariant_factors[j].is_zero())
            nonzero_slots.push_back(j);
        else
            zero_slots.push_back(j);
    }

    // y-coordinates of the image generators: V * U * (d_j e_j)
    PolyMatrix vu = sf.V * sf.U;
    PolyMatrix rel(field, zero_slots.size(), nonzero_slots.size());
    for (std::size_t jj = 0; jj < nonzero_slots.size(); ++jj) {
        std::size_t j = nonzero_slots[jj];
        const UPoly& dj = sf.invariant_factors[j];
        for (std::size_t ii = 0; ii < zero_slots.size(); ++ii)
            rel.at(ii, jj) = vu.at(zero_slots[ii], j) * dj;
        // coordinates on nonzero slots must vanish since Im <= Ker
        for (std::size_t other : nonzero_slots)
            if (!(vu.at(other, j) * dj).is_zero())
                throw std::logic_error("dmodule: image not contained in kernel coordinates");
    }

    // H = coker(rel); its annihilator is the last invariant factor of
    // rel when all kernel slots are covered, zero otherwise.
    DModuleRadicals out;
    SmithForm hf = smith_normal_form(rel);
    std::size_t nonzero_count = 0;
    for (const auto& e : hf.invariant_factors)
        if (!e.is_zero()) ++nonzero_count;
    UPoly ann(field);
    if (nonzero_count == zero_slots.size() && !zero_slots.empty()) {
        ann = hf.invariant_factors[zero_slots.size() - 1];
    } else if (zero_slots.empty()) {
        ann = UPoly::constant(field, 1);  // H = 0
    }  // else a free summand survives: ann = 0

    out.ann_radical = ann.is_zero() ? ann
                      : (ann.degree() == 0 ? UPoly::constant(field, 1) : squarefree_part(ann));
    UPoly mg = minors_gcd(dm.delta, dm.r);
    out.minors_radical = mg.is_zero() ? mg
                         : (mg.degree() == 0 ? UPoly::constant(field, 1) : squarefree_part(mg));
    out.equal = (out.ann_radical == out.minors_radical);
    return out;
}

}  // namespace hypervar

#endif
