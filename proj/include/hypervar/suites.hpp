#ifndef HYPERVAR_SUITES_HPP
#define HYPERVAR_SUITES_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervar/io.hpp"
#include "hypervar/koszul.hpp"
#include "hypervar/module.hpp"
#include "hypervar/resolution.hpp"
#include "hypervar/varieties.hpp"

namespace hypervar {
namespace gen {

// ---------------------------------------------------------------------------
// Seeded generators shared by the verification suites.

inline felem random_elem(const Field& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
    return static_cast<felem>(dist(rng));
}

inline felem random_nonzero(const Field& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, F.order() - 1);
    return static_cast<felem>(dist(rng));
}

inline Matrix random_matrix(const FieldPtr& F, std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
    Matrix M(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = random_elem(*F, rng);
    return M;
}

inline Matrix random_invertible(const FieldPtr& F, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        Matrix M = random_matrix(F, n, n, rng);
        if (M.rank() == n) return M;
    }
}

inline Matrix matrix_inverse(const Matrix& S) {
    const std::size_t n = S.rows();
    Matrix inv(S.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<felem> e(n, 0);
        e[j] = 1;
        auto col = solve(S, e);
        if (!col) throw std::invalid_argument("matrix_inverse: singular matrix");
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = (*col)[i];
    }
    return inv;
}

// Nilpotent m x m matrix with alpha^bound = 0: random Jordan block
// sizes <= bound, conjugated by a random invertible matrix.
inline Matrix random_nilpotent(const FieldPtr& F, std::size_t m, std::uint32_t bound,
                               std::mt19937_64& rng) {
    Matrix J(F, m, m);
    std::size_t pos = 0;
    while (pos < m) {
        std::size_t remain = m - pos;
        std::size_t maxb = std::min<std::size_t>(bound, remain);
        std::size_t b = 1 + rng() % maxb;
        for (std::size_t i = 1; i < b; ++i) J.at(pos + i - 1, pos + i) = 1;
        pos += b;
    }
    Matrix S = random_invertible(F, m, rng);
    return S * J * matrix_inverse(S);
}

// Random sparse polynomial in the context's variables with individual
// exponents <= max_exp and total degree >= min_degree.
inline MPoly random_mpoly(const PolyContextPtr& ctx, std::size_t nvars, std::uint32_t max_exp,
                          std::uint32_t min_degree, std::size_t terms, std::mt19937_64& rng) {
    const Field& F = *ctx->field;
    MPoly r(ctx);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(ctx->names.size(), 0);
        std::uint32_t total = 0;
        for (std::size_t i = 0; i < nvars; ++i) {
            e[i] = static_cast<std::uint32_t>(rng() % (max_exp + 1));
            total += e[i];
        }
        if (total < min_degree) continue;
        r.add_term(e, random_elem(F, rng));
    }
    return r;
}

inline UPoly random_upoly(const FieldPtr& F, std::size_t max_degree, std::mt19937_64& rng) {
    std::vector<felem> coeffs(max_degree + 1, 0);
    for (auto& c : coeffs)
        if (rng() % 2) c = random_elem(*F, rng);
    return UPoly(F, std::move(coeffs));
}

// Random module over an artinian ring with dimension in [1, max_m];
// bumps the seed until the generator lands in range.
inline ModuleRep random_module_bounded(const RingSpec& ring, std::size_t max_a, std::size_t max_b,
                                       std::size_t max_m, std::uint64_t seed) {
    std::mt19937_64 pick(seed);
    for (int tries = 0; tries < 200; ++tries) {
        std::size_t a = 1 + pick() % max_a;
        std::size_t b = 1 + pick() % max_b;
        ModuleRep M = random_module(ring, a, b, pick());
        if (M.m >= 1 && M.m <= max_m) return M;
    }
    throw std::runtime_error("random_module_bounded: no module in range");
}

// Random homogeneous degree-2 exterior element on d generators with
// polynomial coefficients in the t-variables.
inline ExteriorElement random_degree2(const PolyContextPtr& ctx, int d, std::mt19937_64& rng) {
    ExteriorElement w(ctx, d);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            if (rng() % 2) continue;
            SubsetMask mask = (SubsetMask{1} << (i - 1)) | (SubsetMask{1} << (j - 1));
            MPoly c = random_mpoly(ctx, static_cast<std::size_t>(d), 1, 0, 2, rng);
            w.add_term(mask, c);
        }
    return w;
}

}  // namespace gen

// ---------------------------------------------------------------------------
// Verification suites. Each is deterministic given (seed, trials) and
// records enough data to reproduce any failure.

namespace detail {

inline VerificationOutcome make_outcome(std::string suite, std::uint64_t seed,
                                        std::size_t trials) {
    VerificationOutcome o;
    o.suite = std::move(suite);
    o.seed = seed;
    o.trials = trials;
    return o;
}

inline void record_failure(VerificationOutcome& o, const std::string& detail) {
    o.passed = false;
    if (o.failure_detail.empty()) o.failure_detail = detail;
}

}  // namespace detail

// Betti numbers over P/(f) depend only on the coefficients modulo the
// maximal ideal: congruent regular pairs give identical tables.
inline VerificationOutcome suite_invariance(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("invariance", seed, trials);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = (t % 2 == 0) ? 2 : 3;
        FieldPtr F = Field::prime(p);
        RingSpec ring = RingSpec::elementary_abelian(F, 2);
        std::size_t max_a = (p == 2) ? 2 : 1;
        ModuleRep M = gen::random_module_bounded(ring, max_a, 3, 12, rng());
        auto ctx = ring.t_context();
        const std::size_t N = default_max_degree(ring);

        // congruent pair: identical constant terms, independent tails in n
        std::vector<MPoly> g, h;
        for (std::size_t q = 0; q < ring.c; ++q) {
            felem a = gen::random_elem(*F, rng);
            MPoly base = MPoly::constant(ctx, a);
            g.push_back(base + gen::random_mpoly(ctx, ring.d, 2, 1, 2, rng));
            h.push_back(base + gen::random_mpoly(ctx, ring.d, 2, 1, 2, rng));
        }
        HypersurfaceCoeffs G(ring, g), H(ring, h);
        if (!G.regular() || !H.regular()) {
            --t;  // rare: resample
            continue;
        }
        BettiTable tg = betti_over_hypersurface(M, G, N);
        BettiTable th = betti_over_hypersurface(M, H, N);
        bool equal = tg.betti == th.betti;
        bool periodic = tg.periodic_from(ring.d) && th.periodic_from(ring.d);
        if (!equal || !periodic)
            detail::record_failure(out, std::string(!equal ? "betti tables differ"
                                                           : "table not 2-periodic") +
                                            "; module: " + module_to_json(M).dump());
    }
    return out;
}

// For f with all coefficients in n, beta_i over P/(f) equals the
// partial sums of the Betti numbers over P.
inline VerificationOutcome suite_tensor_formula(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("tensor-formula", seed, trials);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = (t % 2 == 0) ? 2 : 3;
        FieldPtr F = Field::prime(p);
        RingSpec ring = RingSpec::elementary_abelian(F, 2);
        std::size_t max_a = (p == 2) ? 2 : 1;
        ModuleRep M = gen::random_module_bounded(ring, max_a, 3, 12, rng());
        auto ctx = ring.t_context();
        std::vector<MPoly> g;
        for (std::size_t q = 0; q < ring.c; ++q)
            g.push_back(gen::random_mpoly(ctx, ring.d, 2, 1, 3, rng));
        HypersurfaceCoeffs G(ring, g);
        if (!G.regular()) {
            --t;
            continue;
        }
        if (!betti_tensor_formula_check(M, G, default_max_degree(ring)))
            detail::record_failure(out, "tensor formula failed; module: " +
                                            module_to_json(M).dump());
    }
    return out;
}

// Every hypersurface Betti table is 2-periodic from degree d on.
inline VerificationOutcome suite_periodicity(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("periodicity", seed, trials);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = (t % 2 == 0) ? 2 : 3;
        FieldPtr F = Field::prime(p);
        std::size_t d = 1 + t % 2;
        RingSpec ring = RingSpec::elementary_abelian(F, d);
        std::size_t max_a = (p == 2) ? 2 : 1;
        ModuleRep M = gen::random_module_bounded(ring, max_a, 3, 12, rng());
        auto ctx = ring.t_context();
        std::vector<MPoly> g;
        for (std::size_t q = 0; q < ring.c; ++q) {
            MPoly gq = MPoly::constant(ctx, gen::random_elem(*F, rng)) +
                       gen::random_mpoly(ctx, ring.d, 1, 1, 2, rng);
            g.push_back(gq);
        }
        HypersurfaceCoeffs G(ring, g);
        if (!G.regular()) {
            --t;
            continue;
        }
        BettiTable tab = betti_over_hypersurface(M, G, default_max_degree(ring));
        if (!tab.periodic_from(ring.d))
            detail::record_failure(out, "table not 2-periodic; module: " +
                                            module_to_json(M).dump());
    }
    return out;
}

// The coordinatewise p-th power maps the rank variety onto the support
// set, over each field in a fixed list of small orders.
inline VerificationOutcome suite_frobenius(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("frobenius", seed, trials);
    static const std::uint64_t orders[] = {2, 3, 4, 8, 9};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        FieldPtr F = Field::of_order(orders[t % 5]);
        RingSpec ring = RingSpec::elementary_abelian(F, 2);
        ModuleRep M = gen::random_module_bounded(ring, 1, 2, 9, rng());
        auto bad = frobenius_compare(M, F);
        if (bad)
            detail::record_failure(out, "mismatch at point " +
                                            point_to_string(*F, *bad) +
                                            "; module: " + module_to_json(M).dump());
    }
    return out;
}

// Freeness along u depends only on u modulo n^2.
inline VerificationOutcome suite_freeness_invariance(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("freeness-invariance", seed, trials);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = (t % 2 == 0) ? 2 : 3;
        FieldPtr F = Field::prime(p);
        RingSpec ring = RingSpec::elementary_abelian(F, 2);
        std::size_t max_a = (p == 2) ? 2 : 1;
        ModuleRep M = gen::random_module_bounded(ring, max_a, 3, 12, rng());
        auto ctx = ring.t_context();
        MPoly u(ctx);
        for (std::size_t i = 0; i < ring.d; ++i)
            u = u + MPoly::variable(ctx, i).scaled(gen::random_elem(*F, rng));
        MPoly w = u + gen::random_mpoly(ctx, ring.d, 2, 2, 3, rng);
        if (!freeness_invariance_check(M, u, w))
            detail::record_failure(out, "freeness differs for congruent u, w; module: " +
                                            module_to_json(M).dump());
    }
    return out;
}

// Freeness along u agrees with vanishing of the stable Betti numbers
// over the hypersurface defined by u^p.
inline VerificationOutcome suite_flatdim(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("flatdim", seed, trials);
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = (t % 2 == 0) ? 2 : 3;
        FieldPtr F = Field::prime(p);
        std::size_t d = 1 + t % 2;
        RingSpec ring = RingSpec::elementary_abelian(F, d);
        std::size_t max_a = (p == 2) ? 2 : 1;
        ModuleRep M = gen::random_module_bounded(ring, max_a, 3, 10, rng());
        auto ctx = ring.t_context();
        MPoly u = gen::random_mpoly(ctx, ring.d, 2, 1, 3, rng);
        if (u.is_zero()) {
            --t;
            continue;
        }
        if (!flatdim_equiv_check(M, u))
            detail::record_failure(out, "flat-dimension criteria disagree; u = " + u.to_string() +
                                            "; module: " + module_to_json(M).dump());
    }
    return out;
}

// Maximal image is unchanged by perturbations alpha + beta*gamma with
// beta^p = 0 and everything commuting.
inline VerificationOutcome suite_operators(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("operators", seed, trials);
    static const std::uint32_t primes[] = {2, 3, 5};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = primes[t % 3];
        FieldPtr F = Field::prime(p);
        OperatorTriple triple;
        triple.p = p;
        // Two generation families, both inside the provable scope of the
        // invariance statement.  An unconstrained commuting triple can break
        // it: with alpha = 0, beta a size-2 Jordan block and gamma = id over
        // F_2, the restriction along alpha is not free while the restriction
        // along alpha + beta*gamma is.  The perturbation beta*gamma must
        // either stay inside the square of the ideal generated by nilpotent
        // operators (gamma nilpotent), or factor alpha out of the sum so
        // that alpha + beta*gamma = alpha * unit (beta a multiple of
        // alpha^2).  The second family keeps non-nilpotent gamma in play.
        if (p == 2 && t % 2 == 0) {
            // operators of a random module over a three-variable ring;
            // gamma is a constant-free polynomial in all three operators,
            // hence nilpotent
            RingSpec ring = RingSpec::elementary_abelian(F, 3);
            ModuleRep M = gen::random_module_bounded(ring, 2, 3, 24, rng());
            auto ctx = ring.t_context();
            MPoly h = gen::random_mpoly(ctx, 3, 2, 1, 3, rng);
            triple.alpha = M.ops[0];
            triple.beta = M.ops[1];
            triple.gamma = h.evaluate_at_operators_unchecked(M.ops);
        } else {
            std::size_t m = 1 + rng() % 24;
            triple.alpha = gen::random_nilpotent(F, m, p, rng);
            // beta = alpha^2 * r(alpha) commutes, has p-th power zero, and
            // makes alpha + beta*gamma a unit multiple of alpha for any
            // commuting gamma, nilpotent or not
            Matrix beta(F, m, m);
            Matrix apow = triple.alpha * triple.alpha;
            for (std::uint32_t j = 0; j < 3; ++j) {
                beta = beta + apow.scaled(gen::random_elem(*F, rng));
                apow = apow * triple.alpha;
            }
            triple.beta = beta;
            triple.gamma = beta.scaled(gen::random_elem(*F, rng)) +
                           triple.alpha.scaled(gen::random_elem(*F, rng)) +
                           Matrix::identity(F, m).scaled(gen::random_elem(*F, rng));
        }
        if (!operators_theorem_check(triple))
            detail::record_failure(out, "maximal image changed under alpha + beta*gamma (p=" +
                                            std::to_string(p) + ", trial " + std::to_string(t) +
                                            ")");
    }
    return out;
}

// Symbolic divided-power identities on random degree-2 elements.
inline VerificationOutcome suite_divided_powers(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("divided-powers", seed, trials);
    static const std::uint32_t primes[] = {2, 3, 5};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = primes[t % 3];
        FieldPtr F = Field::prime(p);
        int d = 2 + static_cast<int>(t % 3);
        auto ctx = PolyContext::t_vars(F, static_cast<std::size_t>(d));
        KoszulData data = KoszulData::standard(ctx, d);
        ExteriorElement w = gen::random_degree2(ctx, d, rng);
        ExteriorElement v = gen::random_degree2(ctx, d, rng);
        ExteriorElement dw = koszul_boundary(w, data);

        bool ok = true;
        ExteriorElement wedge_pow = ExteriorElement::scalar(ctx, d, MPoly::constant(ctx, 1));
        std::uint64_t factorial = 1;
        for (std::size_t i = 1; i <= 4 && ok; ++i) {
            ExteriorElement wi = divided_power(w, i);
            // boundary identity
            if (!(koszul_boundary(wi, data) == wedge(dw, divided_power(w, i - 1)))) ok = false;
            // ordinary power identity w^i = i! w^(i)
            wedge_pow = wedge(wedge_pow, w);
            factorial *= i;
            felem fac = static_cast<felem>(factorial % p);
            if (!(wedge_pow == wi.scaled(MPoly::constant(ctx, fac)))) ok = false;
            // binomial expansion of (v + w)^(i)
            ExteriorElement lhs = divided_power(v + w, i);
            ExteriorElement rhs(ctx, d);
            for (std::size_t j = 0; j <= i; ++j)
                rhs = rhs + wedge(divided_power(v, j), divided_power(w, i - j));
            if (!(lhs == rhs)) ok = false;
        }
        if (!ok)
            detail::record_failure(out, "divided-power identity failed (p=" + std::to_string(p) +
                                            ", d=" + std::to_string(d) + ", trial " +
                                            std::to_string(t) + ")");
    }
    return out;
}

// The shift map between Tate constructions on homologous cycles is a
// chain isomorphism through total degree 6.
inline VerificationOutcome suite_tate_iso(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("tate-iso", seed, trials);
    static const std::uint32_t primes[] = {2, 3, 5};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = primes[t % 3];
        FieldPtr F = Field::prime(p);
        int d = 2 + static_cast<int>(t % 2);
        auto ctx = PolyContext::t_vars(F, static_cast<std::size_t>(d));
        KoszulData data = KoszulData::standard(ctx, d);
        ExteriorElement w = gen::random_degree2(ctx, d, rng);
        ExteriorElement z = koszul_boundary(gen::random_degree2(ctx, d, rng), data);
        if (!tate_shift_iso_check(w, z, data, 6).ok())
            detail::record_failure(out, "tate shift not a chain isomorphism (p=" +
                                            std::to_string(p) + ", trial " + std::to_string(t) +
                                            ")");
    }
    return out;
}

namespace detail {

// Conjugates delta in place by a sequence of random elementary
// operations over k[s], preserving delta^2 = 0 and the homology.
inline void random_conjugate(PolyMatrix& delta, std::size_t ops, std::mt19937_64& rng) {
    const FieldPtr F = delta.field();
    const std::size_t n = delta.rows();
    const Field& Fl = *F;
    for (std::size_t o = 0; o < ops; ++o) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        UPoly q = gen::random_upoly(F, 1, rng);
        // delta <- E delta E^{-1} with E = I + q e_{ij}
        for (std::size_t c = 0; c < n; ++c) delta.at(i, c) = delta.at(i, c) + q * delta.at(j, c);
        for (std::size_t r = 0; r < n; ++r)
            delta.at(r, j) = delta.at(r, j) - q * delta.at(r, i);
    }
    // a couple of scalings for good measure
    for (std::size_t o = 0; o < 2; ++o) {
        std::size_t i = rng() % n;
        felem s = gen::random_nonzero(Fl, rng);
        felem si = Fl.inv(s);
        for (std::size_t c = 0; c < n; ++c) delta.at(i, c) = delta.at(i, c).scaled(s);
        for (std::size_t r = 0; r < n; ++r) delta.at(r, i) = delta.at(r, i).scaled(si);
    }
}

// Stable pair of a one-variable module at the linear coefficient g = s:
// the differential blocks are affine in the coefficient, so two
// evaluations determine the polynomial matrices.
inline DiffModule dmodule_from_module(const ModuleRep& M) {
    if (M.ring.d != 1 || M.ring.c != 1)
        throw std::invalid_argument("dmodule_from_module: need d = c = 1");
    const FieldPtr F = M.ring.field;
    StablePair at0 = stable_matrices(M, HypersurfaceCoeffs::from_point(M.ring, {0}));
    StablePair at1 = stable_matrices(M, HypersurfaceCoeffs::from_point(M.ring, {1}));
    const std::size_t r = at0.r;
    DiffModule dm;
    dm.r = r;
    dm.delta = PolyMatrix(F, 2 * r, 2 * r);
    UPoly s_var(F, {0, 1});
    auto affine = [&](felem v0, felem v1) {
        // value v0 + s*(v1 - v0)
        UPoly u = UPoly::constant(F, v0);
        return u + s_var.scaled(F->sub(v1, v0));
    };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            dm.delta.at(i, r + j) = affine(at0.A.at(i, j), at1.A.at(i, j));
            dm.delta.at(r + i, j) = affine(at0.B.at(i, j), at1.B.at(i, j));
        }
    return dm;
}

}  // namespace detail

// Radical of the homology annihilator of a differential module over
// k[s] equals the radical of the gcd of its half-size minors.
inline VerificationOutcome suite_dmodule(std::uint64_t seed, std::size_t trials) {
    auto out = detail::make_outcome("dmodule", seed, trials);
    static const std::uint32_t primes[] = {2, 3, 5};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint32_t p = primes[t % 3];
        FieldPtr F = Field::prime(p);
        DiffModule dm;
        if (t % 2 == 0) {
            // from a one-variable module: k[t]/(t^u) modulo a power of t
            std::uint32_t u = 2 + static_cast<std::uint32_t>(rng() % 3);
            RingSpec ring(F, 1, 1, {u});
            std::uint32_t j = 1 + static_cast<std::uint32_t>(rng() % u);
            ModuleRep M = cyclic_module(ring, {{j}});
            dm = detail::dmodule_from_module(M);
        } else {
            // random pattern: diagonal blocks with entrywise products zero
            std::size_t r = 1 + rng() % 4;
            dm.r = r;
            dm.delta = PolyMatrix(F, 2 * r, 2 * r);
            for (std::size_t i = 0; i < r; ++i) {
                switch (rng() % 3) {
                    case 0: dm.delta.at(i, r + i) = gen::random_upoly(F, 3, rng); break;
                    case 1: dm.delta.at(r + i, i) = gen::random_upoly(F, 3, rng); break;
                    default: break;  // both zero: a free homology summand
                }
            }
        }
        detail::random_conjugate(dm.delta, 6, rng);
        DModuleRadicals rad = dmodule_radical_check(dm);
        if (!rad.equal)
            detail::record_failure(out, "radicals differ (p=" + std::to_string(p) + ", trial " +
                                            std::to_string(t) + ")");
    }
    return out;
}

inline VerificationOutcome run_suite(const std::string& name, std::uint64_t seed,
                                     std::size_t trials) {
    if (name == "invariance") return suite_invariance(seed, trials);
    if (name == "tensor-formula") return suite_tensor_formula(seed, trials);
    if (name == "periodicity") return suite_periodicity(seed, trials);
    if (name == "frobenius") return suite_frobenius(seed, trials);
    if (name == "freeness-invariance") return suite_freeness_invariance(seed, trials);
    if (name == "flatdim") return suite_flatdim(seed, trials);
    if (name == "operators") return suite_operators(seed, trials);
    if (name == "divided-powers") return suite_divided_powers(seed, trials);
    if (name == "tate-iso") return suite_tate_iso(seed, trials);
    if (name == "dmodule") return suite_dmodule(seed, trials);
    throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<std::string> suite_names() {
    return {"invariance", "tensor-formula", "periodicity",        "frobenius",
            "freeness-invariance", "flatdim", "operators", "divided-powers",
            "tate-iso", "dmodule"};
}

}  // namespace hypervar

#endif
