#ifndef HYPERVAR_POLY_HPP
#define HYPERVAR_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypervar/field.hpp"
#include "hypervar/linalg.hpp"

namespace hypervar {

// Variable context shared by sparse multivariate polynomials.
struct PolyContext {
    FieldPtr field;
    std::vector<std::string> names;

    std::size_t nvars() const { return names.size(); }
    bool same_as(const PolyContext& o) const {
        return field->same_as(*o.field) && names == o.names;
    }

    // k[t1..td]
    static std::shared_ptr<const PolyContext> t_vars(FieldPtr field, std::size_t d) {
        auto ctx = std::make_shared<PolyContext>();
        ctx->field = std::move(field);
        for (std::size_t i = 1; i <= d; ++i) ctx->names.push_back("t" + std::to_string(i));
        return ctx;
    }

    // k[t1..td, s1..sc]
    static std::shared_ptr<const PolyContext> ts_vars(FieldPtr field, std::size_t d,
                                                      std::size_t c) {
        auto ctx = std::make_shared<PolyContext>();
        ctx->field = std::move(field);
        for (std::size_t i = 1; i <= d; ++i) ctx->names.push_back("t" + std::to_string(i));
        for (std::size_t i = 1; i <= c; ++i) ctx->names.push_back("s" + std::to_string(i));
        return ctx;
    }
};

using PolyContextPtr = std::shared_ptr<const PolyContext>;

using Exponents = std::vector<std::uint32_t>;

// Graded-lexicographic comparison, used for canonical printing.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
        std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over a finite field. Zero coefficients
// are never stored.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(PolyContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MPoly constant(PolyContextPtr ctx, felem c) {
        MPoly p(std::move(ctx));
        if (c) p.terms_[Exponents(p.ctx_->nvars(), 0)] = c;
        return p;
    }

    static MPoly variable(PolyContextPtr ctx, std::size_t index, std::uint32_t power = 1) {
        MPoly p(std::move(ctx));
        if (index >= p.ctx_->nvars()) throw std::invalid_argument("MPoly: bad variable index");
        Exponents e(p.ctx_->nvars(), 0);
        e[index] = power;
        p.terms_[e] = 1;
        return p;
    }

    const PolyContextPtr& context() const { return ctx_; }
    const std::map<Exponents, felem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    }

    felem constant_term() const {
        auto it = terms_.find(Exponents(ctx_->nvars(), 0));
        return it == terms_.end() ? 0 : it->second;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
        return d;
    }

    void add_term(const Exponents& e, felem c) {
        if (!c) return;
        const Field& F = *ctx_->field;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = F.add(it->second, c);
            if (!it->second) terms_.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check_ctx(b, "poly add");
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check_ctx(b, "poly sub");
        MPoly r = a;
        const Field& F = *a.ctx_->field;
        for (const auto& [e, c] : b.terms_) r.add_term(e, F.neg(c));
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_ctx(b, "poly mul");
        MPoly r(a.ctx_);
        const Field& F = *a.ctx_->field;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, F.mul(ca, cb));
            }
        return r;
    }

    MPoly negated() const {
        MPoly r(ctx_);
        const Field& F = *ctx_->field;
        for (const auto& [e, c] : terms_) r.terms_[e] = F.neg(c);
        return r;
    }

    MPoly scaled(felem c) const {
        MPoly r(ctx_);
        if (!c) return r;
        const Field& F = *ctx_->field;
        for (const auto& [e, v] : terms_) {
            felem w = F.mul(v, c);
            if (w) r.terms_[e] = w;
        }
        return r;
    }

    MPoly pow(std::uint64_t n) const {
        MPoly r = constant(ctx_, 1);
        MPoly b = *this;
        while (n) {
            if (n & 1) r = r * b;
            if (n >>= 1) b = b * b;
        }
        return r;
    }

    bool operator==(const MPoly& o) const {
        return ctx_->same_as(*o.ctx_) && terms_ == o.terms_;
    }

    felem evaluate(const std::vector<felem>& point) const {
        if (point.size() != ctx_->nvars())
            throw std::invalid_argument("poly evaluate: wrong point dimension");
        const Field& F = *ctx_->field;
        felem acc = 0;
        for (const auto& [e, c] : terms_) {
            felem t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = F.mul(t, F.pow(point[i], e[i]));
            acc = F.add(acc, t);
        }
        return acc;
    }

    // Substitutes pairwise-commuting square matrices for the variables.
    Matrix evaluate_at_operators(const std::vector<Matrix>& ops) const {
        if (ops.size() != ctx_->nvars())
            throw std::invalid_argument("operator evaluation: wrong operator count");
        if (ops.empty()) throw std::invalid_argument("operator evaluation: no operators");
        const std::size_t m = ops[0].rows();
        for (const auto& T : ops) {
            if (T.rows() != m || T.cols() != m)
                throw std::invalid_argument("operator evaluation: size mismatch");
            require_same_field(*T.field(), *ctx_->field, "operator evaluation");
        }
        for (std::size_t i = 0; i < ops.size(); ++i)
            for (std::size_t j = i + 1; j < ops.size(); ++j)
                if (!ops[i].commutes_with(ops[j]))
                    throw std::invalid_argument("operator evaluation: operators do not commute");
        return evaluate_at_operators_unchecked(ops);
    }

    Matrix evaluate_at_operators_unchecked(const std::vector<Matrix>& ops) const {
        const std::size_t m = ops[0].rows();
        Matrix acc(ops[0].field(), m, m);
        for (const auto& [e, c] : terms_) {
            Matrix t = Matrix::identity(ops[0].field(), m).scaled(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = t * ops[i].pow(e[i]);
            acc = acc + t;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, felem>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return GrlexLess{}(b.first, a.first);  // highest grlex first
        });
        const Field& F = *ctx_->field;
        std::string out;
        for (const auto& [e, c] : sorted) {
            if (!out.empty()) out += " + ";
            bool trivial_mon = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
            std::string mon;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mon.empty()) mon += "*";
                mon += ctx_->names[i];
                if (e[i] > 1) mon += "^" + std::to_string(e[i]);
            }
            if (trivial_mon) {
                out += F.to_string(c);
            } else if (c == 1) {
                out += mon;
            } else {
                out += F.to_string(c) + "*" + mon;
            }
        }
        return out;
    }

private:
    void check_ctx(const MPoly& o, const char* where) const {
        if (!ctx_->same_as(*o.ctx_))
            throw std::invalid_argument(std::string(where) + ": context mismatch");
    }

    PolyContextPtr ctx_;
    std::map<Exponents, felem> terms_;
};

// Parses the CLI polynomial syntax, e.g. "1 + 2*t1*t2^3 - t1^2".
// Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := integer | name ['^' integer] | '(' expr ')'.
class PolyParser {
public:
    PolyParser(PolyContextPtr ctx, std::string text)
        : ctx_(std::move(ctx)), s_(std::move(text)) {}

    MPoly parse() {
        MPoly r = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("polynomial parse error at position " +
                                        std::to_string(pos_));
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        MPoly acc = parse_term();
        if (neg) acc = acc.negated();
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    MPoly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("polynomial parse: unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly inner = parse_expr();
            if (!eat(')')) throw std::invalid_argument("polynomial parse: missing ')'");
            if (eat('^')) return inner.pow(parse_int());
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long n = static_cast<long long>(parse_int());
            return MPoly::constant(ctx_, ctx_->field->from_int(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            auto it = std::find(ctx_->names.begin(), ctx_->names.end(), name);
            if (it == ctx_->names.end())
                throw std::invalid_argument("polynomial parse: unknown variable '" + name + "'");
            std::uint64_t power = 1;
            if (eat('^')) power = parse_int();
            return MPoly::variable(ctx_, static_cast<std::size_t>(it - ctx_->names.begin()),
                                   static_cast<std::uint32_t>(power));
        }
        throw std::invalid_argument(std::string("polynomial parse: unexpected '") + c + "'");
    }

    std::uint64_t parse_int() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw std::invalid_argument("polynomial parse: expected integer");
        std::uint64_t n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            n = n * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        return n;
    }

    PolyContextPtr ctx_;
    std::string s_;
    std::size_t pos_ = 0;
};

inline MPoly parse_poly(PolyContextPtr ctx, const std::string& text) {
    return PolyParser(std::move(ctx), text).parse();
}

// f regular in the polynomial ring (a domain) just means f != 0.
inline bool is_regular(const MPoly& f) { return !f.is_zero(); }

// Constant-term vector (g_1(0), ..., g_c(0)).
inline std::vector<felem> constant_term_vector(const std::vector<MPoly>& g) {
    std::vector<felem> v;
    v.reserve(g.size());
    for (const auto& gi : g) v.push_back(gi.constant_term());
    return v;
}

// True iff g and h have equal constant-term vectors, i.e. the associated
// hypersurface elements differ by an element of n*I.
inline bool coeffs_congruent(const std::vector<MPoly>& g, const std::vector<MPoly>& h) {
    if (g.size() != h.size()) return false;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i].constant_term() != h[i].constant_term()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a finite field.

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(FieldPtr field) : field_(std::move(field)) {}
    UPoly(FieldPtr field, std::vector<felem> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static UPoly constant(FieldPtr field, felem c) {
        return UPoly(std::move(field), {c});
    }

    static UPoly x(FieldPtr field, std::uint32_t power = 1) {
        std::vector<felem> c(power + 1, 0);
        c[power] = 1;
        return UPoly(std::move(field), std::move(c));
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<felem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    felem leading() const { return c_.empty() ? 0 : c_.back(); }
    felem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    bool operator==(const UPoly& o) const {
        return c_ == o.c_ && field_->same_as(*o.field_);
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        require_same_field(*a.field_, *b.field_, "upoly add");
        const Field& F = *a.field_;
        std::vector<felem> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
        return UPoly(a.field_, std::move(r));
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        require_same_field(*a.field_, *b.field_, "upoly sub");
        const Field& F = *a.field_;
        std::vector<felem> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
        return UPoly(a.field_, std::move(r));
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        require_same_field(*a.field_, *b.field_, "upoly mul");
        if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
        const Field& F = *a.field_;
        std::vector<felem> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = F.add(r[i + j], F.mul(a.c_[i], b.c_[j]));
        }
        return UPoly(a.field_, std::move(r));
    }

    UPoly negated() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = field_->neg(x);
        return r;
    }

    UPoly scaled(felem s) const {
        UPoly r(field_);
        if (!s) return r;
        r.c_ = c_;
        for (auto& x : r.c_) x = field_->mul(x, s);
        r.trim();
        return r;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(field_->inv(leading()));
    }

    // Returns {quotient, remainder} with deg(remainder) < deg(divisor).
    std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("upoly divmod by zero");
        const Field& F = *field_;
        UPoly rem = *this;
        UPoly quot(field_);
        if (rem.degree() >= divisor.degree())
            quot.c_.assign(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, 0);
        felem lead_inv = F.inv(divisor.leading());
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
            felem q = F.mul(rem.leading(), lead_inv);
            quot.c_[shift] = q;
            for (std::size_t i = 0; i < divisor.c_.size(); ++i)
                rem.c_[shift + i] = F.sub(rem.c_[shift + i], F.mul(q, divisor.c_[i]));
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }

    UPoly derivative() const {
        UPoly r(field_);
        if (c_.size() < 2) return r;
        const Field& F = *field_;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = F.mul(c_[i], F.from_int(static_cast<long long>(i)));
        r.trim();
        return r;
    }

    felem evaluate(felem x) const {
        const Field& F = *field_;
        felem acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c_[i]);
        return acc;
    }

    std::string to_string(const std::string& var = "s") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!c_[i]) continue;
            if (!out.empty()) out += " + ";
            if (i == 0) {
                out += field_->to_string(c_[i]);
            } else {
                if (c_[i] != 1) out += field_->to_string(c_[i]) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<felem> c_;
};

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("upoly gcd: both arguments zero");
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Product of the distinct irreducible factors. In characteristic p the
// derivative may vanish identically (a is a p-th power); that case is
// handled by taking coefficientwise Frobenius inverses and recursing.
inline UPoly squarefree_part(const UPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree_part of zero");
    if (a.degree() == 0) return UPoly::constant(a.field(), 1);
    const Field& F = *a.field();
    UPoly da = a.derivative();
    if (da.is_zero()) {
        // a(x) = b(x^p)
        const std::uint32_t p = F.characteristic();
        std::vector<felem> bc((a.coeffs().size() - 1) / p + 1, 0);
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            if (!a.coeffs()[i]) continue;
            if (i % p) throw std::logic_error("squarefree_part: inconsistent p-th power");
            bc[i / p] = F.frobenius_inv(a.coeffs()[i]);
        }
        return squarefree_part(UPoly(a.field(), std::move(bc)));
    }
    UPoly g = upoly_gcd(a, da);
    UPoly sf = a.divmod(g).first.monic();
    if (g.degree() == 0) return sf;
    // factors of a with multiplicity divisible by p survive in g with
    // unchanged radical contribution; merge recursively
    UPoly rest = squarefree_part(g);
    UPoly combined = sf * rest;
    UPoly common = upoly_gcd(sf, rest);
    return combined.divmod(common).first.monic();
}

}  // namespace hypervar

#endif
