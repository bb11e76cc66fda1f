#ifndef HYPERVAR_FIELD_HPP
#define HYPERVAR_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypervar {

// Elements of F_{p^e} are packed into a single machine word as base-p
// digits: value = sum c_i * p^i where c_i is the coefficient of z^i in
// the polynomial representation modulo the field's irreducible modulus.
// For prime fields (e = 1) the value is just the residue.
using felem = std::uint32_t;

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

// Dense univariate polynomials over F_p, coefficients low-to-high.
// Internal helper for modulus validation and irreducible search; the
// public univariate toolkit lives in poly.hpp.
using fp_poly = std::vector<std::uint32_t>;

inline void fp_trim(fp_poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline fp_poly fp_mul(const fp_poly& a, const fp_poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    fp_poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    fp_trim(r);
    return r;
}

inline fp_poly fp_mod(fp_poly a, const fp_poly& m, std::uint32_t p) {
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    std::uint32_t lead_inv = 1;
    {  // modulus need not be monic here; invert its leading coefficient
        std::uint32_t l = m.back(), e = p - 2, b = l, r = 1;
        while (e) {
            if (e & 1) r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) * b % p);
            b = static_cast<std::uint32_t>(static_cast<std::uint64_t>(b) * b % p);
            e >>= 1;
        }
        lead_inv = r;
    }
    while (a.size() > dm) {
        std::uint32_t q = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(q) * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline fp_poly fp_gcd(fp_poly a, fp_poly b, std::uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        fp_poly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline fp_poly fp_powmod_x(std::uint64_t exp_of_p, const fp_poly& m, std::uint32_t p) {
    // computes x^(p^exp_of_p) mod m by repeated p-th powering
    fp_poly x = {0, 1};
    fp_poly r = fp_mod(x, m, p);
    for (std::uint64_t k = 0; k < exp_of_p; ++k) {
        // r <- r^p mod m, by square-and-multiply on exponent p
        fp_poly acc = {1};
        fp_poly base = r;
        std::uint32_t e = p;
        while (e) {
            if (e & 1) acc = fp_mod(fp_mul(acc, base, p), m, p);
            base = fp_mod(fp_mul(base, base, p), m, p);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

// Rabin irreducibility test over F_p.
inline bool fp_is_irreducible(const fp_poly& f, std::uint32_t p) {
    fp_poly m = f;
    fp_trim(m);
    if (m.size() < 2) return false;
    const std::size_t e = m.size() - 1;
    if (e == 1) return true;
    // x^(p^e) == x mod f
    fp_poly xpe = fp_powmod_x(e, m, p);
    fp_poly x = fp_mod({0, 1}, m, p);
    fp_poly diff = xpe;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        diff[i] = (diff[i] + p - x[i]) % p;
    fp_trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(e/q)) - x, f) = 1 for each prime divisor q of e
    std::size_t n = e;
    for (std::size_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        fp_poly g = fp_powmod_x(e / q, m, p);
        fp_poly d = g;
        d.resize(std::max(d.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            d[i] = (d[i] + p - x[i]) % p;
        fp_poly gc = fp_gcd(m, d, p);
        if (gc.size() != 1) return false;
    }
    if (n > 1) {
        fp_poly g = fp_powmod_x(e / n, m, p);
        fp_poly d = g;
        d.resize(std::max(d.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            d[i] = (d[i] + p - x[i]) % p;
        fp_poly gc = fp_gcd(m, d, p);
        if (gc.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

// Deterministic irreducible search: candidates z^e + sum c_i z^i are
// scanned in increasing order of the base-p integer with digits (c_0,
// ..., c_{e-1}), and the first irreducible one is returned (low-to-high
// coefficients, leading 1 omitted).
inline std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t e) {
    if (!detail::is_prime_u32(p)) throw std::invalid_argument("find_irreducible: p not prime");
    if (e < 1) throw std::invalid_argument("find_irreducible: degree < 1");
    if (e == 1) return {};
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    for (std::uint64_t k = 0; k < q; ++k) {
        detail::fp_poly f(e + 1, 0);
        std::uint64_t t = k;
        for (std::uint32_t i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (detail::fp_is_irreducible(f, p)) {
            f.pop_back();
            return f;
        }
    }
    throw std::logic_error("find_irreducible: no candidate found");  // unreachable
}

// An immutable finite field F_{p^e}, q = p^e <= 2^20. All element
// operations act on packed felem values; Scalar below is the checked
// wrapper carrying its field.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = 1u << 20;

    static std::shared_ptr<const Field> prime(std::uint32_t p) {
        return std::shared_ptr<const Field>(new Field(p, 1, {}));
    }

    // modulus: coefficients of the monic irreducible, low-to-high,
    // leading 1 omitted (length e). Empty modulus triggers the
    // deterministic search.
    static std::shared_ptr<const Field> extension(std::uint32_t p, std::uint32_t e,
                                                  std::vector<std::uint32_t> modulus = {}) {
        if (e == 1) return prime(p);
        if (modulus.empty()) modulus = find_irreducible(p, e);
        return std::shared_ptr<const Field>(new Field(p, e, std::move(modulus)));
    }

    static std::shared_ptr<const Field> of_order(std::uint64_t q) {
        for (std::uint32_t p = 2; ; ++p) {
            if (!detail::is_prime_u32(p)) continue;
            if (q % p) continue;
            std::uint64_t t = q;
            std::uint32_t e = 0;
            while (t % p == 0) { t /= p; ++e; }
            if (t != 1) throw std::invalid_argument("field order is not a prime power");
            return extension(p, e);
        }
    }

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_as(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    felem zero() const { return 0; }
    felem one() const { return 1; }

    felem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<felem>(r);
    }

    felem add(felem a, felem b) const {
        if (e_ == 1) return (a + b) % p_;
        felem r = 0, m = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += ((a % p_ + b % p_) % p_) * m;
            a /= p_;
            b /= p_;
            m *= p_;
        }
        return r;
    }

    felem neg(felem a) const {
        if (e_ == 1) return a ? p_ - a : 0;
        felem r = 0, m = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint32_t c = a % p_;
            r += (c ? p_ - c : 0) * m;
            a /= p_;
            m *= p_;
        }
        return r;
    }

    felem sub(felem a, felem b) const { return add(a, neg(b)); }

    felem mul(felem a, felem b) const {
        if (e_ == 1)
            return static_cast<felem>(static_cast<std::uint64_t>(a) * b % p_);
        std::vector<std::uint32_t> da = digits(a), db = digits(b);
        std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
        for (std::uint32_t i = 0; i < e_; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
        }
        // reduce modulo the monic modulus z^e - (-modulus_)
        for (std::uint32_t i = 2 * e_ - 2; i >= e_; --i) {
            std::uint32_t c = prod[i];
            if (c) {
                prod[i] = 0;
                for (std::uint32_t j = 0; j < e_; ++j) {
                    std::uint64_t sub = static_cast<std::uint64_t>(c) * modulus_[j] % p_;
                    prod[i - e_ + j] = static_cast<std::uint32_t>(
                        (prod[i - e_ + j] + p_ - sub) % p_);
                }
            }
            if (i == e_) break;
        }
        felem r = 0, m = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += prod[i] * m;
            m *= p_;
        }
        return r;
    }

    felem pow(felem a, std::uint64_t n) const {
        felem r = 1, b = a;
        while (n) {
            if (n & 1) r = mul(r, b);
            b = mul(b, b);
            n >>= 1;
        }
        return r;
    }

    felem inv(felem a) const {
        if (a == 0) throw std::domain_error("field inverse of zero");
        return pow(a, q_ - 2);
    }

    felem frobenius(felem a) const { return pow(a, p_); }

    // inverse of the Frobenius automorphism (a^(p^(e-1)))
    felem frobenius_inv(felem a) const {
        felem r = a;
        for (std::uint32_t i = 0; i + 1 < e_; ++i) r = frobenius(r);
        return r;
    }

    std::vector<felem> enumerate() const {
        std::vector<felem> all(q_);
        for (std::uint64_t i = 0; i < q_; ++i) all[i] = static_cast<felem>(i);
        return all;
    }

    std::vector<std::uint32_t> digits(felem a) const {
        std::vector<std::uint32_t> d(e_);
        for (std::uint32_t i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    felem from_digits(const std::vector<std::uint32_t>& d) const {
        felem r = 0, m = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            r += (i < d.size() ? d[i] % p_ : 0) * m;
            m *= p_;
        }
        return r;
    }

    std::string to_string(felem a) const {
        if (e_ == 1) return std::to_string(a);
        std::string s = "[";
        for (std::uint32_t i = 0; i < e_; ++i) {
            if (i) s += ",";
            s += std::to_string(a % p_);
            a /= p_;
        }
        return s + "]";
    }

private:
    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
        : p_(p), e_(e), modulus_(std::move(modulus)) {
        if (!detail::is_prime_u32(p_)) throw std::invalid_argument("field characteristic not prime");
        if (e_ < 1) throw std::invalid_argument("field degree < 1");
        q_ = 1;
        for (std::uint32_t i = 0; i < e_; ++i) {
            q_ *= p_;
            if (q_ > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
        }
        if (e_ > 1) {
            if (modulus_.size() != e_)
                throw std::invalid_argument("modulus degree must equal extension degree");
            detail::fp_poly f = modulus_;
            for (auto& c : f) c %= p_;
            f.push_back(1);
            if (!detail::fp_is_irreducible(f, p_))
                throw std::invalid_argument("modulus is not irreducible over F_p");
            for (auto& c : modulus_) c %= p_;
        }
    }

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;  // low-to-high, leading 1 omitted
};

using FieldPtr = std::shared_ptr<const Field>;

inline void require_same_field(const Field& a, const Field& b, const char* where) {
    if (!a.same_as(b)) throw std::invalid_argument(std::string(where) + ": field mismatch");
}

// Checked element-with-field wrapper.
struct Scalar {
    FieldPtr field;
    felem v = 0;

    Scalar() = default;
    Scalar(FieldPtr f, felem value) : field(std::move(f)), v(value) {}

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        require_same_field(*a.field, *b.field, "scalar add");
        return {a.field, a.field->add(a.v, b.v)};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        require_same_field(*a.field, *b.field, "scalar sub");
        return {a.field, a.field->sub(a.v, b.v)};
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        require_same_field(*a.field, *b.field, "scalar mul");
        return {a.field, a.field->mul(a.v, b.v)};
    }
    Scalar operator-() const { return {field, field->neg(v)}; }
    Scalar inv() const { return {field, field->inv(v)}; }
    Scalar frobenius() const { return {field, field->frobenius(v)}; }
    bool operator==(const Scalar& o) const { return field->same_as(*o.field) && v == o.v; }
};

}  // namespace hypervar

#endif
