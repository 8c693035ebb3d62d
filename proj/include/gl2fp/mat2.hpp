#pragma once

// The group GL2(F_p): element arithmetic, characteristic polynomials,
// element orders, projective reduction and line stabilizers.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gl2fp/fp.hpp"

namespace gl2fp {

/// Invertible 2x2 matrix over F_p, row-major entries (a b; c d).
class Mat2 {
public:
    Mat2(PrimeModulus mod, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
        : mod_(mod),
          a_(static_cast<std::uint32_t>(a % mod.value())),
          b_(static_cast<std::uint32_t>(b % mod.value())),
          c_(static_cast<std::uint32_t>(c % mod.value())),
          d_(static_cast<std::uint32_t>(d % mod.value())) {
        if (det_raw() == 0) throw std::invalid_argument("matrix is singular mod p");
    }

    static Mat2 from_ints(PrimeModulus mod, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        auto r = [&](std::int64_t v) {
            std::int64_t p = mod.value();
            std::int64_t m = v % p;
            if (m < 0) m += p;
            return static_cast<std::uint64_t>(m);
        };
        return Mat2(mod, r(a), r(b), r(c), r(d));
    }

    static Mat2 identity(PrimeModulus mod) { return Mat2(mod, 1, 0, 0, 1); }
    static Mat2 scalar(PrimeModulus mod, Scalar lambda) {
        return Mat2(mod, lambda.value(), 0, 0, lambda.value());
    }
    static Mat2 diagonal(PrimeModulus mod, std::uint64_t x, std::uint64_t y) {
        return Mat2(mod, x, 0, 0, y);
    }

    std::uint32_t a() const { return a_; }
    std::uint32_t b() const { return b_; }
    std::uint32_t c() const { return c_; }
    std::uint32_t d() const { return d_; }
    PrimeModulus modulus() const { return mod_; }
    std::uint32_t p() const { return mod_.value(); }

    Scalar det() const { return Scalar(det_raw(), mod_); }
    Scalar trace() const { return Scalar(detail::add_mod(a_, d_, p()), mod_); }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
    bool is_scalar() const { return b_ == 0 && c_ == 0 && a_ == d_; }

    Mat2 operator*(const Mat2& rhs) const {
        if (mod_ != rhs.mod_) throw std::invalid_argument("mixed moduli");
        std::uint32_t q = p();
        using detail::add_mod;
        using detail::mul_mod;
        return Mat2(unchecked{}, mod_,
                    add_mod(mul_mod(a_, rhs.a_, q), mul_mod(b_, rhs.c_, q), q),
                    add_mod(mul_mod(a_, rhs.b_, q), mul_mod(b_, rhs.d_, q), q),
                    add_mod(mul_mod(c_, rhs.a_, q), mul_mod(d_, rhs.c_, q), q),
                    add_mod(mul_mod(c_, rhs.b_, q), mul_mod(d_, rhs.d_, q), q));
    }

    Mat2 inverse() const {
        std::uint32_t q = p();
        std::uint32_t di = detail::inv_mod(det_raw(), q);
        using detail::mul_mod;
        using detail::neg_mod;
        return Mat2(unchecked{}, mod_,
                    mul_mod(d_, di, q), mul_mod(neg_mod(b_, q), di, q),
                    mul_mod(neg_mod(c_, q), di, q), mul_mod(a_, di, q));
    }

    Mat2 pow(unsigned __int128 e) const {
        Mat2 result = identity(mod_);
        Mat2 base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    Mat2 conjugate_by(const Mat2& g) const { return g * (*this) * g.inverse(); }

    /// Row-major entries packed as ((a*p + b)*p + c)*p + d; unique per matrix.
    std::uint64_t encode() const {
        std::uint64_t q = p();
        return ((static_cast<std::uint64_t>(a_) * q + b_) * q + c_) * q + d_;
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.mod_ == y.mod_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
    friend bool operator<(const Mat2& x, const Mat2& y) {
        return std::tie(x.a_, x.b_, x.c_, x.d_) < std::tie(y.a_, y.b_, y.c_, y.d_);
    }

private:
    struct unchecked {};
    Mat2(unchecked, PrimeModulus mod, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d)
        : mod_(mod), a_(a), b_(b), c_(c), d_(d) {}

    std::uint32_t det_raw() const {
        std::uint32_t q = p();
        return detail::sub_mod(detail::mul_mod(a_, d_, q), detail::mul_mod(b_, c_, q), q);
    }

    PrimeModulus mod_;
    std::uint32_t a_, b_, c_, d_;
};

/// Point of P^1(F_p): a line through 0, normalized so the first nonzero
/// coordinate of the representative column (u, v) is 1.  Exactly p+1 exist.
class ProjLine {
public:
    ProjLine(PrimeModulus mod, std::uint64_t u, std::uint64_t v) : mod_(mod) {
        std::uint32_t q = mod.value();
        std::uint32_t uu = static_cast<std::uint32_t>(u % q);
        std::uint32_t vv = static_cast<std::uint32_t>(v % q);
        if (uu == 0 && vv == 0) throw std::invalid_argument("zero vector spans no line");
        if (uu != 0) {
            std::uint32_t s = detail::inv_mod(uu, q);
            u_ = 1;
            v_ = detail::mul_mod(vv, s, q);
        } else {
            u_ = 0;
            v_ = 1;
        }
    }

    std::uint32_t u() const { return u_; }
    std::uint32_t v() const { return v_; }
    PrimeModulus modulus() const { return mod_; }

    /// (1, t) -> t, (0, 1) -> p; a bijection onto [0, p].
    std::uint32_t index() const { return u_ == 1 ? v_ : mod_.value(); }

    static std::vector<ProjLine> all(PrimeModulus mod) {
        std::vector<ProjLine> lines;
        lines.reserve(mod.value() + 1);
        for (std::uint32_t t = 0; t < mod.value(); ++t) lines.emplace_back(mod, 1, t);
        lines.emplace_back(mod, 0, 1);
        return lines;
    }

    ProjLine apply(const Mat2& m) const {
        std::uint32_t q = mod_.value();
        using detail::add_mod;
        using detail::mul_mod;
        std::uint32_t nu = add_mod(mul_mod(m.a(), u_, q), mul_mod(m.b(), v_, q), q);
        std::uint32_t nv = add_mod(mul_mod(m.c(), u_, q), mul_mod(m.d(), v_, q), q);
        return ProjLine(mod_, nu, nv);
    }

    friend bool operator==(ProjLine x, ProjLine y) {
        return x.mod_ == y.mod_ && x.u_ == y.u_ && x.v_ == y.v_;
    }
    friend bool operator!=(ProjLine x, ProjLine y) { return !(x == y); }
    friend bool operator<(ProjLine x, ProjLine y) { return x.index() < y.index(); }

private:
    PrimeModulus mod_;
    std::uint32_t u_, v_;
};

/// Class of a matrix in PGL2(F_p): canonical representative scaled so the
/// first nonzero entry (row-major scan) is 1.
class PglClass {
public:
    explicit PglClass(const Mat2& m) : rep_(canonicalize(m)) {}

    const Mat2& representative() const { return rep_; }

    friend bool operator==(const PglClass& x, const PglClass& y) { return x.rep_ == y.rep_; }
    friend bool operator!=(const PglClass& x, const PglClass& y) { return !(x == y); }
    friend bool operator<(const PglClass& x, const PglClass& y) { return x.rep_ < y.rep_; }

private:
    static Mat2 canonicalize(const Mat2& m) {
        std::uint32_t lead = m.a() != 0 ? m.a() : (m.b() != 0 ? m.b() : (m.c() != 0 ? m.c() : m.d()));
        std::uint32_t s = detail::inv_mod(lead, m.p());
        std::uint32_t q = m.p();
        using detail::mul_mod;
        return Mat2(m.modulus(), mul_mod(m.a(), s, q), mul_mod(m.b(), s, q),
                    mul_mod(m.c(), s, q), mul_mod(m.d(), s, q));
    }

    Mat2 rep_;
};

namespace detail {

// Multiset of prime factors of |GL2(F_p)| = p (p-1)^2 (p+1).
inline std::vector<std::pair<std::uint32_t, int>> gl2_exponent_factors(std::uint32_t p) {
    std::vector<std::pair<std::uint32_t, int>> factors = factorize(p - 1);
    for (auto& f : factors) f.second *= 2;
    for (auto [q, e] : factorize(p + 1)) {
        bool merged = false;
        for (auto& f : factors) {
            if (f.first == q) { f.second += e; merged = true; break; }
        }
        if (!merged) factors.emplace_back(q, e);
    }
    factors.emplace_back(p, 1);
    return factors;
}

// Given a multiple of the true order (as a factored product) and a predicate
// closed under multiples, strip prime factors while the predicate still holds.
template <typename Pred>
std::uint64_t reduce_order(const std::vector<std::pair<std::uint32_t, int>>& factors, Pred holds) {
    unsigned __int128 ord = 1;
    for (auto [q, e] : factors)
        for (int i = 0; i < e; ++i) ord *= q;
    for (auto [q, e] : factors) {
        for (int i = 0; i < e; ++i) {
            if (ord % q == 0 && holds(ord / q))
                ord /= q;
            else
                break;
        }
    }
    return static_cast<std::uint64_t>(ord);
}

}  // namespace detail

/// Least k >= 1 with m^k = I; divides (p^2-1)(p^2-p).
inline std::uint64_t element_order(const Mat2& m) {
    auto factors = detail::gl2_exponent_factors(m.p());
    return detail::reduce_order(factors, [&](unsigned __int128 k) { return m.pow(k).is_identity(); });
}

/// Order of the class of m in PGL2(F_p): least k with m^k scalar.
inline std::uint64_t pgl_order(const Mat2& m) {
    auto factors = detail::gl2_exponent_factors(m.p());
    return detail::reduce_order(factors, [&](unsigned __int128 k) { return m.pow(k).is_scalar(); });
}

/// All projective lines L with m L = L; the count is 0, 1, 2 or p+1.
inline std::vector<ProjLine> stable_lines(const Mat2& m) {
    std::vector<ProjLine> fixed;
    for (const ProjLine& line : ProjLine::all(m.modulus()))
        if (line.apply(m) == line) fixed.push_back(line);
    return fixed;
}

/// Coefficients (t, n) of the characteristic polynomial X^2 - tX + n.
inline std::pair<Scalar, Scalar> char_poly(const Mat2& m) { return {m.trace(), m.det()}; }

/// True iff X^2 - tX + n has no root in F_p (discriminant a non-square).
inline bool has_irreducible_char_poly(const Mat2& m) {
    std::uint32_t q = m.p();
    std::uint32_t t = m.trace().value();
    std::uint32_t disc = detail::sub_mod(detail::mul_mod(t, t, q),
                                         detail::mul_mod(4 % q, m.det().value(), q), q);
    if (disc == 0) return false;
    return !is_quadratic_residue(Scalar(disc, m.modulus()));
}

}  // namespace gl2fp

template <>
struct std::hash<gl2fp::Mat2> {
    std::size_t operator()(const gl2fp::Mat2& m) const noexcept {
        std::uint64_t x = m.encode() + 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};
