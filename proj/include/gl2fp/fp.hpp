#pragma once

// Exact arithmetic in F_p and structural queries on the cyclic group F_p^x.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gl2fp {

namespace detail {

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + static_cast<std::uint64_t>(p) - b);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t result = 1 % p;
    std::uint64_t b = base % p;
    while (exp > 0) {
        if (exp & 1) result = (result * b) % p;
        b = (b * b) % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow_mod(a, p - 2, p);
}

// Trial division; deterministic for the full 32-bit range.
inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint32_t q = 5; static_cast<std::uint64_t>(q) * q <= n; q += 6) {
        if (n % q == 0 || n % (q + 2) == 0) return false;
    }
    return true;
}

// Prime factorization (prime, multiplicity), ascending.
inline std::vector<std::pair<std::uint32_t, int>> factorize(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, int>> out;
    for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            int e = 0;
            while (n % q == 0) { n /= q; ++e; }
            out.emplace_back(q, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace detail

/// Validated odd prime p with 5 <= p < 2^31.  Group enumeration is only
/// feasible for tiny p; the bound formulas use arbitrary precision separately.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p) {
        if (p < 5 || p >= (1ull << 31) || !detail::is_prime_u32(static_cast<std::uint32_t>(p)))
            throw std::domain_error("modulus must be a prime >= 5 below 2^31");
        p_ = static_cast<std::uint32_t>(p);
    }
    std::uint32_t value() const { return p_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.p_ != b.p_; }

private:
    std::uint32_t p_;
};

/// Residue in [0, p-1]; arithmetic reduces eagerly so equality is structural.
class Scalar {
public:
    Scalar(std::uint64_t value, PrimeModulus mod) : v_(static_cast<std::uint32_t>(value % mod.value())), mod_(mod) {}

    static Scalar from_int(std::int64_t value, PrimeModulus mod) {
        std::int64_t p = mod.value();
        std::int64_t r = value % p;
        if (r < 0) r += p;
        return Scalar(static_cast<std::uint64_t>(r), mod);
    }

    std::uint32_t value() const { return v_; }
    PrimeModulus modulus() const { return mod_; }
    std::uint32_t p() const { return mod_.value(); }
    bool is_zero() const { return v_ == 0; }

    Scalar operator*(Scalar rhs) const { check(rhs); return Scalar(detail::mul_mod(v_, rhs.v_, p()), mod_); }
    Scalar operator+(Scalar rhs) const { check(rhs); return Scalar(detail::add_mod(v_, rhs.v_, p()), mod_); }
    Scalar operator-(Scalar rhs) const { check(rhs); return Scalar(detail::sub_mod(v_, rhs.v_, p()), mod_); }
    Scalar operator-() const { return Scalar(detail::neg_mod(v_, p()), mod_); }
    Scalar pow(std::uint64_t e) const { return Scalar(detail::pow_mod(v_, e, p()), mod_); }
    Scalar inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
        return Scalar(detail::inv_mod(v_, p()), mod_);
    }

    friend bool operator==(Scalar a, Scalar b) { return a.v_ == b.v_ && a.mod_ == b.mod_; }
    friend bool operator!=(Scalar a, Scalar b) { return !(a == b); }

private:
    void check(Scalar rhs) const {
        if (mod_ != rhs.mod_) throw std::invalid_argument("mixed moduli");
    }
    std::uint32_t v_;
    PrimeModulus mod_;
};

/// Least k >= 1 with x^k = 1; divides p-1.
inline std::uint32_t mult_order(Scalar x) {
    if (x.is_zero()) throw std::domain_error("mult_order of zero");
    std::uint32_t p = x.p();
    std::uint32_t ord = p - 1;
    for (auto [q, e] : detail::factorize(p - 1)) {
        for (int i = 0; i < e; ++i) {
            if (ord % q == 0 && detail::pow_mod(x.value(), ord / q, p) == 1)
                ord /= q;
            else
                break;
        }
    }
    return ord;
}

/// Euler criterion: x is a square in F_p^x iff x^((p-1)/2) = 1.
inline bool is_quadratic_residue(Scalar x) {
    if (x.is_zero()) throw std::domain_error("is_quadratic_residue of zero");
    return detail::pow_mod(x.value(), (x.p() - 1) / 2, x.p()) == 1;
}

/// Smallest positive residue generating F_p^x.  Deterministic.
inline Scalar primitive_root(PrimeModulus mod) {
    std::uint32_t p = mod.value();
    auto factors = detail::factorize(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto [q, e] : factors) {
            (void)e;
            if (detail::pow_mod(g, (p - 1) / q, p) == 1) { generator = false; break; }
        }
        if (generator) return Scalar(g, mod);
    }
    throw std::logic_error("no primitive root found");  // unreachable for prime p
}

/// Smallest non-square in F_p^x.
inline Scalar smallest_nonresidue(PrimeModulus mod) {
    for (std::uint32_t a = 2; a < mod.value(); ++a) {
        Scalar s(a, mod);
        if (!is_quadratic_residue(s)) return s;
    }
    throw std::logic_error("no quadratic non-residue found");  // unreachable for p >= 3
}

/// Square root in F_p (Tonelli-Shanks), or nullopt for non-residues.
inline std::optional<Scalar> sqrt_mod(Scalar x) {
    std::uint32_t p = x.p();
    if (x.is_zero()) return Scalar(0, x.modulus());
    if (!is_quadratic_residue(x)) return std::nullopt;
    if (p % 4 == 3) return x.pow((p + 1) / 4);

    std::uint32_t q = p - 1;
    std::uint32_t s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::uint32_t z = smallest_nonresidue(x.modulus()).value();

    std::uint32_t m = s;
    std::uint32_t c = detail::pow_mod(z, q, p);
    std::uint32_t t = detail::pow_mod(x.value(), q, p);
    std::uint32_t r = detail::pow_mod(x.value(), (q + 1) / 2, p);
    while (t != 1) {
        std::uint32_t i = 0;
        std::uint32_t t2 = t;
        while (t2 != 1) { t2 = detail::mul_mod(t2, t2, p); ++i; }
        std::uint32_t b = detail::pow_mod(c, 1u << (m - i - 1), p);
        m = i;
        c = detail::mul_mod(b, b, p);
        t = detail::mul_mod(t, c, p);
        r = detail::mul_mod(r, b, p);
    }
    return Scalar(r, x.modulus());
}

/// Multiplicative order of -gamma where gamma has order delta dividing p-1:
/// 2*delta when delta is odd, delta/2 when delta = 2 (mod 4), delta when
/// 4 | delta.  The value does not depend on the choice of gamma.
inline std::uint32_t minus_gamma_order(std::uint32_t delta, PrimeModulus mod) {
    std::uint32_t p = mod.value();
    if (delta == 0 || (p - 1) % delta != 0)
        throw std::domain_error("delta must divide p-1");
    if (delta % 2 == 1) return 2 * delta;
    if (delta % 4 == 2) return delta / 2;
    return delta;
}

}  // namespace gl2fp
