#pragma once

// The reducible case: the inertia-exponent table with its solvability
// congruence, the diagonal-exponent casework for mixed coefficient families,
// and the exact big-integer prime bounds.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gl2fp/fp.hpp"
#include "gl2fp/irreducible.hpp"

namespace gl2fp {

using BigInt = boost::multiprecision::cpp_int;

enum class ApCongruence { none, p2_mod3, p3_mod4 };

/// One cell of the inertia-exponent table: ramification index e_ram of the
/// good-reduction extension, Raynaud exponent r, and the resulting
/// coefficient a = 12 r / e_ram with its side-condition on p.  Cells with no
/// solution to the congruence e a' = r (mod p-1) are marked invalid.
struct ApEntry {
    std::uint32_t e_ram;
    std::uint32_t r;
    bool valid;
    std::uint32_t a;            ///< meaningful only when valid
    ApCongruence congruence;    ///< side-condition on p, when valid
};

inline bool is_supported_e_ram(std::uint32_t e) {
    return e == 1 || e == 2 || e == 3 || e == 4 || e == 6;
}

/// Table cell for (e_ram, r); exact, including invalid markers and
/// congruence annotations.
inline ApEntry ap_from_table(std::uint32_t e_ram, std::uint32_t r) {
    if (!is_supported_e_ram(e_ram) || r > e_ram)
        throw std::domain_error("e_ram must be in {1,2,3,4,6} with 0 <= r <= e_ram");
    ApEntry cell{e_ram, r, true, 0, ApCongruence::none};
    if (e_ram % 2 == 0 && r % 2 == 1) {
        cell.valid = false;
        return cell;
    }
    cell.a = 12 * r / e_ram;
    if (e_ram % 3 == 0 && r % 3 != 0)
        cell.congruence = ApCongruence::p2_mod3;
    else if (e_ram == 4 && r % 4 != 0)
        cell.congruence = ApCongruence::p3_mod4;
    return cell;
}

/// All 21 cells of the table, row-major by e_ram then r.
inline std::vector<ApEntry> ap_table() {
    std::vector<ApEntry> cells;
    for (std::uint32_t e : {1u, 2u, 3u, 4u, 6u})
        for (std::uint32_t r = 0; r <= e; ++r) cells.push_back(ap_from_table(e, r));
    return cells;
}

namespace detail {

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace detail

/// Smallest non-negative a' with e_ram * a' = r (mod p-1), or nullopt when
/// gcd(e_ram, p-1) does not divide r.
inline std::optional<std::uint32_t> solve_star_congruence(std::uint32_t e_ram, std::uint32_t r,
                                                          PrimeModulus mod) {
    if (!is_supported_e_ram(e_ram) || r > e_ram)
        throw std::domain_error("e_ram must be in {1,2,3,4,6} with 0 <= r <= e_ram");
    std::int64_t m = mod.value() - 1;
    std::int64_t x, y;
    std::int64_t g = detail::ext_gcd(e_ram, m, x, y);
    if (r % g != 0) return std::nullopt;
    std::int64_t step = m / g;
    std::int64_t sol = ((x * (r / g)) % step + step) % step;
    return static_cast<std::uint32_t>(sol);
}

/// Verdict of the reducible-case casework for one coefficient family.
enum class ReducibleOutcomeKind { homothety_exponent, squares, prime_bounded };

struct ReducibleOutcome {
    ReducibleOutcomeKind kind;
    std::uint32_t exponent = 0;  ///< in {4, 8, 12} for homothety_exponent
    BigInt bound;                ///< set for prime_bounded

    static ReducibleOutcome homothety_exponent(std::uint32_t k) {
        return {ReducibleOutcomeKind::homothety_exponent, k, BigInt(0)};
    }
    static ReducibleOutcome squares() { return {ReducibleOutcomeKind::squares, 0, BigInt(0)}; }
    static ReducibleOutcome prime_bounded(BigInt b) {
        return {ReducibleOutcomeKind::prime_bounded, 0, std::move(b)};
    }

    friend bool operator==(const ReducibleOutcome& a, const ReducibleOutcome& b) {
        return a.kind == b.kind && a.exponent == b.exponent && a.bound == b.bound;
    }
};

/// Diagonal exponent forced by a coefficient a = 6: both diagonal characters
/// square to the exponent 1 + (p-1)/2, whose image is exactly the squares.
/// Only primes p = 3 (mod 4) admit a = 6.
struct A6ScalarExponent {
    std::uint32_t exponent;
    ReducibleOutcome guarantee;
};

inline A6ScalarExponent a6_scalar_exponent(PrimeModulus mod) {
    std::uint32_t p = mod.value();
    if (p % 4 != 3) throw std::domain_error("coefficient 6 requires p = 3 (mod 4)");
    return {1 + (p - 1) / 2, ReducibleOutcome::squares()};
}

/// Casework for two distinct coefficients a1 != a2 from {0, 4, 8, 12}: the
/// product of the two witness diagonals is a scalar generating the claimed
/// power subgroup of the homotheties.
inline ReducibleOutcome combine_ap_pair(std::uint32_t a1, std::uint32_t a2, PrimeModulus mod) {
    auto ok = [](std::uint32_t a) { return a == 0 || a == 4 || a == 8 || a == 12; };
    if (!ok(a1) || !ok(a2))
        throw std::domain_error("pair coefficients must lie in {0, 4, 8, 12}");
    if (a1 == a2) throw std::domain_error("equal coefficients are a bounded case, not a pair case");
    std::uint32_t lo = std::min(a1, a2), hi = std::max(a1, a2);
    bool needs_2mod3 = (lo == 4 || hi == 4 || lo == 8 || hi == 8);
    if (needs_2mod3 && mod.value() % 3 != 2)
        throw std::domain_error("coefficients 4 and 8 require p = 2 (mod 3)");
    if (lo == 0 && hi == 12) return ReducibleOutcome::homothety_exponent(12);
    if ((lo == 0 && hi == 8) || (lo == 4 && hi == 12)) return ReducibleOutcome::homothety_exponent(8);
    return ReducibleOutcome::homothety_exponent(4);  // {0,4}, {4,8}, {8,12}
}

/// Torsion-point bound (1 + 3^{D/2})^2 for a p-torsion point over a field of
/// degree D; used with D = 12dh.
inline BigInt oesterle_torsion_bound(std::uint32_t D) {
    if (D == 0 || D % 2 != 0) throw std::domain_error("degree must be even and positive");
    BigInt t = boost::multiprecision::pow(BigInt(3), D / 2) + 1;
    return t * t;
}

/// Frobenius-compatibility bound (2^{6dh} + 2^{4dh})^2.
inline BigInt frobenius_norm_bound(std::uint32_t d, std::uint32_t h) {
    if (d < 1 || h < 1) throw std::domain_error("d and h must be >= 1");
    std::uint32_t dh = d * h;
    BigInt t = boost::multiprecision::pow(BigInt(2), 6 * dh) + boost::multiprecision::pow(BigInt(2), 4 * dh);
    return t * t;
}

/// Frobenius data at a place away from p with potentially good reduction:
/// integer trace and norm of the characteristic polynomial X^2 - tX + n,
/// whose roots are complex conjugates of absolute value sqrt(n).
struct FrobeniusData {
    std::int64_t t;
    std::int64_t n;
    std::uint32_t h;

    FrobeniusData(std::int64_t trace, std::int64_t norm, std::uint32_t class_number)
        : t(trace), n(norm), h(class_number) {
        if (n < 1 || h < 1) throw std::domain_error("norm and class number must be >= 1");
        if (t * t > 4 * n) throw std::domain_error("trace^2 must not exceed 4*norm");
    }
};

/// The nonzero integer N = (beta^{12h} - n^{4h})(conj(beta)^{12h} - n^{4h})
/// divisible by p, computed exactly as n^{12h} - n^{4h} s_{12h} + n^{8h}
/// through the integer recurrence s_k = t s_{k-1} - n s_{k-2}, s_0 = 2,
/// s_1 = t.  Satisfies 0 < N <= (n^{6h} + n^{4h})^2.
inline BigInt frobenius_norm_divisor(const FrobeniusData& fd) {
    if (fd.n < 2) throw std::domain_error("norm must be >= 2");
    std::uint32_t k = 12 * fd.h;
    BigInt s_prev = 2, s_cur = fd.t;
    for (std::uint32_t i = 2; i <= k; ++i) {
        BigInt s_next = fd.t * s_cur - fd.n * s_prev;
        s_prev = s_cur;
        s_cur = s_next;
    }
    BigInt n(fd.n);
    using boost::multiprecision::pow;
    return pow(n, 12 * fd.h) - pow(n, 4 * fd.h) * s_cur + pow(n, 8 * fd.h);
}

/// Nonempty multiset of inertia coefficients, one per place above p.
class ApFamily {
public:
    explicit ApFamily(std::vector<std::uint32_t> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::domain_error("coefficient family must be nonempty");
        for (std::uint32_t a : values_)
            if (a != 0 && a != 4 && a != 6 && a != 8 && a != 12)
                throw std::domain_error("coefficients must lie in {0, 4, 6, 8, 12}");
    }
    const std::vector<std::uint32_t>& values() const { return values_; }
    bool contains(std::uint32_t a) const {
        return std::find(values_.begin(), values_.end(), a) != values_.end();
    }

private:
    std::vector<std::uint32_t> values_;
};

/// Route a coefficient family to its casework outcome.  Mixed pairs pick the
/// pair with the smallest guaranteed exponent (ties by smallest first member).
inline ReducibleOutcome classify_ap_family(const ApFamily& family, PrimeModulus mod,
                                           const FieldProfile& field) {
    std::uint32_t p = mod.value();
    bool has6 = family.contains(6);
    bool has48 = family.contains(4) || family.contains(8);
    if (has6 && p % 4 != 3)
        throw std::domain_error("coefficient 6 requires p = 3 (mod 4)");
    if (has48 && p % 3 != 2)
        throw std::domain_error("coefficients 4 and 8 require p = 2 (mod 3)");

    if (has6) return ReducibleOutcome::squares();

    std::vector<std::uint32_t> distinct(family.values());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    if (distinct.size() >= 2) {
        auto pair_exponent = [](std::uint32_t lo, std::uint32_t hi) -> std::uint32_t {
            if (lo == 0 && hi == 12) return 12;
            if ((lo == 0 && hi == 8) || (lo == 4 && hi == 12)) return 8;
            return 4;
        };
        std::uint32_t best_i = 0, best_j = 1;
        std::uint32_t best = pair_exponent(distinct[0], distinct[1]);
        for (std::uint32_t i = 0; i < distinct.size(); ++i)
            for (std::uint32_t j = i + 1; j < distinct.size(); ++j) {
                std::uint32_t e = pair_exponent(distinct[i], distinct[j]);
                if (e < best) { best = e; best_i = i; best_j = j; }
            }
        return combine_ap_pair(distinct[best_i], distinct[best_j], mod);
    }

    std::uint32_t a = distinct.front();
    if (a == 0 || a == 12)
        return ReducibleOutcome::prime_bounded(oesterle_torsion_bound(12 * field.d * field.h));
    return ReducibleOutcome::prime_bounded(frobenius_norm_bound(field.d, field.h));
}

/// Bound of the reducible-case theorem: the torsion bound dominates the
/// Frobenius bound for every dh >= 1, so the maximum is (1 + 3^{6dh})^2.
inline BigInt uniform_bound_reducible(std::uint32_t d, std::uint32_t h) {
    if (d < 1 || h < 1) throw std::domain_error("d and h must be >= 1");
    BigInt a = oesterle_torsion_bound(12 * d * h);
    BigInt b = frobenius_norm_bound(d, h);
    return a >= b ? a : b;
}

/// Degree-only threshold variant (1 + 3^{6d})^2 used by the orbit corollary;
/// the class number does not appear in its statement.
inline BigInt orbit_bound_threshold(std::uint32_t d) {
    if (d < 1) throw std::domain_error("d must be >= 1");
    return oesterle_torsion_bound(12 * d);
}

/// Lower bound ceil((p-1)/12) for the orbit-intersection count of a point of
/// order p.
inline std::uint64_t orbit_lower_bound(PrimeModulus mod) {
    return (static_cast<std::uint64_t>(mod.value()) - 1 + 11) / 12;
}

/// Local character data away from p, exposed as constants.
struct CharacterLocalData {
    std::array<std::uint32_t, 5> good_reduction_inertia_divisors{1, 2, 3, 4, 6};
    bool lambda2_unramified_multiplicative = true;   ///< lambda^2 unramified at multiplicative places
    bool lambda12_unramified_outside_p = true;       ///< lambda^12 unramified away from p
};

inline CharacterLocalData nonramified_character_orders() { return {}; }

/// Inertia image orders possible under potentially good reduction: divisors
/// of 4 or of 6.
inline bool inertia_order_allowed(std::uint32_t k) {
    return k != 0 && (4 % k == 0 || 6 % k == 0);
}

/// Frobenius values of lambda^2 at a multiplicative place of norm n: 1 or
/// n^2 mod p.
inline std::array<std::uint32_t, 2> multiplicative_frobenius_values(std::uint64_t norm,
                                                                    PrimeModulus mod) {
    std::uint32_t p = mod.value();
    std::uint32_t n = static_cast<std::uint32_t>(norm % p);
    return {1, detail::mul_mod(n, n, p)};
}

}  // namespace gl2fp
