#pragma once

// Homothety-order guarantees for the irreducible case: per-taxonomy-case
// formulas, the exceptional-exclusion threshold, and the assembled theorems
// (degree-only version, unramified version, and the rational-field version).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "gl2fp/fp.hpp"

namespace gl2fp {

/// Arithmetic data of the base number field K.
struct FieldProfile {
    std::uint32_t d;       ///< degree of K over Q
    std::uint32_t h;       ///< class number of K
    std::uint32_t e;       ///< least ramification index of a place above p
    bool p_unramified;     ///< p unramified in K/Q (forces e = 1)

    FieldProfile(std::uint32_t degree, std::uint32_t class_number, std::uint32_t ram_index,
                 bool unramified)
        : d(degree), h(class_number), e(ram_index), p_unramified(unramified) {
        if (d < 1 || h < 1 || e < 1 || e > d)
            throw std::domain_error("field profile requires d,h >= 1 and 1 <= e <= d");
        if (p_unramified && e != 1)
            throw std::domain_error("p unramified forces ramification index 1");
    }

    static FieldProfile rationals() { return FieldProfile(1, 1, 1, true); }
};

enum class GuaranteeKind { none, order_at_least, squares, all };

/// What the theorems certify about the homothety subgroup inside the image.
struct HomothetyGuarantee {
    GuaranteeKind kind = GuaranteeKind::none;
    std::optional<std::uint64_t> witness_order;  ///< order certified when kind != none

    static HomothetyGuarantee none() { return {}; }
    static HomothetyGuarantee order_at_least(std::uint64_t n) {
        return {GuaranteeKind::order_at_least, n};
    }
    static HomothetyGuarantee squares(PrimeModulus p) {
        return {GuaranteeKind::squares, (p.value() - 1) / 2};
    }
    static HomothetyGuarantee all(PrimeModulus p) {
        return {GuaranteeKind::all, static_cast<std::uint64_t>(p.value() - 1)};
    }

    friend bool operator==(const HomothetyGuarantee& a, const HomothetyGuarantee& b) {
        return a.kind == b.kind && a.witness_order == b.witness_order;
    }
};

/// Homothety order when the image contains SL2: 2 gcd(delta, (p-1)/2).
inline std::uint32_t homothety_order_sl2_case(std::uint32_t delta, PrimeModulus mod) {
    std::uint32_t p = mod.value();
    if (delta == 0 || (p - 1) % delta != 0) throw std::domain_error("delta must divide p-1");
    return 2 * std::gcd(delta, (p - 1) / 2);
}

/// Homothety order in the Cartan-normalizer cases: delta / gcd(2, delta).
inline std::uint32_t homothety_order_cartan_case(std::uint32_t delta) {
    return delta % 2 == 1 ? delta : delta / 2;
}

/// Any prime strictly above 20e + 1 cannot have exceptional image.
inline std::uint64_t exceptional_exclusion_threshold(std::uint32_t e) {
    if (e < 1) throw std::domain_error("ramification index must be >= 1");
    return 20ull * e + 1;
}

/// With a place above p unramified in K/Q, the threshold sharpens to p >= 17.
inline constexpr std::uint32_t kUnramifiedExceptionalMinP = 17;

/// Exact non-negative rational, reduced.
struct Rational {
    std::uint64_t num;
    std::uint64_t den;

    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (d == 0) throw std::domain_error("zero denominator");
        std::uint64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    bool exceeds(std::uint64_t bound) const {
        return num > static_cast<unsigned __int128>(bound) * den;
    }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

/// Lower bound (p-1)/(4e) for the largest element order in the projective
/// image; strictly exceeds 5 exactly when p > 20e + 1.  Accepts any p >= 2
/// so threshold behavior can be inspected off the primes as well.
inline Rational pgl_order_lower_bound(std::uint64_t p, std::uint32_t e) {
    if (p < 2 || e < 1) throw std::domain_error("need p >= 2 and e >= 1");
    return Rational(p - 1, 4ull * e);
}

/// Degree-only theorem: above 20d + 1 the image contains homotheties of
/// order at least (p-1)/(2d).
inline HomothetyGuarantee irreducible_theorem_I(const FieldProfile& field, PrimeModulus mod) {
    std::uint64_t p = mod.value();
    if (p <= exceptional_exclusion_threshold(field.d)) return HomothetyGuarantee::none();
    std::uint64_t order = (p - 1 + 2ull * field.d - 1) / (2ull * field.d);  // ceil
    return HomothetyGuarantee::order_at_least(order);
}

/// Unramified theorem: for p >= 17 the image contains the squares of the
/// homotheties, and all of them when p = 1 (mod 4).
inline HomothetyGuarantee irreducible_theorem_II(PrimeModulus mod, bool p_unramified) {
    std::uint32_t p = mod.value();
    if (!p_unramified || p < kUnramifiedExceptionalMinP) return HomothetyGuarantee::none();
    return p % 4 == 1 ? HomothetyGuarantee::all(mod) : HomothetyGuarantee::squares(mod);
}

/// Primes whose mod-p representation over Q may be reducible, stored
/// verbatim as data.
inline constexpr std::array<std::uint32_t, 12> kMazurReducibleSet = {2,  3,  5,  7,  13, 11,
                                                                     17, 19, 37, 43, 67, 163};

/// Primes excluded from the rational-field theorem beyond the threshold.
inline constexpr std::array<std::uint32_t, 4> kQTheoremExcluded = {37, 43, 67, 163};

/// Rational-field theorem: for p >= 23 outside {37, 43, 67, 163} the image
/// contains all squares of the homotheties, and all homotheties when
/// p = 1 (mod 4).
inline HomothetyGuarantee q_theorem(PrimeModulus mod) {
    std::uint32_t p = mod.value();
    if (p < 23) return HomothetyGuarantee::none();
    if (std::find(kQTheoremExcluded.begin(), kQTheoremExcluded.end(), p) != kQTheoremExcluded.end())
        return HomothetyGuarantee::none();
    return p % 4 == 1 ? HomothetyGuarantee::all(mod) : HomothetyGuarantee::squares(mod);
}

}  // namespace gl2fp
