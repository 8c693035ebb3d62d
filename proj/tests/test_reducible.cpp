#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <set>

#include "gl2fp/mat2.hpp"
#include "gl2fp/reducible.hpp"
#include "test_util.hpp"

using namespace gl2fp;

namespace {

// squares of F_p^x by enumeration
std::set<std::uint32_t> square_set(std::uint32_t p) {
    std::set<std::uint32_t> out;
    for (std::uint64_t y = 1; y < p; ++y) out.insert(static_cast<std::uint32_t>(y * y % p));
    return out;
}

std::set<std::uint32_t> power_image(std::uint32_t p, std::uint32_t k) {
    std::set<std::uint32_t> out;
    for (std::uint32_t y = 1; y < p; ++y) out.insert(detail::pow_mod(y, k, p));
    return out;
}

bool in_congruence_class(std::uint32_t p, ApCongruence c) {
    switch (c) {
        case ApCongruence::p2_mod3: return p % 3 == 2;
        case ApCongruence::p3_mod4: return p % 4 == 3;
        default: return true;
    }
}

using Float = boost::multiprecision::cpp_bin_float_50;

// |beta^{12h} - n^{4h}|^2 evaluated in high-precision complex arithmetic,
// rounded to the nearest integer; independent of the integer recurrence.
BigInt frobenius_divisor_float(std::int64_t t, std::int64_t n, std::uint32_t h) {
    Float re = Float(t) / 2;
    Float im = sqrt(Float(4 * n - t * t)) / 2;
    Float pr(1), pi(0);
    for (std::uint32_t i = 0; i < 12 * h; ++i) {
        Float nr = pr * re - pi * im;
        Float ni = pr * im + pi * re;
        pr = nr;
        pi = ni;
    }
    Float n4h = pow(Float(n), 4 * h);
    Float value = (pr - n4h) * (pr - n4h) + pi * pi;
    return static_cast<BigInt>(boost::multiprecision::round(value));
}

}  // namespace

TEST_CASE("inertia-exponent table cells") {
    ApEntry c11 = ap_from_table(1, 1);
    REQUIRE(c11.valid);
    REQUIRE(c11.a == 12);
    REQUIRE(c11.congruence == ApCongruence::none);

    ApEntry c42 = ap_from_table(4, 2);
    REQUIRE(c42.valid);
    REQUIRE(c42.a == 6);
    REQUIRE(c42.congruence == ApCongruence::p3_mod4);

    REQUIRE_FALSE(ap_from_table(6, 1).valid);

    ApEntry c31 = ap_from_table(3, 1);
    REQUIRE(c31.valid);
    REQUIRE(c31.a == 4);
    REQUIRE(c31.congruence == ApCongruence::p2_mod3);

    REQUIRE_THROWS_AS(ap_from_table(5, 0), std::domain_error);
    REQUIRE_THROWS_AS(ap_from_table(3, 4), std::domain_error);
}

TEST_CASE("table shape: 21 cells, six invalid, congruences as printed") {
    auto cells = ap_table();
    REQUIRE(cells.size() == 21);
    std::size_t invalid = 0, with_congruence = 0;
    for (const ApEntry& c : cells) {
        if (!c.valid) {
            ++invalid;
            REQUIRE(c.e_ram % 2 == 0);
            REQUIRE(c.r % 2 == 1);
        } else {
            REQUIRE(c.a == 12 * c.r / c.e_ram);
            if (c.congruence != ApCongruence::none) ++with_congruence;
        }
    }
    REQUIRE(invalid == 6);
    REQUIRE(with_congruence == 5);  // (3,1), (3,2), (4,2), (6,2), (6,4)
}

TEST_CASE("solvability congruence examples") {
    REQUIRE(solve_star_congruence(1, 1, PrimeModulus(7)) == 1);
    REQUIRE_FALSE(solve_star_congruence(2, 1, PrimeModulus(13)).has_value());
    REQUIRE_FALSE(solve_star_congruence(3, 1, PrimeModulus(13)).has_value());
    REQUIRE(solve_star_congruence(6, 4, PrimeModulus(11)) == 4);  // 6*4 = 24 = 4 (mod 10)
    REQUIRE(solve_star_congruence(3, 0, PrimeModulus(13)) == 0);
}

TEST_CASE("table cells are valid exactly where the congruence is solvable, p <= 200") {
    for (const ApEntry& cell : ap_table()) {
        bool solvable_somewhere = false;
        for (std::uint32_t p : testutil::odd_primes_from_5(200)) {
            PrimeModulus mod(p);
            bool solvable = solve_star_congruence(cell.e_ram, cell.r, mod).has_value();
            if (!cell.valid) {
                REQUIRE_FALSE(solvable);
            } else {
                REQUIRE(solvable == in_congruence_class(p, cell.congruence));
                solvable_somewhere = solvable_somewhere || solvable;
            }
        }
        if (cell.valid) REQUIRE(solvable_somewhere);
    }
}

TEST_CASE("coefficient 6 forces the square exponent") {
    auto r7 = a6_scalar_exponent(PrimeModulus(7));
    REQUIRE(r7.exponent == 4);
    REQUIRE(r7.guarantee == ReducibleOutcome::squares());
    REQUIRE(power_image(7, 4) == square_set(7));
    REQUIRE(power_image(7, 4) == std::set<std::uint32_t>{1, 2, 4});

    auto r11 = a6_scalar_exponent(PrimeModulus(11));
    REQUIRE(r11.exponent == 6);
    REQUIRE(power_image(11, 6) == square_set(11));

    REQUIRE_THROWS_AS(a6_scalar_exponent(PrimeModulus(13)), std::domain_error);
}

TEST_CASE("square-exponent image equals the residues for every p = 3 (mod 4) up to 200") {
    for (std::uint32_t p : testutil::odd_primes_from_5(200)) {
        if (p % 4 != 3) continue;
        REQUIRE(power_image(p, a6_scalar_exponent(PrimeModulus(p)).exponent) == square_set(p));
    }
}

TEST_CASE("pair casework") {
    REQUIRE(combine_ap_pair(0, 4, PrimeModulus(5)) == ReducibleOutcome::homothety_exponent(4));
    REQUIRE(combine_ap_pair(8, 12, PrimeModulus(5)) == ReducibleOutcome::homothety_exponent(4));
    REQUIRE(combine_ap_pair(4, 8, PrimeModulus(11)) == ReducibleOutcome::homothety_exponent(4));
    REQUIRE(combine_ap_pair(0, 8, PrimeModulus(5)) == ReducibleOutcome::homothety_exponent(8));
    REQUIRE(combine_ap_pair(4, 12, PrimeModulus(11)) == ReducibleOutcome::homothety_exponent(8));
    REQUIRE(combine_ap_pair(0, 12, PrimeModulus(7)) == ReducibleOutcome::homothety_exponent(12));

    REQUIRE_THROWS_AS(combine_ap_pair(4, 4, PrimeModulus(5)), std::domain_error);
    REQUIRE_THROWS_AS(combine_ap_pair(0, 6, PrimeModulus(7)), std::domain_error);
    REQUIRE_THROWS_AS(combine_ap_pair(0, 4, PrimeModulus(7)), std::domain_error);  // 7 = 1 (mod 3)
}

TEST_CASE("pair witness diagonals generate the claimed scalar powers, p <= 200") {
    // Each witness is a diagonal (v^a, v^(12-a)) with v = x^m for the stated
    // multiplier m; the two witnesses multiply to the scalar x^12 or x^24.
    struct PairCase {
        std::uint32_t a1, a2;
        std::int32_t m1, m2;
        std::uint32_t exponent, scalar_power;
        bool needs_2mod3;
    };
    const PairCase cases[] = {
        {0, 4, -1, 3, 4, 12, true},  {4, 8, 1, 1, 4, 12, true},   {8, 12, 3, -1, 4, 12, true},
        {0, 8, 1, 3, 8, 24, true},   {4, 12, 3, 1, 8, 24, true},  {0, 12, 1, 1, 12, 12, false},
    };
    for (const PairCase& pc : cases) {
        for (std::uint32_t p : testutil::odd_primes_from_5(200)) {
            if (pc.needs_2mod3 && p % 3 != 2) continue;
            PrimeModulus mod(p);
            Scalar x = primitive_root(mod);
            auto witness = [&](std::uint32_t a, std::int32_t m) {
                Scalar v = m < 0 ? x.inverse().pow(static_cast<std::uint32_t>(-m))
                                 : x.pow(static_cast<std::uint32_t>(m));
                return Mat2::diagonal(mod, v.pow(a).value(), v.pow(12 - a).value());
            };
            Mat2 prod = witness(pc.a1, pc.m1) * witness(pc.a2, pc.m2);
            REQUIRE(prod.is_scalar());
            REQUIRE(prod.a() == x.pow(pc.scalar_power).value());

            std::set<std::uint32_t> generated;
            std::uint32_t cur = 1;
            do {
                cur = detail::mul_mod(cur, prod.a(), p);
                generated.insert(cur);
            } while (cur != 1);
            REQUIRE(generated == power_image(p, pc.exponent));
            REQUIRE(combine_ap_pair(pc.a1, pc.a2, mod) ==
                    ReducibleOutcome::homothety_exponent(pc.exponent));
        }
    }
}

TEST_CASE("torsion bound values") {
    REQUIRE(oesterle_torsion_bound(12) == 532900);
    REQUIRE(oesterle_torsion_bound(24) == BigInt("282430599364"));
    REQUIRE(oesterle_torsion_bound(2) == 16);
    REQUIRE_THROWS_AS(oesterle_torsion_bound(11), std::domain_error);
}

TEST_CASE("frobenius bound values") {
    REQUIRE(frobenius_norm_bound(1, 1) == 6400);
    REQUIRE(frobenius_norm_bound(2, 1) == 18939904);
    for (std::uint32_t x = 1; x <= 8; ++x)
        REQUIRE(oesterle_torsion_bound(12 * x) >= frobenius_norm_bound(x, 1));
}

TEST_CASE("frobenius norm divisor: worked values") {
    REQUIRE(frobenius_norm_divisor(FrobeniusData(0, 2, 1)) == 2304);
    REQUIRE(frobenius_norm_divisor(FrobeniusData(2, 2, 1)) == 6400);  // attains the bound
    REQUIRE(frobenius_norm_divisor(FrobeniusData(1, 2, 1)) == 5104);
    REQUIRE_THROWS_AS(FrobeniusData(5, 2, 1), std::domain_error);  // t^2 > 4n
    REQUIRE_THROWS_AS(frobenius_norm_divisor(FrobeniusData(0, 1, 1)), std::domain_error);
}

TEST_CASE("frobenius norm divisor: nonzero, inside the envelope, matches float route") {
    using boost::multiprecision::pow;
    for (std::int64_t n = 2; n <= 16; ++n) {
        std::int64_t tmax = static_cast<std::int64_t>(std::floor(2 * std::sqrt(double(n))));
        for (std::uint32_t h = 1; h <= 3; ++h) {
            BigInt envelope = pow(BigInt(n), 6 * h) + pow(BigInt(n), 4 * h);
            envelope *= envelope;
            for (std::int64_t t = -tmax; t <= tmax; ++t) {
                BigInt value = frobenius_norm_divisor(FrobeniusData(t, n, h));
                REQUIRE(value > 0);
                REQUIRE(value <= envelope);
                REQUIRE(value == frobenius_divisor_float(t, n, h));
            }
        }
    }
}

TEST_CASE("coefficient family casework") {
    FieldProfile q2(2, 1, 1, true);
    REQUIRE(classify_ap_family(ApFamily({6, 0}), PrimeModulus(7), q2) == ReducibleOutcome::squares());
    REQUIRE(classify_ap_family(ApFamily({0, 0}), PrimeModulus(11), FieldProfile(1, 1, 1, true)) ==
            ReducibleOutcome::prime_bounded(BigInt(532900)));
    REQUIRE(classify_ap_family(ApFamily({4, 8}), PrimeModulus(5), q2) ==
            ReducibleOutcome::homothety_exponent(4));
    REQUIRE(classify_ap_family(ApFamily({4, 4}), PrimeModulus(5), q2) ==
            ReducibleOutcome::prime_bounded(frobenius_norm_bound(2, 1)));
    REQUIRE(classify_ap_family(ApFamily({12, 12, 12}), PrimeModulus(11), q2) ==
            ReducibleOutcome::prime_bounded(oesterle_torsion_bound(24)));
    // mixed family picks the smallest guaranteed exponent
    REQUIRE(classify_ap_family(ApFamily({0, 8, 12}), PrimeModulus(5), q2) ==
            ReducibleOutcome::homothety_exponent(4));  // pair {8,12}

    REQUIRE_THROWS_AS(ApFamily({}), std::domain_error);
    REQUIRE_THROWS_AS(ApFamily({5}), std::domain_error);
    REQUIRE_THROWS_AS(classify_ap_family(ApFamily({6}), PrimeModulus(13), q2), std::domain_error);
    REQUIRE_THROWS_AS(classify_ap_family(ApFamily({4, 0}), PrimeModulus(7), q2), std::domain_error);
}

TEST_CASE("reducible-case bound and its dominance") {
    REQUIRE(uniform_bound_reducible(1, 1) == 532900);
    BigInt t36 = boost::multiprecision::pow(BigInt(3), 36) + 1;
    REQUIRE(uniform_bound_reducible(2, 3) == t36 * t36);
    for (std::uint32_t d = 1; d <= 5; ++d)
        for (std::uint32_t h = 1; h <= 5; ++h)
            REQUIRE(uniform_bound_reducible(d, h) == oesterle_torsion_bound(12 * d * h));
    REQUIRE(orbit_bound_threshold(2) == oesterle_torsion_bound(24));
}

TEST_CASE("orbit lower bound") {
    REQUIRE(orbit_lower_bound(PrimeModulus(13)) == 1);
    REQUIRE(orbit_lower_bound(PrimeModulus(97)) == 8);
    REQUIRE(orbit_lower_bound(PrimeModulus(149)) == 13);
}

TEST_CASE("local character data") {
    CharacterLocalData local = nonramified_character_orders();
    REQUIRE(local.good_reduction_inertia_divisors ==
            std::array<std::uint32_t, 5>{1, 2, 3, 4, 6});
    REQUIRE(local.lambda2_unramified_multiplicative);
    REQUIRE(local.lambda12_unramified_outside_p);
    REQUIRE(multiplicative_frobenius_values(3, PrimeModulus(7)) ==
            std::array<std::uint32_t, 2>{1, 2});
    REQUIRE_FALSE(inertia_order_allowed(5));
    REQUIRE(inertia_order_allowed(6));
    for (std::uint32_t k : {1u, 2u, 3u, 4u, 6u}) REQUIRE(inertia_order_allowed(k));
    REQUIRE_FALSE(inertia_order_allowed(12));
}
