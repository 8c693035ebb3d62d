#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gl2fp/fp.hpp"
#include "test_util.hpp"

using namespace gl2fp;

TEST_CASE("prime modulus validation") {
    REQUIRE(PrimeModulus(5).value() == 5);
    REQUIRE(PrimeModulus(2147483647).value() == 2147483647u);  // 2^31 - 1 is prime
    REQUIRE_THROWS_AS(PrimeModulus(4), std::domain_error);
    REQUIRE_THROWS_AS(PrimeModulus(3), std::domain_error);  // below the supported range
    REQUIRE_THROWS_AS(PrimeModulus(9), std::domain_error);
    REQUIRE_THROWS_AS(PrimeModulus(1ull << 31), std::domain_error);
}

TEST_CASE("scalar arithmetic reduces eagerly") {
    PrimeModulus p13(13);
    REQUIRE(Scalar(27, p13).value() == 1);
    REQUIRE(Scalar::from_int(-1, p13).value() == 12);
    REQUIRE((Scalar(7, p13) * Scalar(2, p13)).value() == 1);
    REQUIRE((Scalar(5, p13) + Scalar(9, p13)).value() == 1);
    REQUIRE((-Scalar(1, p13)).value() == 12);
    REQUIRE((Scalar(2, p13).inverse() * Scalar(2, p13)).value() == 1);
    REQUIRE_THROWS_AS(Scalar(0, p13).inverse(), std::domain_error);
}

TEST_CASE("mult_order examples") {
    PrimeModulus p13(13);
    REQUIRE(mult_order(Scalar(1, p13)) == 1);
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 29u})
        REQUIRE(mult_order(Scalar(p - 1, PrimeModulus(p))) == 2);
    REQUIRE(mult_order(Scalar(2, p13)) == 12);
    REQUIRE_THROWS_AS(mult_order(Scalar(0, p13)), std::domain_error);
}

TEST_CASE("mult_order divides p-1 for all residues, p <= 50") {
    for (std::uint32_t p : testutil::odd_primes_from_5(50)) {
        PrimeModulus mod(p);
        for (std::uint32_t x = 1; x < p; ++x) REQUIRE((p - 1) % mult_order(Scalar(x, mod)) == 0);
    }
}

TEST_CASE("quadratic residue examples") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u})
        REQUIRE(is_quadratic_residue(Scalar(4, PrimeModulus(p))));
    REQUIRE(is_quadratic_residue(Scalar(2, PrimeModulus(7))));  // 3^2 = 2 mod 7
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u}) {
        PrimeModulus mod(p);
        REQUIRE_FALSE(is_quadratic_residue(primitive_root(mod)));
    }
    REQUIRE_THROWS_AS(is_quadratic_residue(Scalar(0, PrimeModulus(5))), std::domain_error);
}

TEST_CASE("quadratic residues agree with exhaustive squares, p <= 50") {
    for (std::uint32_t p : testutil::odd_primes_from_5(50)) {
        PrimeModulus mod(p);
        std::set<std::uint32_t> squares;
        for (std::uint32_t y = 1; y < p; ++y) squares.insert(static_cast<std::uint32_t>(std::uint64_t(y) * y % p));
        for (std::uint32_t x = 1; x < p; ++x)
            REQUIRE(is_quadratic_residue(Scalar(x, mod)) == (squares.count(x) != 0));
    }
}

TEST_CASE("primitive root is the smallest generator") {
    REQUIRE(primitive_root(PrimeModulus(5)).value() == 2);
    REQUIRE(primitive_root(PrimeModulus(7)).value() == 3);
    REQUIRE(primitive_root(PrimeModulus(13)).value() == 2);
    for (std::uint32_t p : testutil::odd_primes_from_5(50)) {
        PrimeModulus mod(p);
        Scalar g = primitive_root(mod);
        REQUIRE(mult_order(g) == p - 1);
        for (std::uint32_t smaller = 2; smaller < g.value(); ++smaller)
            REQUIRE(mult_order(Scalar(smaller, mod)) != p - 1);
    }
}

TEST_CASE("minus_gamma_order examples") {
    REQUIRE(minus_gamma_order(5, PrimeModulus(11)) == 10);
    REQUIRE(minus_gamma_order(6, PrimeModulus(13)) == 3);
    REQUIRE(minus_gamma_order(8, PrimeModulus(17)) == 8);
    REQUIRE_THROWS_AS(minus_gamma_order(5, PrimeModulus(13)), std::domain_error);
}

TEST_CASE("minus_gamma_order matches a direct order computation, p <= 50") {
    for (std::uint32_t p : testutil::odd_primes_from_5(50)) {
        PrimeModulus mod(p);
        Scalar g = primitive_root(mod);
        for (std::uint32_t delta = 1; delta <= p - 1; ++delta) {
            if ((p - 1) % delta != 0) continue;
            Scalar gamma = g.pow((p - 1) / delta);
            REQUIRE(minus_gamma_order(delta, mod) == mult_order(-gamma));
        }
    }
}

TEST_CASE("sqrt_mod inverts squaring") {
    for (std::uint32_t p : testutil::odd_primes_from_5(60)) {
        PrimeModulus mod(p);
        for (std::uint32_t x = 1; x < p; ++x) {
            Scalar s(x, mod);
            auto root = sqrt_mod(s);
            if (is_quadratic_residue(s)) {
                REQUIRE(root.has_value());
                REQUIRE((*root) * (*root) == s);
            } else {
                REQUIRE_FALSE(root.has_value());
            }
        }
    }
}
