#include <random>

#include "doctest.h"
#include "orbi/bigint.hpp"
#include "orbi/error.hpp"

using namespace orbi;

TEST_CASE("bigint matches 64-bit arithmetic on random values") {
    std::mt19937_64 rng(0);
    for (int t = 0; t < 2000; ++t) {
        long long a = (long long)(rng() % 2000001) - 1000000;
        long long b = (long long)(rng() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_i64() == a + b);
        CHECK((A - B).to_i64() == a - b);
        CHECK((A * B).to_i64() == a * b);
        if (b != 0) {
            CHECK((A / B).to_i64() == a / b);
            CHECK((A % B).to_i64() == a % b);
        }
        CHECK((A < B) == (a < b));
    }
}

TEST_CASE("bigint division invariant a = qb + r with |r| < |b|") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; ++t) {
        BigInt a = BigInt((long long)rng()) * BigInt((long long)(rng() % 1000000));
        BigInt b((long long)(rng() % 99991) + 1);
        if (t % 2) a = -a;
        if (t % 3 == 0) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint decimal round trip and known values") {
    CHECK(BigInt::factorial(20).to_string() == "2432902008176640000");
    CHECK(BigInt::factorial(25).to_string() == "15511210043330985984000000");
    CHECK(BigInt::binomial(52, 26).to_string() == "495918532948104");
    CHECK(BigInt("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK(BigInt("-987654321098765432109876543210") ==
          -BigInt("987654321098765432109876543210"));
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(7)) == BigInt(7));
    CHECK(BigInt::gcd(BigInt::factorial(30), BigInt::factorial(20)) ==
          BigInt::factorial(20));
}

TEST_CASE("rationals reduce and obey field laws") {
    Rational half(BigInt(1), BigInt(2));
    Rational third(BigInt(1), BigInt(3));
    CHECK((half + third) == Rational(BigInt(5), BigInt(6)));
    CHECK((half * third) == Rational(BigInt(1), BigInt(6)));
    CHECK((half - half).is_zero());
    CHECK((half / third) == Rational(BigInt(3), BigInt(2)));
    CHECK(Rational(BigInt(4), BigInt(-8)) == Rational(BigInt(-1), BigInt(2)));
    CHECK(Rational(BigInt(6), BigInt(3)).is_integer());
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), input_error);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        Rational a(BigInt((long long)(rng() % 201) - 100), BigInt((long long)(rng() % 50) + 1));
        Rational b(BigInt((long long)(rng() % 201) - 100), BigInt((long long)(rng() % 50) + 1));
        Rational c(BigInt((long long)(rng() % 201) - 100), BigInt((long long)(rng() % 50) + 1));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
    }
}
