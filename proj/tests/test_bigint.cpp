#include <doctest.h>

#include "ldpclab/bigint.hpp"

using ldpclab::BigUint;
using ldpclab::FactoredRatio;

TEST_SUITE_BEGIN("bigint");

TEST_CASE("small arithmetic matches native") {
    BigUint a(123456789);
    BigUint b(987654321);
    CHECK((a + b).to_string() == "1111111110");
    CHECK((a * b).to_string() == "121932631112635269");
    CHECK(BigUint(0).to_string() == "0");
    CHECK((BigUint(0) * b).is_zero());
}

TEST_CASE("multiplication carries across limbs") {
    // 2^64 * 2^64 = 2^128
    BigUint a = BigUint::pow(2, 64);
    BigUint b = a * a;
    CHECK(b.to_string() == "340282366920938463463374607431768211456");
    CHECK(BigUint::pow(10, 30).to_string() == "1000000000000000000000000000000");
}

TEST_CASE("factored factorial ratios") {
    // 10! / (5! 5!) = 252
    FactoredRatio r;
    r.mul_factorial(10);
    r.mul_factorial(5, -2);
    CHECK(r.is_integer());
    CHECK(r.numerator().to_string() == "252");
    CHECK(r.denominator().to_string() == "1");

    // 5! / 7! = 1/42
    FactoredRatio q;
    q.mul_factorial(5);
    q.mul_factorial(7, -1);
    CHECK(!q.is_integer());
    CHECK(q.numerator().to_string() == "1");
    CHECK(q.denominator().to_string() == "42");
}

TEST_CASE("20! exactly") {
    FactoredRatio r;
    r.mul_factorial(20);
    CHECK(r.numerator().to_string() == "2432902008176640000");
}

TEST_CASE("comparisons") {
    CHECK(BigUint(5) < BigUint(7));
    CHECK(BigUint::pow(2, 100) < BigUint::pow(2, 101));
    CHECK(BigUint::pow(3, 40) == BigUint::pow(3, 40));
    CHECK(BigUint::pow(3, 40) != BigUint::pow(3, 41));
}

TEST_SUITE_END();
