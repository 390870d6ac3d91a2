#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ldpclab {

// Unsigned big integer, little-endian 64-bit limbs. Supports exactly what the
// exact counting code needs: add, multiply, compare, decimal output. No
// general division; exact ratios are kept reduced via prime factorizations.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) { // NOLINT(google-explicit-constructor)
        if (v != 0) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator*=(const BigUint& rhs);
    BigUint& operator*=(std::uint64_t rhs);

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }
    friend BigUint operator*(BigUint a, std::uint64_t b) { return a *= b; }

    // <0, 0, >0 like memcmp.
    int compare(const BigUint& rhs) const;
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }

    static BigUint pow(std::uint64_t base, std::uint64_t exp);

    std::string to_string() const;

private:
    void normalize();
    std::vector<std::uint64_t> limbs_;
};

// Product of prime powers with integer (possibly negative) exponents,
// indexed by prime. Factorials enter via Legendre's formula, so ratios of
// factorial products reduce without any big-integer division.
class FactoredRatio {
public:
    FactoredRatio() = default;

    void mul_prime_power(std::uint64_t p, long long e);
    void mul_integer(std::uint64_t v, long long multiplicity = 1);
    void mul_factorial(std::uint64_t n, long long multiplicity = 1);

    bool is_integer() const; // no negative exponents
    BigUint numerator() const;
    BigUint denominator() const;

private:
    // sorted by prime
    std::vector<std::pair<std::uint64_t, long long>> exps_;
};

} // namespace ldpclab
