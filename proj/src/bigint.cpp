#include "ldpclab/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldpclab {

void BigUint::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(std::uint64_t rhs) {
    if (rhs == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 p = static_cast<unsigned __int128>(limb) * rhs + carry;
        limb = static_cast<std::uint64_t>(p);
        carry = p >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    if (is_zero() || rhs.is_zero()) {
        limbs_.clear();
        return *this;
    }
    std::vector<std::uint64_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            unsigned __int128 p = static_cast<unsigned __int128>(limbs_[i]) * rhs.limbs_[j] +
                                  out[i + j] + carry;
            out[i + j] = static_cast<std::uint64_t>(p);
            carry = p >> 64;
        }
        std::size_t pos = i + rhs.limbs_.size();
        while (carry != 0) {
            unsigned __int128 s = carry + out[pos];
            out[pos] = static_cast<std::uint64_t>(s);
            carry = s >> 64;
            ++pos;
        }
    }
    limbs_ = std::move(out);
    normalize();
    return *this;
}

int BigUint::compare(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exp) {
    BigUint result(1);
    BigUint b(base);
    while (exp != 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint64_t> work(limbs_);
    std::string digits;
    while (!work.empty()) {
        // long division by 10^18, emitting 18 decimal digits per round
        constexpr std::uint64_t kChunk = 1000000000000000000ULL;
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::uint64_t r = static_cast<std::uint64_t>(rem);
        for (int d = 0; d < 18; ++d) {
            digits.push_back(static_cast<char>('0' + r % 10));
            r /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

void FactoredRatio::mul_prime_power(std::uint64_t p, long long e) {
    if (e == 0) return;
    auto it = std::lower_bound(exps_.begin(), exps_.end(), p,
                               [](const auto& kv, std::uint64_t key) { return kv.first < key; });
    if (it != exps_.end() && it->first == p) {
        it->second += e;
        if (it->second == 0) exps_.erase(it);
    } else {
        exps_.insert(it, {p, e});
    }
}

void FactoredRatio::mul_integer(std::uint64_t v, long long multiplicity) {
    if (v == 0) throw std::invalid_argument("FactoredRatio: zero factor");
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        long long e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) mul_prime_power(p, e * multiplicity);
    }
    if (v > 1) mul_prime_power(v, multiplicity);
}

void FactoredRatio::mul_factorial(std::uint64_t n, long long multiplicity) {
    if (n < 2 || multiplicity == 0) return;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
        // Legendre: v_p(n!) = sum_{j>=1} floor(n / p^j)
        long long e = 0;
        for (std::uint64_t pk = p; pk <= n; pk *= p) {
            e += static_cast<long long>(n / pk);
            if (pk > n / p) break;
        }
        mul_prime_power(p, e * multiplicity);
    }
}

bool FactoredRatio::is_integer() const {
    for (const auto& [p, e] : exps_) {
        (void)p;
        if (e < 0) return false;
    }
    return true;
}

static BigUint side_product(const std::vector<std::pair<std::uint64_t, long long>>& exps,
                            bool positive) {
    BigUint out(1);
    for (const auto& [p, e] : exps) {
        long long use = positive ? e : -e;
        for (long long i = 0; i < use; ++i) out *= p;
    }
    return out;
}

BigUint FactoredRatio::numerator() const { return side_product(exps_, true); }
BigUint FactoredRatio::denominator() const { return side_product(exps_, false); }

} // namespace ldpclab
