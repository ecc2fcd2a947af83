#include "orbi/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "orbi/error.hpp"

namespace orbi {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    while (m) {
        mag_.push_back((uint32_t)(m & 0xffffffffULL));
        m >>= 32;
    }
}

BigInt::BigInt(const std::string& decimal) {
    size_t i = 0;
    int s = 1;
    if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
        if (decimal[i] == '-') s = -1;
        ++i;
    }
    if (i == decimal.size()) throw input_error("empty integer literal");
    BigInt acc;
    const BigInt ten(10);
    for (; i < decimal.size(); ++i) {
        if (!std::isdigit((unsigned char)decimal[i]))
            throw input_error("bad integer literal: " + decimal);
        acc *= ten;
        acc += BigInt(decimal[i] - '0');
    }
    *this = acc;
    if (s < 0) sign_ = -sign_;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> out(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        out[i] = (uint32_t)s;
        carry = s >> 32;
    }
    out[big.size()] = (uint32_t)carry;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
        if (d < 0) {
            d += (int64_t)1 << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = (uint32_t)d;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    std::vector<uint32_t> out(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = out[i + j] + (uint64_t)mag_[i] * o.mag_[j] + carry;
            out[i + j] = (uint32_t)cur;
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = (uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    mag_ = std::move(out);
    sign_ *= o.sign_;
    trim();
    return *this;
}

// Shift-and-subtract long division on magnitudes; quadratic in bit length,
// fine at the sizes this project produces.
void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
    if (den.sign_ == 0) throw input_error("division by zero");
    if (cmp_mag(num.mag_, den.mag_) < 0) {
        q = BigInt(0);
        r = num;
        return;
    }
    size_t nbits = num.mag_.size() * 32;
    std::vector<uint32_t> rem;
    std::vector<uint32_t> quo(num.mag_.size(), 0);
    for (size_t i = nbits; i-- > 0;) {
        // rem = rem*2 + bit i of |num|
        uint32_t carry = (num.mag_[i / 32] >> (i % 32)) & 1u;
        for (size_t j = 0; j < rem.size(); ++j) {
            uint32_t hi = rem[j] >> 31;
            rem[j] = (rem[j] << 1) | carry;
            carry = hi;
        }
        if (carry) rem.push_back(carry);
        if (cmp_mag(rem, den.mag_) >= 0) {
            rem = sub_mag(rem, den.mag_);
            quo[i / 32] |= 1u << (i % 32);
        }
    }
    q.mag_ = std::move(quo);
    q.sign_ = 1;
    q.trim();
    if (!q.mag_.empty()) q.sign_ = num.sign_ * den.sign_;
    r.mag_ = std::move(rem);
    r.sign_ = r.mag_.empty() ? 0 : num.sign_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt out(1);
    for (long long i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        BigInt q, r;
        divmod(out, BigInt(i), q, r);
        out = q;
    }
    return out;
}

BigInt BigInt::factorial(long long n) {
    BigInt out(1);
    for (long long i = 2; i <= n; ++i) out *= BigInt(i);
    return out;
}

BigInt BigInt::pow(unsigned long long e) const {
    BigInt base = *this, out(1);
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

bool BigInt::fits_i64() const {
    if (mag_.size() > 2) return false;
    unsigned long long v = 0;
    for (size_t i = 0; i < mag_.size(); ++i) v |= (unsigned long long)mag_[i] << (32 * i);
    if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
    return v <= 0x8000000000000000ULL;
}

long long BigInt::to_i64() const {
    if (!fits_i64()) throw input_error("integer too large for 64 bits: " + to_string());
    unsigned long long v = 0;
    for (size_t i = 0; i < mag_.size(); ++i) v |= (unsigned long long)mag_[i] << (32 * i);
    return sign_ >= 0 ? (long long)v : -(long long)(v - 1) - 1;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt n = abs();
    const BigInt billion(1000000000);
    std::string out;
    while (!n.is_zero()) {
        BigInt q, r;
        divmod(n, billion, q, r);
        unsigned long long chunk = 0;
        for (size_t i = 0; i < r.mag_.size(); ++i)
            chunk |= (unsigned long long)r.mag_[i] << (32 * i);
        std::string part = std::to_string(chunk);
        if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
        out = part + out;
        n = std::move(q);
    }
    return sign_ < 0 ? "-" + out : out;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw input_error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw input_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace orbi
