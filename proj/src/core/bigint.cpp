#include "bigint.hpp"

#include <stdexcept>

namespace dessin {

BigInt::BigInt(std::uint64_t v) {
    limbs_.clear();
    if (v == 0) limbs_.push_back(0);
    while (v > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
        v /= kBase;
    }
}

void BigInt::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigInt BigInt::from_decimal(const std::string& s) {
    BigInt r(0);
    for (char c : s) {
        if (c == '\'' || c == '_' || c == ' ') continue;
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        r.mul_small(10);
        r = r + BigInt(static_cast<std::uint64_t>(c - '0'));
    }
    return r;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r.mul_small(i);
    return r;
}

BigInt& BigInt::mul_small(std::uint64_t v) {
    if (v == 0) { limbs_.assign(1, 0); return *this; }
    // keep the per-limb product within 128 bits even for large v
    if (v >= kBase) {
        BigInt other(v);
        *this = *this * other;
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(l) * v + carry;
        l = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

BigInt BigInt::operator*(const BigInt& o) const {
    std::vector<std::uint64_t> acc(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = acc[i + j] +
                static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        std::size_t j = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = acc[j] + carry;
            acc[j] = cur % kBase;
            carry = cur / kBase;
            ++j;
        }
    }
    BigInt r;
    r.limbs_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    r.limbs_.clear();
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size() || i < o.limbs_.size() || carry; ++i) {
        std::uint64_t cur = carry;
        if (i < limbs_.size()) cur += limbs_[i];
        if (i < o.limbs_.size()) cur += o.limbs_[i];
        r.limbs_.push_back(static_cast<std::uint32_t>(cur % kBase));
        carry = cur / kBase;
    }
    if (r.limbs_.empty()) r.limbs_.push_back(0);
    return r;
}

BigInt BigInt::minus_one() const {
    if (is_zero()) throw std::invalid_argument("minus_one on zero");
    BigInt r(*this);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        if (r.limbs_[i] > 0) {
            r.limbs_[i]--;
            break;
        }
        r.limbs_[i] = kBase - 1;
    }
    r.trim();
    return r;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt r(1), b(*this);
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

BigInt BigInt::div_small(std::uint32_t d, std::uint32_t* rem) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    BigInt r;
    r.limbs_.assign(limbs_.size(), 0);
    std::uint64_t cur = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        cur = cur * kBase + limbs_[i];
        r.limbs_[i] = static_cast<std::uint32_t>(cur / d);
        cur %= d;
    }
    r.trim();
    if (rem) *rem = static_cast<std::uint32_t>(cur);
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
    return false;
}

bool BigInt::fits_u64() const {
    if (limbs_.size() > 3) return false;
    return *this <= BigInt(UINT64_MAX);
}

std::uint64_t BigInt::to_u64() const {
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * kBase + limbs_[i];
    return v;
}

std::string BigInt::str() const {
    std::string s = std::to_string(limbs_.back());
    char buf[16];
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
        s += buf;
    }
    return s;
}

}  // namespace dessin
