#include "unicusp/bigint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace unicusp {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (m != 0) {
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffull));
        m >>= 32;
    }
}

void BigInt::trim() {
    trim_mag(mag_);
    if (mag_.empty()) sign_ = 0;
}

void BigInt::trim_mag(std::vector<std::uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

bool BigInt::is_one() const {
    return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t m = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return m <= 0x7fffffffffffffffull;
    return m <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt::to_int64: out of range");
    std::uint64_t m = 0;
    if (mag_.size() > 1) m = static_cast<std::uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) m |= mag_[0];
    if (sign_ < 0) return static_cast<long long>(~m + 1);
    return static_cast<long long>(m);
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

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s & 0xffffffffull);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    trim_mag(r);
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    trim_mag(r);
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    trim_mag(r);
    return r;
}

std::vector<std::uint32_t> BigInt::shl_mag(const std::vector<std::uint32_t>& a, unsigned bits) {
    if (a.empty()) return {};
    unsigned words = bits / 32, rem = bits % 32;
    std::vector<std::uint32_t> r(a.size() + words + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a[i]) << rem;
        r[i + words] |= static_cast<std::uint32_t>(v & 0xffffffffull);
        r[i + words + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    trim_mag(r);
    return r;
}

std::vector<std::uint32_t> BigInt::shr_mag(const std::vector<std::uint32_t>& a, unsigned bits) {
    unsigned words = bits / 32, rem = bits % 32;
    if (words >= a.size()) return {};
    std::vector<std::uint32_t> r(a.size() - words, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t v = a[i + words] >> rem;
        if (rem != 0 && i + words + 1 < a.size())
            v |= static_cast<std::uint64_t>(a[i + words + 1]) << (32 - rem);
        r[i] = static_cast<std::uint32_t>(v & 0xffffffffull);
    }
    trim_mag(r);
    return r;
}

// Knuth algorithm D on normalized magnitudes.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0];
        q.assign(a.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim_mag(q);
        if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    unsigned shift = std::countl_zero(b.back());
    std::vector<std::uint32_t> u = shl_mag(a, shift);
    std::vector<std::uint32_t> v = shl_mag(b, shift);
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;  // u.size() >= n since a >= b
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);

    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vsecond = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / vtop;
        std::uint64_t rhat = num % vtop;
        if (qhat > 0xffffffffull) {
            qhat = 0xffffffffull;
            rhat = num - qhat * vtop;
        }
        while (rhat <= 0xffffffffull &&
               qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t d = static_cast<std::int64_t>(u[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffull);
            if (d < 0) {
                d += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(d);
        }
        std::int64_t d = static_cast<std::int64_t>(u[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        bool negative = d < 0;
        u[j + n] = static_cast<std::uint32_t>(d & 0xffffffff);
        if (negative) {
            // add back
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffull);
                c = s >> 32;
            }
            u[j + n] = static_cast<std::uint32_t>(u[j + n] + c);
        }
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    trim_mag(q);
    u.resize(n);
    r = shr_mag(u, shift);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
        q.sign_ = a.sign_ * b.sign_;
        q.mag_ = std::move(qm);
    }
    if (!rm.empty()) {
        r.sign_ = a.sign_;
        r.mag_ = std::move(rm);
    }
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    // binary gcd on magnitudes
    std::vector<std::uint32_t> u = a.mag_, v = b.mag_;
    if (u.empty()) return b.abs();
    if (v.empty()) return a.abs();
    auto ctz = [](const std::vector<std::uint32_t>& m) {
        unsigned n = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                n += 32;
            } else {
                n += static_cast<unsigned>(std::countr_zero(m[i]));
                break;
            }
        }
        return n;
    };
    unsigned su = ctz(u), sv = ctz(v);
    unsigned shared = std::min(su, sv);
    u = BigInt::shr_mag(u, su);
    v = BigInt::shr_mag(v, sv);
    while (true) {
        int c = BigInt::cmp_mag(u, v);
        if (c == 0) break;
        if (c < 0) std::swap(u, v);
        u = BigInt::sub_mag(u, v);
        u = BigInt::shr_mag(u, ctz(u));
    }
    BigInt r;
    r.mag_ = BigInt::shl_mag(u, shared);
    r.sign_ = 1;
    r.trim();
    return r;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    const BigInt chunk_base(1000000000ll);
    std::uint64_t acc = 0;
    int acc_digits = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * 10 + static_cast<std::uint64_t>(c - '0');
        if (++acc_digits == 9) {
            r = r * chunk_base + BigInt(static_cast<long long>(acc));
            acc = 0;
            acc_digits = 0;
        }
    }
    if (acc_digits > 0) {
        long long p = 1;
        for (int k = 0; k < acc_digits; ++k) p *= 10;
        r = r * BigInt(p) + BigInt(static_cast<long long>(acc));
    }
    if (neg) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string out;
    while (!m.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        trim_mag(m);
        char buf[10];
        if (m.empty()) {
            std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
        } else {
            std::snprintf(buf, sizeof buf, "%09llu", static_cast<unsigned long long>(rem));
        }
        out.insert(0, buf);
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

}  // namespace unicusp
