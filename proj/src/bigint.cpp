#include "suninv/bigint.hpp"

#include "suninv/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace suninv {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
} // namespace

BigInt::BigInt(std::int64_t value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // Avoid overflow on INT64_MIN by negating in unsigned space.
    std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1
                                  : static_cast<std::uint64_t>(value);
    mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

const BigInt& BigInt::zero() {
    static const BigInt z;
    return z;
}

const BigInt& BigInt::one() {
    static const BigInt o{1};
    return o;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
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
    std::vector<std::uint32_t> out(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t sum = carry + big[i] + (i < small.size() ? small[i] : 0);
        out[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    out[big.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(diff);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth TAOCP vol. 2, Algorithm D, base 2^32.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (compare_mag(a, b) < 0) {
        rem = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t divisor = b[0];
        quot.assign(a.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | a[i];
            quot[i] = static_cast<std::uint32_t>(cur / divisor);
            r = cur % divisor;
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        return;
    }

    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;

    // D1: normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;

    std::vector<std::uint32_t> u(a.size() + 1, 0);
    std::vector<std::uint32_t> v(n, 0);
    if (shift == 0) {
        std::copy(a.begin(), a.end(), u.begin());
        v = b;
    } else {
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint32_t high = i + 1 < a.size() ? a[i + 1] : 0;
            u[i + 1] = (high << shift) | (a[i] >> (32 - shift));
        }
        u[0] = a[0] << shift;
        u[a.size()] = a.back() >> (32 - shift);
        for (std::size_t i = n; i-- > 0;) {
            std::uint32_t low = i > 0 ? b[i - 1] : 0;
            v[i] = (b[i] << shift) | (i > 0 ? (low >> (32 - shift)) : 0);
        }
    }

    quot.assign(m + 1, 0);
    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vsecond = v[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        // D3: estimate q_hat from the top two limbs, clamped below the base.
        std::uint64_t q_hat, r_hat;
        if (u[j + n] == vtop) {
            q_hat = kBase - 1;
            r_hat = static_cast<std::uint64_t>(u[j + n - 1]) + vtop;
        } else {
            std::uint64_t numerator =
                (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            q_hat = numerator / vtop;
            r_hat = numerator % vtop;
        }
        while (r_hat < kBase &&
               q_hat * vsecond > ((r_hat << 32) | u[j + n - 2])) {
            --q_hat;
            r_hat += vtop;
        }

        // D4: multiply-subtract q_hat * v from u[j .. j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t product = q_hat * v[i] + carry;
            carry = product >> 32;
            std::int64_t diff = static_cast<std::int64_t>(u[i + j]) - borrow -
                                static_cast<std::int64_t>(product & 0xffffffffu);
            if (diff < 0) {
                diff += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t top_diff = static_cast<std::int64_t>(u[j + n]) - borrow -
                                static_cast<std::int64_t>(carry);
        if (top_diff < 0) {
            // D6: estimate was one too large; add v back once.
            top_diff += static_cast<std::int64_t>(kBase);
            --q_hat;
            std::uint64_t add_carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = add_carry + u[i + j] + v[i];
                u[i + j] = static_cast<std::uint32_t>(sum & 0xffffffffu);
                add_carry = sum >> 32;
            }
            top_diff += static_cast<std::int64_t>(add_carry);
            top_diff &= 0xffffffff;
        }
        u[j + n] = static_cast<std::uint32_t>(top_diff);
        quot[j] = static_cast<std::uint32_t>(q_hat);
    }

    while (!quot.empty() && quot.back() == 0) quot.pop_back();

    // D8: denormalize the remainder.
    rem.assign(n, 0);
    if (shift == 0) {
        std::copy(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n), rem.begin());
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t high = i + 1 < n ? u[i + 1] : u[n];
            rem[i] = (u[i] >> shift) | (high << (32 - shift));
        }
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (sign_ == 0) return rhs;
    if (rhs.sign_ == 0) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.sign_ = sign_;
        out.mag_ = add_mag(mag_, rhs.mag_);
    } else {
        int cmp = compare_mag(mag_, rhs.mag_);
        if (cmp == 0) return BigInt{};
        if (cmp > 0) {
            out.sign_ = sign_;
            out.mag_ = sub_mag(mag_, rhs.mag_);
        } else {
            out.sign_ = rhs.sign_;
            out.mag_ = sub_mag(rhs.mag_, mag_);
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (sign_ == 0 || rhs.sign_ == 0) return BigInt{};
    BigInt out;
    out.sign_ = sign_ * rhs.sign_;
    out.mag_ = mul_mag(mag_, rhs.mag_);
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
        quot = BigInt{};
        rem = BigInt{};
        return;
    }
    std::vector<std::uint32_t> q, r;
    divmod_mag(a.mag_, b.mag_, q, r);
    quot = BigInt{};
    rem = BigInt{};
    quot.mag_ = std::move(q);
    rem.mag_ = std::move(r);
    quot.sign_ = quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
    rem.sign_ = rem.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long exponent) {
    BigInt result{1};
    BigInt acc = base;
    for (unsigned long e = exponent; e != 0; e >>= 1) {
        if (e & 1) result *= acc;
        if (e > 1) acc *= acc;
    }
    return result;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int BigInt::compare(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    int mag_cmp = compare_mag(mag_, rhs.mag_);
    return sign_ > 0 ? mag_cmp : -mag_cmp;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t mag = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    return sign_ > 0 ? mag <= static_cast<std::uint64_t>(INT64_MAX)
                     : mag <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
    std::uint64_t mag = 0;
    if (mag_.size() > 1) mag = static_cast<std::uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) mag |= mag_[0];
    return sign_ < 0 ? -static_cast<std::int64_t>(mag - 1) - 1
                     : static_cast<std::int64_t>(mag);
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    if (pos == text.size()) throw parse_error("BigInt: empty numeral", pos);
    BigInt out;
    const BigInt ten{10};
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw parse_error("BigInt: invalid digit", pos);
        out = out * ten + BigInt{c - '0'};
    }
    if (sign < 0) out.sign_ = -out.sign_;
    return out;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    // Peel off 9 decimal digits at a time.
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    const std::uint64_t chunk = 1000000000u;
    while (!m.empty()) {
        std::uint64_t r = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / chunk);
            r = cur % chunk;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + r % 10));
            r /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
}

} // namespace suninv
