#ifndef SUNINV_BIGINT_HPP
#define SUNINV_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace suninv {

/// Arbitrary-precision signed integer.
///
/// Magnitude is stored little-endian in 32-bit limbs; quotient/remainder
/// follow C++ semantics (truncation toward zero, remainder takes the sign
/// of the dividend). Division uses Knuth's Algorithm D. No hidden
/// allocations beyond the limb vector; values are immutable in spirit and
/// cheap to copy at the sizes this project produces.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);

    /// Parses an optionally signed decimal string. Throws parse_error on
    /// anything but [+-]?[0-9]+.
    static BigInt from_string(std::string_view text);

    static const BigInt& zero();
    static const BigInt& one();

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }
    BigInt& operator/=(const BigInt& rhs) { return *this = *this / rhs; }

    /// Single-pass quotient and remainder. Throws std::domain_error on
    /// division by zero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);

    /// a**e for e >= 0.
    static BigInt pow(const BigInt& base, unsigned long exponent);

    /// Nonnegative greatest common divisor; gcd(0, 0) = 0.
    static BigInt gcd(BigInt a, BigInt b);

    int compare(const BigInt& rhs) const;
    bool operator==(const BigInt& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const BigInt& rhs) const { return compare(rhs) != 0; }
    bool operator<(const BigInt& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const BigInt& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const BigInt& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const BigInt& rhs) const { return compare(rhs) >= 0; }

    /// True iff the value fits in int64_t.
    bool fits_int64() const;
    std::int64_t to_int64() const;

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    // sign_ in {-1, 0, +1}; mag_ empty iff sign_ == 0; no leading zero limbs.
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& quot,
                           std::vector<std::uint32_t>& rem);
};

} // namespace suninv

#endif // SUNINV_BIGINT_HPP
