#ifndef SUNINV_RATIONAL_HPP
#define SUNINV_RATIONAL_HPP

#include "suninv/bigint.hpp"

#include <iosfwd>
#include <string>

namespace suninv {

/// Exact rational number, always stored fully reduced with a positive
/// denominator. Text form is "p/q", or just "p" when q == 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    static Rational from_string(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt::one(); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    int compare(const Rational& rhs) const;
    bool operator==(const Rational& rhs) const { return compare(rhs) == 0; }
    bool operator!=(const Rational& rhs) const { return compare(rhs) != 0; }
    bool operator<(const Rational& rhs) const { return compare(rhs) < 0; }
    bool operator<=(const Rational& rhs) const { return compare(rhs) <= 0; }
    bool operator>(const Rational& rhs) const { return compare(rhs) > 0; }
    bool operator>=(const Rational& rhs) const { return compare(rhs) >= 0; }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_;
    BigInt den_; // > 0
    void reduce();
};

} // namespace suninv

#endif // SUNINV_RATIONAL_HPP
