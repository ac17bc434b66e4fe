#include "suninv/rational.hpp"

#include "suninv/errors.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace suninv {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt::one();
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt::one()) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational{BigInt::from_string(text)};
    if (slash == 0 || slash + 1 == text.size())
        throw parse_error("Rational: malformed fraction", slash);
    return Rational{BigInt::from_string(text.substr(0, slash)),
                    BigInt::from_string(text.substr(slash + 1))};
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational{num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational{num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_};
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational{num_ * rhs.num_, den_ * rhs.den_};
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational{num_ * rhs.den_, den_ * rhs.num_};
}

int Rational::compare(const Rational& rhs) const {
    return (num_ * rhs.den_).compare(rhs.num_ * den_);
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.to_string();
}

} // namespace suninv
