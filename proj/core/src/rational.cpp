#include "jimm/rational.hpp"

#include <ostream>

#include "jimm/error.hpp"

namespace jimm {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void Rational::normalize() {
    if (num_ == 0 && den_ == 0) throw Error("Rational: 0/0 is not a value");
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

int Rational::sign() const {
    if (num_ > 0) return 1;
    if (num_ < 0) return -1;
    return 0;
}

Rational Rational::operator-() const {
    if (is_infinity()) return *this;
    return Rational(-num_, den_);
}

Rational Rational::operator+(const Rational& o) const {
    if (is_infinity() || o.is_infinity()) {
        if (is_infinity() && o.is_infinity()) return infinity();
        return infinity();
    }
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    if (is_infinity() || o.is_infinity()) {
        if (is_zero() || o.is_zero()) throw Error("Rational: 0 * infinity");
        return infinity();
    }
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const { return *this * o.reciprocal(); }

Rational Rational::reciprocal() const { return Rational(den_, num_); }

Int Rational::floor() const {
    if (is_infinity()) throw Error("Rational: floor of infinity");
    return floor_div(num_, den_);
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

bool Rational::operator<(const Rational& o) const {
    if (is_infinity()) return false;
    if (o.is_infinity()) return true;
    return num_ * o.den_ < o.num_ * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace jimm
