#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "jimm/integer.hpp"

namespace jimm {

// Exact fraction of big integers, extended with the point at infinity.
// Invariants: den >= 0, gcd(|num|, den) = 1, (num, den) != (0, 0);
// infinity is canonically (1, 0).
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int num, Int den);
    explicit Rational(Int n) : num_(std::move(n)), den_(1) {}
    explicit Rational(long long n) : num_(n), den_(1) {}

    static Rational infinity() { return Rational(Int(1), Int(0)); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_infinity() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }
    bool is_integer() const { return den_ == 1; }

    int sign() const;  // -1, 0, +1; infinity reports +1

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational reciprocal() const;

    Int floor() const;  // finite values only
    Rational abs() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    // Finite-value order; comparing against infinity puts it above everything.
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const;  // "p/q", plain "p" for integers, "1/0" for infinity

  private:
    Int num_, den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace jimm
