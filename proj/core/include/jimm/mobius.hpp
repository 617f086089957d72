#pragma once

#include <iosfwd>
#include <string>

#include "jimm/rational.hpp"
#include "jimm/surd.hpp"

namespace jimm {

// Element of PGL(2,Z): integer matrix [[a,b],[c,d]] with det ±1, up to sign.
// Normalization: the first nonzero entry of (a,b,c,d) is positive.
class MobiusMap {
  public:
    MobiusMap(Int a, Int b, Int c, Int d);

    static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }
    // x -> -x, x -> 1/x, x -> 1-x, x -> -1/x, x -> 1+x
    static MobiusMap V() { return MobiusMap(-1, 0, 0, 1); }
    static MobiusMap U() { return MobiusMap(0, 1, 1, 0); }
    static MobiusMap K() { return MobiusMap(-1, 1, 0, 1); }
    static MobiusMap S() { return MobiusMap(0, -1, 1, 0); }
    static MobiusMap T() { return MobiusMap(1, 1, 0, 1); }
    // x -> (x-1)/x, the order-3 generator of PSL(2,Z)
    static MobiusMap L() { return MobiusMap(1, -1, 1, 0); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }
    Int trace_abs() const { return abs(a_ + d_); }

    MobiusMap operator*(const MobiusMap& o) const;
    MobiusMap inverse() const;  // adjugate; exact in PGL(2,Z)
    MobiusMap pow(long long n) const;

    bool operator==(const MobiusMap& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const MobiusMap& o) const { return !(*this == o); }

    Rational apply(const Rational& x) const;
    QuadraticSurd apply(const QuadraticSurd& x) const;
    QuadState apply(const QuadState& x) const;

    std::string str() const;

  private:
    Int a_, b_, c_, d_;
};

// Free functions matching the operation table.
inline Rational mobius_apply(const MobiusMap& m, const Rational& x) { return m.apply(x); }
inline QuadraticSurd mobius_apply(const MobiusMap& m, const QuadraticSurd& x) { return m.apply(x); }

std::ostream& operator<<(std::ostream& os, const MobiusMap& m);

}  // namespace jimm
