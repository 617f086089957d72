#include "jimm/mobius.hpp"

#include <ostream>

#include "jimm/error.hpp"

namespace jimm {

MobiusMap::MobiusMap(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Int dt = det();
    if (dt != 1 && dt != -1) throw Error("MobiusMap: determinant must be ±1, got " + dt.str());
    const Int* entries[4] = {&a_, &b_, &c_, &d_};
    for (const Int* e : entries) {
        if (*e == 0) continue;
        if (*e < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
            d_ = -d_;
        }
        break;
    }
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
    return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                     c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

MobiusMap MobiusMap::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    MobiusMap result = identity(), base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Rational MobiusMap::apply(const Rational& x) const {
    // projective action; infinity -> a/c
    return Rational(a_ * x.num() + b_ * x.den(), c_ * x.num() + d_ * x.den());
}

QuadState MobiusMap::apply(const QuadState& x) const {
    // (a y + b)/(c y + d) for y = (P + sqrt(D))/Q, rationalized by the
    // conjugate of the denominator.
    Int nP = (a_ * x.P + b_ * x.Q) * (c_ * x.P + d_ * x.Q) - a_ * c_ * x.D;
    Int e = det() * x.Q;  // coefficient of sqrt(D) in the numerator
    Int nQ = (c_ * x.P + d_ * x.Q) * (c_ * x.P + d_ * x.Q) - c_ * c_ * x.D;
    if (nQ == 0) throw Error("MobiusMap: image of surd hit the pole");
    if (e > 0) return {nP, e * e * x.D, nQ};
    return {-nP, e * e * x.D, -nQ};
}

QuadraticSurd MobiusMap::apply(const QuadraticSurd& x) const {
    QuadState st = apply(quadstate_of_surd(x));
    // D is q^2 d times det^2 Q^2 scale; its square part factors off without
    // general factoring.
    Int e = abs(det() * x.r()) * abs(x.q());
    Int d = x.d();
    // st.D == e^2 * d by construction
    return QuadraticSurd(st.P, e, d, st.Q);
}

std::string MobiusMap::str() const {
    return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

std::ostream& operator<<(std::ostream& os, const MobiusMap& m) { return os << m.str(); }

}  // namespace jimm
