#include "jimm/surd.hpp"

#include <cassert>
#include <ostream>

#include "jimm/error.hpp"

namespace jimm {

QuadraticSurd::QuadraticSurd(Int p, Int q, Int d, Int r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    if (r_ == 0) throw Error("QuadraticSurd: zero denominator");
    if (q_ == 0 || d_ <= 0) throw Error("QuadraticSurd: value is rational");
    auto [s, df] = squarefree_decompose(d_);
    q_ *= s;
    d_ = df;
    if (d_ == 1) throw Error("QuadraticSurd: value is rational (d is a perfect square)");
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Int g = gcd(gcd(abs(p_), abs(q_)), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

QuadraticSurd QuadraticSurd::galois_conjugate() const { return QuadraticSurd(p_, -q_, d_, r_); }

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-p_, -q_, d_, r_); }

int QuadraticSurd::sign() const {
    // sign of p + q*sqrt(d); r > 0
    if (p_ >= 0 && q_ > 0) return 1;
    if (p_ <= 0 && q_ < 0) return -1;
    // p and q have opposite signs: compare p^2 with q^2 d
    Int lhs = p_ * p_, rhs = q_ * q_ * d_;
    if (p_ > 0) return lhs > rhs ? 1 : -1;  // q < 0
    return lhs > rhs ? -1 : 1;              // p < 0, q > 0
    // equality is impossible: sqrt(d) is irrational
}

Int QuadraticSurd::floor() const {
    // floor((p + q*sqrt(d))/r): replace q*sqrt(d) by its integer floor.
    Int f;
    if (q_ > 0) {
        f = isqrt(q_ * q_ * d_);
    } else {
        f = -isqrt(q_ * q_ * d_) - 1;  // strict since q*sqrt(d) is irrational
    }
    return floor_div(p_ + f, r_);
}

QuadraticSurd QuadraticSurd::reciprocal() const {
    // r / (p + q*sqrt(d)) = r(p - q*sqrt(d)) / (p^2 - q^2 d)
    Int den = p_ * p_ - q_ * q_ * d_;
    return QuadraticSurd(r_ * p_, -r_ * q_, d_, den);
}

bool QuadraticSurd::operator<(const QuadraticSurd& o) const {
    if (*this == o) return false;
    if (d_ == o.d_) {
        // (p1 + q1 s)/r1 < (p2 + q2 s)/r2  <=>  (p1 r2 - p2 r1) < (q2 r1 - q1 r2) s
        Int a = p_ * o.r_ - o.p_ * r_;
        Int b = o.q_ * r_ - q_ * o.r_;
        if (b == 0) return a < 0;
        if (b > 0) {
            if (a < 0) return true;
            return a * a < b * b * d_;
        }
        if (a >= 0) return false;
        return a * a > b * b * d_;
    }
    // Different fields: refine integer brackets of both until disjoint.
    // Values are unequal, so this terminates.
    for (int k = 8;; k *= 2) {
        Int lo1, hi1, lo2, hi2;
        auto bracket = [&](const QuadraticSurd& s, Int& lo, Int& hi) {
            // floor/ceil of s * 2^k
            Int t = Int(1) << k;
            Int qq = s.q_ * t;
            Int f = qq > 0 ? isqrt(qq * qq * s.d_) : -isqrt(qq * qq * s.d_) - 1;
            lo = floor_div(s.p_ * t + f, s.r_);
            hi = floor_div(s.p_ * t + f + 1, s.r_) + 1;
        };
        bracket(*this, lo1, hi1);
        bracket(o, lo2, hi2);
        if (hi1 < lo2) return true;
        if (hi2 < lo1) return false;
        if (k > 1 << 20) throw Error("QuadraticSurd: comparison failed to separate");
    }
}

bool QuadraticSurd::operator<(const Rational& x) const {
    if (x.is_infinity()) return true;
    // (p + q sqrt(d))/r < n/m  <=>  q sqrt(d) * m <?> n r - p m   (r, m > 0)
    Int rhs = x.num() * r_ - p_ * x.den();
    Int qm = q_ * x.den();
    if (qm > 0) {
        if (rhs <= 0) return false;
        return qm * qm * d_ < rhs * rhs;
    }
    if (rhs >= 0) return true;
    return qm * qm * d_ > rhs * rhs;
}

bool QuadraticSurd::operator>(const Rational& x) const { return !(*this < x); }

std::string QuadraticSurd::str() const {
    std::string core;
    std::string root = (q_ == 1 ? "" : (q_ == -1 ? "-" : q_.str() + "*")) + "sqrt(" + d_.str() + ")";
    if (p_ == 0) {
        core = root;
    } else {
        core = p_.str() + (q_ > 0 ? "+" : "") + root;
    }
    if (r_ == 1) return core;
    return "(" + core + ")/" + r_.str();
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.str(); }

// --- QuadState ---

int QuadState::sign() const {
    assert(Q != 0);
    int num_sign;
    if (P >= 0) {
        num_sign = 1;  // P + sqrt(D) > 0
    } else {
        num_sign = P * P < D ? 1 : -1;
    }
    return Q > 0 ? num_sign : -num_sign;
}

bool QuadState::less_than(const Rational& x) const {
    if (x.is_infinity()) return true;
    // (P + sqrt(D))/Q < n/m
    Int n = x.num(), m = x.den();
    // multiply by Q m, careful with sign of Q (m > 0)
    // Q > 0:  P m + m sqrt(D) < n Q   <=> m sqrt(D) < n Q - P m
    // Q < 0:  flips
    Int rhs = n * Q - P * m;
    bool flip = Q < 0;
    // compare m sqrt(D) ? rhs, with m > 0
    bool lt;
    if (rhs <= 0) {
        lt = false;
    } else {
        lt = m * m * D < rhs * rhs;
    }
    return flip ? !lt : lt;
}

std::string QuadState::str() const {
    return "(" + P.str() + "+sqrt(" + D.str() + "))/" + Q.str();
}

QuadState quadstate_of_surd(const QuadraticSurd& s) {
    // (p + q sqrt(d))/r = (p·|q| + sign(q) sqrt(q^2 d)·|q|/|q| ... use e = q:
    // (p + sqrt(q^2 d))/r when q > 0, else (-p + sqrt(q^2 d))/(-r).
    Int D = s.q() * s.q() * s.d();
    if (s.q() > 0) return {s.p(), D, s.r()};
    return {-s.p(), D, -s.r()};
}

QuadraticSurd surd_of_quadstate(const QuadState& st) {
    auto [sq, d] = squarefree_decompose(st.D);
    return QuadraticSurd(st.P, sq, d, st.Q);
}

// --- QuadExpr ---

QuadExpr QuadExpr::of(const QuadraticSurd& s) {
    Rational r(Int(1), s.r());
    return QuadExpr{Rational(s.p()) * r, Rational(s.q()) * r, s.d()};
}

QuadExpr QuadExpr::operator+(const QuadExpr& o) const {
    assert(d == o.d);
    return {u + o.u, v + o.v, d};
}

QuadExpr QuadExpr::operator-(const QuadExpr& o) const {
    assert(d == o.d);
    return {u - o.u, v - o.v, d};
}

QuadExpr QuadExpr::operator*(const QuadExpr& o) const {
    assert(d == o.d);
    return {u * o.u + v * o.v * Rational(d), u * o.v + v * o.u, d};
}

QuadExpr QuadExpr::operator+(const Rational& x) const { return {u + x, v, d}; }

QuadExpr QuadExpr::operator*(const Rational& x) const { return {u * x, v * x, d}; }

}  // namespace jimm
