#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "jimm/rational.hpp"

namespace jimm {

// Canonical real quadratic irrational (p + q*sqrt(d)) / r.
// Invariants: d > 1 squarefree, q != 0, r > 0, gcd(p, q, r) = 1.
// Canonical form is unique: equal values have identical field tuples.
class QuadraticSurd {
  public:
    // Canonicalizes: extracts the square part of d, reduces the gcd, fixes
    // the sign of r. Throws Error if the value is rational (q*sqrt(d) ∈ Q).
    QuadraticSurd(Int p, Int q, Int d, Int r);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    QuadraticSurd galois_conjugate() const;

    int sign() const;  // -1 or +1 (a surd is never 0)
    Int floor() const;
    QuadraticSurd reciprocal() const;
    QuadraticSurd operator-() const;

    bool operator==(const QuadraticSurd& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
    }
    bool operator!=(const QuadraticSurd& o) const { return !(*this == o); }

    // Exact value order (terminating interval refinement; equality is decided
    // first on canonical tuples).
    bool operator<(const QuadraticSurd& o) const;
    bool operator<(const Rational& x) const;
    bool operator>(const Rational& x) const;

    std::string str() const;  // "(p+q*sqrt(d))/r" with omitted trivial parts

  private:
    Int p_, q_, d_, r_;
};

// galois_conjugate free function, mirroring the operation table.
inline QuadraticSurd galois_conjugate(const QuadraticSurd& x) { return x.galois_conjugate(); }

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s);

// Unreduced working form (P + sqrt(D)) / Q with D > 0 not a perfect square.
// No gcd/squarefree normalization is maintained, which keeps Möbius images of
// continued-fraction reconstructions exact without factoring big discriminants.
struct QuadState {
    Int P, D, Q;

    int sign() const;
    bool less_than(const Rational& x) const;
    QuadState galois() const { return {-P, D, -Q}; }   // (P - sqrt(D)) / Q
    QuadState negated() const { return {P, D, -Q}; }   // -(P + sqrt(D)) / Q

    std::string str() const;
};

QuadState quadstate_of_surd(const QuadraticSurd& s);
// Canonicalize; factoring of D's square part happens here (desk scale).
QuadraticSurd surd_of_quadstate(const QuadState& st);

// Exact element of Q(sqrt(d)): u + v*sqrt(d) with rational u, v.
// Used for polynomial evaluation at surds and norm computations.
struct QuadExpr {
    Rational u, v;
    Int d;

    static QuadExpr of(const QuadraticSurd& s);
    QuadExpr operator+(const QuadExpr& o) const;
    QuadExpr operator-(const QuadExpr& o) const;
    QuadExpr operator*(const QuadExpr& o) const;
    QuadExpr operator+(const Rational& x) const;
    QuadExpr operator*(const Rational& x) const;
    bool is_zero() const { return u.is_zero() && v.is_zero(); }
};

}  // namespace jimm
