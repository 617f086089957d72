#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace jimm {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Floor division / modulus (round toward -infinity), den != 0.
Int floor_div(const Int& num, const Int& den);
Int floor_mod(const Int& num, const Int& den);

// Exact floor(sqrt(n)), n >= 0. The result s satisfies s^2 <= n < (s+1)^2.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// n = s^2 * d with d squarefree; n > 0. Returns {s, d}.
// Factoring is trial division below 10^4 plus Miller-Rabin/Pollard rho,
// with an iteration cap; throws Error when the cofactor resists (beyond
// desk scale).
std::pair<Int, Int> squarefree_decompose(const Int& n);

// Fibonacci with F(0)=0, F(1)=1; n may be negative (F(-n) = (-1)^{n+1} F(n)).
Int fibonacci(long long n);

}  // namespace jimm
