#include "jimm/integer.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <random>

#include "jimm/error.hpp"

namespace jimm {

Int floor_div(const Int& num, const Int& den) {
    assert(den != 0);
    Int q = num / den;  // truncates toward zero
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

Int floor_mod(const Int& num, const Int& den) { return num - floor_div(num, den) * den; }

Int isqrt(const Int& n) {
    assert(n >= 0);
    Int s = boost::multiprecision::sqrt(n);
    assert(s * s <= n && (s + 1) * (s + 1) > n);
    return s;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int s = isqrt(n);
    return s * s == n;
}

namespace {

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 10000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    static std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    return boost::multiprecision::miller_rabin_test(n, 32, rng);
}

// Pollard rho (Brent variant). n odd composite, no factor below 10^4.
Int pollard_rho(const Int& n) {
    std::mt19937_64 rng(1234567 + static_cast<uint64_t>(n % 1000003));
    constexpr long kMaxIters = 4000000;
    for (int attempt = 0; attempt < 24; ++attempt) {
        Int c = Int(rng() % 1000003) + 1;
        Int x = Int(rng() % 1000003) + 2;
        Int y = x, d = 1;
        long iters = 0;
        while (d == 1) {
            if (++iters > kMaxIters)
                throw Error("squarefree_decompose: factoring budget exhausted for " + n.str());
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
    throw Error("squarefree_decompose: pollard rho failed for " + n.str());
}

void factor_into(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n <= 0) throw Error("squarefree_decompose: argument must be positive");
    Int m = n, s = 1, d = 1;
    for (uint32_t p : small_primes()) {
        if (Int(p) * p > m) break;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e == 0) continue;
        if (e & 1) d *= p;
        for (int i = 0; i < e / 2; ++i) s *= p;
    }
    if (m > 1) {
        // Cofactor has no prime factor below 10^4.
        if (is_perfect_square(m)) {
            s *= isqrt(m);
        } else if (is_probable_prime(m)) {
            d *= m;
        } else {
            std::vector<Int> fs;
            factor_into(m, fs);
            std::sort(fs.begin(), fs.end());
            for (size_t i = 0; i < fs.size();) {
                size_t j = i;
                while (j < fs.size() && fs[j] == fs[i]) ++j;
                size_t e = j - i;
                if (e & 1) d *= fs[i];
                for (size_t k = 0; k < e / 2; ++k) s *= fs[i];
                i = j;
            }
        }
    }
    assert(s * s * d == n);
    return {s, d};
}

Int fibonacci(long long n) {
    bool neg = n < 0;
    unsigned long long m = neg ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    // fast doubling
    std::function<std::pair<Int, Int>(unsigned long long)> fd =
        [&](unsigned long long k) -> std::pair<Int, Int> {
        if (k == 0) return {Int(0), Int(1)};
        auto [a, b] = fd(k / 2);  // F(k/2), F(k/2+1)
        Int c = a * (2 * b - a);
        Int d = a * a + b * b;
        if (k & 1) return {d, c + d};
        return {c, d};
    };
    Int f = fd(m).first;
    if (neg && m % 2 == 0) f = -f;
    return f;
}

}  // namespace jimm
