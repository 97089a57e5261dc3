#pragma once

// Exact integer arithmetic: factorization, Kronecker symbol, discriminant
// decomposition and the classical arithmetic functions built on them.
// Everything here is pure and deterministic; inputs are capped at 2^63-1
// and rejected (never wrapped) beyond that.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadl::arith {

using std::int64_t;
using std::uint64_t;

struct Factorization {
    int64_t value = 1;
    // (prime, exponent), primes strictly increasing
    std::vector<std::pair<int64_t, int>> factors;
};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = m == 1 ? 0 : 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the 12-base set is exact for all n < 3.3e24.
inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline uint64_t pollard_brent(uint64_t n) {
    // n odd composite, no factor below the trial-division bound.
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
        const uint64_t m = 128;
        uint64_t r = 1;
        auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = f(y);
            for (uint64_t k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

inline void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

inline Factorization factorize(int64_t n) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    Factorization f;
    f.value = n;
    uint64_t m = static_cast<uint64_t>(n);
    auto push = [&](int64_t p, int e) { f.factors.emplace_back(p, e); };
    for (uint64_t p = 2; p <= 1000000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            push(static_cast<int64_t>(p), e);
        }
    }
    if (m > 1) {
        if (m < 1000000ull * 1000000ull || is_prime(m)) {
            // no divisor <= 1e6, so m < 1e12 is prime outright
            if (m < 1000000ull * 1000000ull && !is_prime(m)) {
                // unreachable; keep the rho path as a safety net
                std::vector<uint64_t> ps;
                detail::factor_rec(m, ps);
                std::sort(ps.begin(), ps.end());
                for (size_t i = 0; i < ps.size();) {
                    size_t j = i;
                    while (j < ps.size() && ps[j] == ps[i]) ++j;
                    push(static_cast<int64_t>(ps[i]), static_cast<int>(j - i));
                    i = j;
                }
            } else {
                push(static_cast<int64_t>(m), 1);
            }
        } else {
            std::vector<uint64_t> ps;
            detail::factor_rec(m, ps);
            std::sort(ps.begin(), ps.end());
            for (size_t i = 0; i < ps.size();) {
                size_t j = i;
                while (j < ps.size() && ps[j] == ps[i]) ++j;
                push(static_cast<int64_t>(ps[i]), static_cast<int>(j - i));
                i = j;
            }
        }
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

// Kronecker symbol (a|n), total on Z x Z with (a|0) = 1 iff a = +-1.
inline int kronecker(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int k = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int v = 0;
        while (n % 2 == 0) { n /= 2; ++v; }
        if (v & 1) {
            int64_t am8 = ((a % 8) + 8) % 8;
            if (am8 == 3 || am8 == 5) k = -k;
        }
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

struct Discriminant {
    int64_t D = 0;   // D = d * ell^2, D == 0 or 1 (mod 4)
    int64_t d = 1;   // fundamental discriminant, or 1 when D is a square
    int64_t ell = 1; // positive
};

inline bool is_discriminant(int64_t D) {
    int64_t m = ((D % 4) + 4) % 4;
    return m == 0 || m == 1;
}

inline bool is_fundamental(int64_t d) {
    if (d == 1) return true;
    int64_t m = ((d % 4) + 4) % 4;
    auto squarefree = [](int64_t n) {
        for (auto& [p, e] : factorize(std::llabs(n)).factors)
            if (e > 1) return false;
        return true;
    };
    if (m == 1) return squarefree(d);
    if (m == 0) {
        int64_t k = d / 4;
        int64_t km = ((k % 4) + 4) % 4;
        return (km == 2 || km == 3) && squarefree(k);
    }
    return false;
}

inline Discriminant decompose(int64_t D) {
    if (D == 0 || !is_discriminant(D))
        throw std::domain_error("decompose: D must be nonzero and 0 or 1 mod 4");
    Factorization f = factorize(std::llabs(D));
    int64_t kernel = D < 0 ? -1 : 1; // signed squarefree kernel
    int64_t ell0 = 1;
    for (auto& [p, e] : f.factors) {
        if (e & 1) kernel *= p;
        for (int i = 0; i < e / 2; ++i) ell0 *= p;
    }
    Discriminant out;
    out.D = D;
    if (((kernel % 4) + 4) % 4 == 1) {
        out.d = kernel;
        out.ell = ell0;
    } else {
        // kernel = 2,3 mod 4: the fundamental part is 4*kernel and ell0 is even
        out.d = 4 * kernel;
        out.ell = ell0 / 2;
    }
    return out;
}

// psi_D(n) = (d | n/gcd(n,ell)) for D = d*ell^2.
inline int psi_D(const Discriminant& dec, int64_t n) {
    int64_t g = std::gcd(n, dec.ell);
    return kronecker(dec.d, n / g);
}

inline int psi_D(int64_t D, int64_t n) { return psi_D(decompose(D), n); }

inline double von_mangoldt(int64_t n) {
    if (n < 1) throw std::domain_error("von_mangoldt: n must be >= 1");
    if (n == 1) return 0.0;
    Factorization f = factorize(n);
    if (f.factors.size() != 1) return 0.0;
    return std::log(static_cast<double>(f.factors[0].first));
}

inline std::vector<int64_t> divisors(int64_t n) {
    Factorization f = factorize(n);
    std::vector<int64_t> ds{1};
    for (auto& [p, e] : f.factors) {
        size_t sz = ds.size();
        int64_t pp = 1;
        for (int i = 1; i <= e; ++i) {
            pp *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pp);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::complex<double> sigma(std::complex<double> k, int64_t n) {
    std::complex<double> s = 0.0;
    for (int64_t d : divisors(n))
        s += std::exp(k * std::log(static_cast<double>(d)));
    return s;
}

inline int64_t sigma_int(int k, int64_t n) {
    int64_t s = 0;
    for (int64_t d : divisors(n)) {
        int64_t t = 1;
        for (int i = 0; i < k; ++i) t *= d;
        s += t;
    }
    return s;
}

// sigma_{-1}(n) = sigma_1(n)/n, the residue target in the half-line pole.
inline double sigma_minus1(int64_t n) {
    return static_cast<double>(sigma_int(1, n)) / static_cast<double>(n);
}

inline int moebius(int64_t n) {
    Factorization f = factorize(n);
    int m = 1;
    for (auto& [p, e] : f.factors) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

inline int64_t euler_phi(int64_t n) {
    Factorization f = factorize(n);
    int64_t r = n;
    for (auto& [p, e] : f.factors) r = r / p * (p - 1);
    return r;
}

// (n, m^inf): largest divisor of n supported on the primes of m.
inline int64_t power_part(int64_t n, int64_t m) {
    if (n < 1 || m < 1) throw std::domain_error("power_part: arguments must be >= 1");
    int64_t r = 1;
    for (;;) {
        int64_t g = std::gcd(n, m);
        if (g == 1) break;
        n /= g;
        r *= g;
    }
    return r;
}

inline int64_t isqrt(int64_t n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = isqrt(n);
    return r * r == n;
}

inline int omega(int64_t n) {
    return static_cast<int>(factorize(n).factors.size());
}

inline bool is_squarefree(int64_t n) {
    for (auto& [p, e] : factorize(n).factors)
        if (e > 1) return false;
    return true;
}

} // namespace quadl::arith
