#pragma once

// Shared helpers for the test suites: seeded generators and small exact oracles.

#include "powval/field.hpp"
#include "powval/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace powval::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234ULL);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound) {
    long den = uniform(1, bound);
    Rational q(uniform(-bound, bound), den);
    q.canonicalize();
    return q;
}

inline Rational random_nonzero_rational(long bound) {
    for (;;) {
        Rational q = random_rational(bound);
        if (q != 0) return q;
    }
}

inline FieldElement random_element(const NumberField& K, long bound) {
    if (K.is_rationals()) return FieldElement(random_rational(bound));
    return K.element(random_rational(bound), random_rational(bound));
}

inline FieldElement random_nonzero_element(const NumberField& K, long bound) {
    for (;;) {
        FieldElement x = random_element(K, bound);
        if (!x.is_zero()) return x;
    }
}

inline Polynomial random_int_poly(int degree, long bound) {
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = uniform(-bound, bound);
    while (c.back() == 0) c.back() = uniform(-bound, bound);
    return Polynomial::rational(c);
}

/// Determinant by fraction-exact Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Resultant from the Sylvester matrix, rational coefficients.
inline Rational sylvester_resultant(const Polynomial& f, const Polynomial& g) {
    const int m = f.degree(), n = g.degree();
    std::vector<std::vector<Rational>> S(m + n, std::vector<Rational>(m + n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S[i][i + j] = f.coeff(m - j).a();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S[n + i][i + j] = g.coeff(n - j).a();
    return determinant(S);
}

inline long gcd3(long a, long b, long c) { return std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)); }

// Points of degree <= 2 with H <= X counted from scratch: reduced pairs for
// degree 1; for degree 2 every primitive irreducible a x^2 + b x + c with a > 0
// and a max(1,|z1|) max(1,|z2|) <= X^2 (roots in double precision), two roots each.
inline long brute_force_count(long X) {
    long n = 0;
    for (long a = -X; a <= X; ++a)
        for (long b = 0; b <= X; ++b)
            if (std::gcd(std::labs(a), b) == 1 && (b > 0 || a == 1)) ++n;
    const long Y = X * X;
    for (long a = 1; a <= Y; ++a)
        for (long b = -2 * Y; b <= 2 * Y; ++b)
            for (long c = -Y; c <= Y; ++c) {
                if (c == 0 || gcd3(a, b, c) != 1) continue;
                const long D = b * b - 4 * a * c;
                if (D >= 0) {
                    const long s = std::lround(std::sqrt(static_cast<double>(D)));
                    if (s * s == D) continue;
                }
                double M;
                if (D < 0) {
                    const double mod2 = static_cast<double>(c) / a;  // |z|^2
                    M = a * std::max(1.0, mod2);
                } else {
                    const double r = std::sqrt(static_cast<double>(D));
                    const double z1 = std::abs((-b + r) / (2.0 * a)), z2 = std::abs((-b - r) / (2.0 * a));
                    M = a * std::max(1.0, z1) * std::max(1.0, z2);
                }
                if (M <= Y + 1e-9) n += 2;
            }
    return n;
}

}  // namespace powval::testing
