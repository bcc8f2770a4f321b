#pragma once

// The explicit constant chain for the count of polynomials with powerful
// values, the Schanuel constant, the two-sided point-count band and the
// combinatorial key inequality.

#include "powval/field.hpp"
#include "powval/nevanlinna.hpp"

#include <string>
#include <vector>

namespace powval {

/// 2r^2 + 6r + 1 when r = s, 2sr^2 + sr + 1 otherwise. Requires 2 <= s <= r.
long M_of(int r, int s);

/// a_{k,r} = h Reg / (w zeta_k(r+1)) * (2^m1 (2 pi)^m2 / sqrt|disc|)^(r+1) * (r+1)^(m1+m2-1).
long double schanuel_constant(const NumberField& k, int r);

struct BoundInputs {
    NumberField field = NumberField::rationals();
    int r = 2;
    int s = 2;
    std::vector<FieldElement> B_M;
    PlaceSet S{NumberField::rationals()};
    long n_exceptional = 0;
    long double c5 = 0;
    long double c6 = 0;
    bool subtract_c5 = false;  // C0 = b 2^(-x) - c5 c4 c3 instead of +
};

struct BoundReport {
    int r = 0, s = 0, m = 0;
    long M = 0;
    long double B = 0;
    long double a_S = 0;
    long double eps = 0;
    long double c = 0;
    long double c1 = 0, c2 = 0, c3 = 0, c4 = 0;
    long double a_kr = 0;
    long double b_kr = 0;
    long double C0 = 0;
    long double C1 = 0;
    // exact values where no logarithm intervenes
    Rational eps_exact, c3_exact, c4_exact;
};

BoundReport compute_bounds(const BoundInputs& in);

struct KeyInequalityReport {
    int r = 0, s = 0;
    long cases = 0;
    bool pass = false;
    Rational min_slack;  // min of M(1 - s+/s) - 2d^2 - d
    int argmin_d = 0;
    int argmin_s_plus = 0;
};

/// All (d, s+) with 1 <= d <= r, 1 <= s+ <= s - 1, r - s+ >= d - 1; passes when
/// every value is at least 1/r.
KeyInequalityReport key_inequality_check(int r, int s);

struct CountBand {
    long double lower = 0;
    long double upper = 0;
    long double b_kr = 0;
    long double T1 = 0;
};

/// lower = b 2^(-x) - c5 T1 T, upper = b 2^x + c6 T1 with x = m r (r+1),
/// b = r a_{k,r} T^x and T1 = T^(x - r).
CountBand count_band(const NumberField& k, int r, long double T, long double c5 = 0, long double c6 = 0);

/// m (N0 + M + 2) when m <= M, m (N0 + 2) otherwise.
long M0_of(long m, long N0, long M);

}  // namespace powval
