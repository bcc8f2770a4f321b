#include "powval/field.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace powval {

namespace {

// B_2, B_4, ..., B_20
constexpr std::array<long double, 10> kBernoulliEven = {
    1.0L / 6,        -1.0L / 30,    1.0L / 42,         -1.0L / 30,       5.0L / 66,
    -691.0L / 2730,  7.0L / 6,      -3617.0L / 510,    43867.0L / 798,   -174611.0L / 330,
};

// Euler-Maclaurin tail at x = N + a. Returns the summed correction terms and
// the magnitude of the first omitted term, which bounds the remainder for real s > 1.
std::pair<long double, long double> em_tail(long double s, long double x) {
    long double sum = std::pow(x, 1 - s) / (s - 1) + std::pow(x, -s) / 2;
    long double rising = s;             // s (s+1) ... (s+2k-2)
    long double factorial = 2;          // (2k)!
    long double xpow = std::pow(x, -s - 1);
    long double omitted = 0;
    for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
        long double term = kBernoulliEven[k - 1] / factorial * rising * xpow;
        if (k == kBernoulliEven.size()) {
            omitted = std::fabs(term);
            break;
        }
        sum += term;
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        factorial *= (2 * k + 1) * (2 * k + 2);
        xpow /= x * x;
    }
    return {sum, omitted};
}

}  // namespace

long double hurwitz_zeta(long double s, long double a, long double eps) {
    if (!(eps > 0)) throw Error(Errc::BadPrecision, "eps must be positive");
    if (!(s > 1) || !(a > 0)) throw Error(Errc::BadRange, "hurwitz_zeta needs s > 1 and a > 0");
    for (long n = 16;; n *= 2) {
        auto [tail, omitted] = em_tail(s, n + a);
        if (omitted > eps / 4 && n < (1L << 24)) continue;
        long double head = 0;
        for (long k = n - 1; k >= 0; --k) head += std::pow(k + a, -s);
        return head + tail;
    }
}

long double dedekind_zeta(const NumberField& field, int s, long double eps) {
    if (!(eps > 0)) throw Error(Errc::BadPrecision, "eps must be positive");
    if (s < 2) throw Error(Errc::BadRange, "s must be >= 2");
    const long double zeta = hurwitz_zeta(s, 1.0L, eps / 8);
    if (field.is_rationals()) return zeta;
    const long q = std::labs(field.discriminant());
    const Integer disc = field.discriminant();
    // L(s, chi) = q^-s sum_{a=1}^{q} chi(a) zeta(s, a/q); chi(a) = (disc / a)
    const long double scale = std::pow(static_cast<long double>(q), -s);
    const long double per_term = eps / 8 / (scale * q);
    long double l = 0;
    for (long a = 1; a <= q; ++a) {
        int chi = mpz_kronecker(disc.get_mpz_t(), Integer(a).get_mpz_t());
        if (chi == 0) continue;
        l += chi * hurwitz_zeta(s, static_cast<long double>(a) / q, per_term);
    }
    return zeta * l * scale;
}

namespace {

// floor((P + sqrt d) / Q) for nonsquare d > 0 and Q != 0, with r = floor(sqrt d).
Integer floor_quadratic(const Integer& P, const Integer& Q, const Integer& r) {
    Integer out;
    if (Q > 0) {
        Integer num = P + r;
        mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        return out;
    }
    Integer num = P + r, den = -Q;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return -out - 1;
}

}  // namespace

FieldElement fundamental_unit(const NumberField& field) {
    if (field.is_rationals() || field.d() < 0) throw Error(Errc::UnsupportedField, "fundamental unit needs a real quadratic field");
    const long d = field.d();
    const bool half = field.omega_is_half();
    const Integer D = d;
    const Integer r = isqrt_exact(D).first;
    // continued fraction of omega = (P + sqrt d)/Q; the first convergent p/q with
    // |N(p - q omega)| = 1 yields the fundamental unit p - q conj(omega).
    Integer P = half ? 1 : 0, Q = half ? 2 : 1;
    Integer p_prev = 1, p_cur = 0, q_prev = 0, q_cur = 1;
    for (int iter = 0; iter < 1'000'000; ++iter) {
        Integer a = floor_quadratic(P, Q, r);
        Integer p_next = a * p_prev + p_cur, q_next = a * q_prev + q_cur;
        p_cur = p_prev;
        q_cur = q_prev;
        p_prev = p_next;
        q_prev = q_next;
        // N(p - q omega)
        Integer n = half ? Integer(p_prev * p_prev - p_prev * q_prev - Integer((d - 1) / 4) * q_prev * q_prev)
                         : Integer(p_prev * p_prev - D * q_prev * q_prev);
        if (n == 1 || n == -1) {
            // p - q conj(omega): conj(omega) = (1 - sqrt d)/2 or -sqrt d
            if (half) return field.element(Rational(p_prev) - Rational(q_prev, 2), Rational(q_prev, 2));
            return field.element(Rational(p_prev), Rational(q_prev));
        }
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw Error(Errc::BudgetExceeded, "continued fraction period too long");
}

namespace {

long count_reduced_forms(long disc) {
    // b^2 - 4ac = disc < 0, |b| <= a <= c, b >= 0 when |b| = a or a = c
    const long D = -disc;
    long count = 0;
    for (long a = 1; 3 * a * a <= D; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace

FieldInvariants field_invariants(const NumberField& field) {
    FieldInvariants inv;
    if (field.is_rationals()) return inv;
    inv.base_is_rationals = false;
    inv.m1 = field.m1();
    inv.m2 = field.m2();
    inv.m = field.degree();
    const long disc = field.discriminant();
    inv.abs_discriminant = std::labs(disc);
    if (field.d() < 0) {
        inv.class_number = count_reduced_forms(disc);
        inv.regulator = 1.0L;
        inv.roots_of_unity = field.d() == -1 ? 4 : (field.d() == -3 ? 6 : 2);
        return inv;
    }
    const FieldElement eps = fundamental_unit(field);
    inv.regulator = log_local_value(field, eps, Place::real(0));
    inv.roots_of_unity = 2;
    // h = -(1 / (2 Reg)) sum_{a=1}^{D-1} chi(a) log sin(pi a / D)
    const Integer dz = disc;
    long double sum = 0;
    for (long a = 1; a < disc; ++a) {
        int chi = mpz_kronecker(dz.get_mpz_t(), Integer(a).get_mpz_t());
        if (chi != 0) sum += chi * std::log(std::sin(std::numbers::pi_v<long double> * a / disc));
    }
    inv.class_number = std::lround(-sum / (2 * inv.regulator));
    return inv;
}

}  // namespace powval
