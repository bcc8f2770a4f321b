#include "powval/bounds.hpp"

#include <cmath>
#include <numbers>

namespace powval {

namespace {

void require_rs(int r, int s) {
    if (s < 2 || s > r)
        throw Error(Errc::BadRange, "need 2 <= s <= r, got r=" + std::to_string(r) + " s=" + std::to_string(s));
}

Rational pow_q(const Rational& q, long e) { return rational_pow(q, e); }

long double to_ld(const Rational& q) {
    long double n = static_cast<long double>(q.get_num().get_d());
    // The chain constants are tiny powers: go through logs when the parts overflow a double.
    if (std::isfinite(n) && std::abs(n) < 1e300L) {
        const long double d = static_cast<long double>(q.get_den().get_d());
        if (std::isfinite(d) && d < 1e300L) return n / d;
    }
    const long double l = log_abs(q.get_num()) - log_abs(q.get_den());
    return (q < 0 ? -1 : 1) * std::exp(l);
}

}  // namespace

long M_of(int r, int s) {
    require_rs(r, s);
    const long R = r, S = s;
    return r == s ? 2 * R * R + 6 * R + 1 : 2 * S * R * R + S * R + 1;
}

long double schanuel_constant(const NumberField& k, int r) {
    if (r < 1) throw Error(Errc::BadRange, "r must be >= 1");
    const FieldInvariants inv = field_invariants(k);
    const long double zeta = dedekind_zeta(k, r + 1, 1e-12L);
    const long double sqrt_disc = std::sqrt(static_cast<long double>(inv.abs_discriminant.get_d()));
    const long double inner =
        std::pow(2.0L, inv.m1) * std::pow(2 * std::numbers::pi_v<long double>, inv.m2) / sqrt_disc;
    return inv.class_number * inv.regulator / (inv.roots_of_unity * zeta) * std::pow(inner, r + 1) *
           std::pow(static_cast<long double>(r + 1), inv.m1 + inv.m2 - 1);
}

BoundReport compute_bounds(const BoundInputs& in) {
    require_rs(in.r, in.s);
    if (in.n_exceptional < 0) throw Error(Errc::BadRange, "n_exceptional must be >= 0");
    if (in.c5 < 0 || in.c6 < 0) throw Error(Errc::BadRange, "c5 and c6 must be >= 0");
    if (!(in.S.field() == in.field)) throw Error(Errc::FieldMismatch, "place set lives over a different field");
    BoundReport rep;
    rep.r = in.r;
    rep.s = in.s;
    rep.m = in.field.degree();
    rep.M = M_of(in.r, in.s);
    if (static_cast<long>(in.B_M.size()) != rep.M)
        throw Error(Errc::SizeMismatch,
                    "need " + std::to_string(rep.M) + " sequence terms, got " + std::to_string(in.B_M.size()));
    for (std::size_t i = 0; i < in.B_M.size(); ++i) {
        const auto& b = in.B_M[i];
        if (!b.is_rational() && b.d() != in.field.d()) throw Error(Errc::FieldMismatch, b.literal() + " is not in k");
        for (std::size_t j = 0; j < i; ++j)
            if (in.B_M[j] == b) throw Error(Errc::DuplicateSequenceTerms, b.literal() + " is repeated");
    }
    for (const auto& b : in.B_M) rep.B = std::max(rep.B, absolute_height(in.field, b));

    const long r = in.r, m = rep.m, x = m * r * (r + 1);
    const long double M = static_cast<long double>(rep.M), L2 = std::log(2.0L);
    rep.a_S = in.S.a_S();
    rep.eps_exact = Rational(1, r + 1);
    rep.c3_exact = Rational(1, m * r * (r + 1));
    rep.c4_exact = pow_q(rep.c3_exact, x - r);
    rep.eps = to_ld(rep.eps_exact);
    rep.c3 = to_ld(rep.c3_exact);
    rep.c4 = to_ld(rep.c4_exact);
    rep.c1 = M * (rep.B + r * L2) + 2.0L * r * std::log(static_cast<long double>(r));
    rep.c2 = M * (rep.B + L2) / in.s + rep.a_S + A_of(in.r, in.field.is_rationals()) + 4.0L * r * (r - 1);
    rep.c = to_ld(Rational(1, m * r * r * r * (r + 1) * (r + 1))) - rep.c1 - rep.c2;
    rep.a_kr = schanuel_constant(in.field, in.r);
    rep.b_kr = r * rep.a_kr * to_ld(pow_q(rep.c3_exact, x));
    const long double tail = in.c5 * rep.c4 * rep.c3;
    rep.C0 = rep.b_kr * std::pow(2.0L, -x) + (in.subtract_c5 ? -tail : tail);
    rep.C1 = r * (rep.b_kr * std::pow(2.0L, x) + in.c6 * rep.c4 + static_cast<long double>(in.n_exceptional));
    return rep;
}

KeyInequalityReport key_inequality_check(int r, int s) {
    require_rs(r, s);
    KeyInequalityReport rep;
    rep.r = r;
    rep.s = s;
    rep.pass = true;
    const Rational M = M_of(r, s), bound(1, r);
    bool first = true;
    for (int d = 1; d <= r; ++d)
        for (int sp = 1; sp <= s - 1; ++sp) {
            if (r - sp < d - 1) continue;
            ++rep.cases;
            const Rational v = M * (1 - Rational(sp, s)) - 2 * d * d - d;
            if (v < bound) rep.pass = false;
            if (first || v < rep.min_slack) {
                rep.min_slack = v;
                rep.argmin_d = d;
                rep.argmin_s_plus = sp;
                first = false;
            }
        }
    return rep;
}

CountBand count_band(const NumberField& k, int r, long double T, long double c5, long double c6) {
    if (r < 1) throw Error(Errc::BadRange, "r must be >= 1");
    if (!(T > 0)) throw Error(Errc::BadRange, "T must be positive");
    const long x = static_cast<long>(k.degree()) * r * (r + 1);
    CountBand band;
    band.b_kr = r * schanuel_constant(k, r) * std::pow(T, static_cast<long double>(x));
    band.T1 = std::pow(T, static_cast<long double>(x - r));
    band.lower = band.b_kr * std::pow(2.0L, -x) - c5 * band.T1 * T;
    band.upper = band.b_kr * std::pow(2.0L, x) + c6 * band.T1;
    return band;
}

long M0_of(long m, long N0, long M) {
    if (m < 1 || N0 < 0 || M < 1) throw Error(Errc::BadRange, "need m >= 1, N0 >= 0, M >= 1");
    return m <= M ? m * (N0 + M + 2) : m * (N0 + 2);
}

}  // namespace powval
