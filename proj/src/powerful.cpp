#include "powval/powerful.hpp"

#include <algorithm>
#include <cstdlib>

namespace powval {

namespace {

void require_s(int s) {
    if (s < 2) throw Error(Errc::BadRange, "s must be >= 2, got " + std::to_string(s));
}

}  // namespace

Polynomial MultiplicityProfile::reconstruct() const {
    Polynomial out = Polynomial::constant(radical.field(), unit);
    for (const auto& [g, i] : parts) out *= g.pow(static_cast<unsigned>(i));
    return out;
}

MultiplicityProfile squarefree_decomposition(const Polynomial& f) {
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "squarefree decomposition of a constant");
    MultiplicityProfile p;
    p.parts = squarefree_parts(f);
    p.unit = f.leading();
    p.radical = Polynomial::constant(f.field(), f.field().one());
    for (const auto& [g, i] : p.parts) {
        p.s_plus = std::max(p.s_plus, i);
        p.radical *= g;
    }
    p.d = p.radical.degree();
    p.t_bound = p.d;
    return p;
}

PowerfulVerdict is_powerful_element(const NumberField& field, const FieldElement& alpha, int s) {
    require_s(s);
    if (alpha.is_zero()) throw Error(Errc::ZeroElement, "0 is not in k*");
    for (const auto& pf : factor_element(field, alpha))
        if (std::abs(pf.exponent) < s) return {false, pf};
    return {true, std::nullopt};
}

bool is_powerful_polynomial(const Polynomial& f, int s) {
    require_s(s);
    const auto p = squarefree_decomposition(f);
    return std::all_of(p.parts.begin(), p.parts.end(), [s](const auto& part) { return part.second >= s; });
}

bool multiplicities_below(const Polynomial& f, int s) {
    require_s(s);
    return squarefree_decomposition(f).s_plus <= s - 1;
}

Polynomial canonical_representative(const Polynomial& f, int s) {
    require_s(s);
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "canonical form of a constant");
    if (!f.has_rational_coeffs()) throw Error(Errc::UnsupportedField, "canonical form needs coefficients in Q");
    const Rational lead = f.leading().a();
    Rational scale = 1;
    for (const auto& [p, e] : factor_integer(lead.get_num()))
        scale /= rational_pow(Rational(p), static_cast<long>(s) * (e / s));
    for (const auto& [p, e] : factor_integer(lead.get_den()))
        scale *= rational_pow(Rational(p), static_cast<long>(s) * ((e + s - 1) / s));
    if (s % 2 == 1 && lead < 0) scale = -scale;
    return f * FieldElement(scale);
}

}  // namespace powval
