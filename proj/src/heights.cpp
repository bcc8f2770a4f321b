#include "powval/heights.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace powval {

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    for (auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

bool has_rational_root(const Polynomial& f) {
    if (f.degree() < 1) return false;
    const Polynomial g = primitive_part(f);
    const Integer a0 = g.coeff(0).a().get_num();
    if (a0 == 0) return true;
    const Integer ad = g.leading().a().get_num();
    const auto nums = positive_divisors(a0);
    const auto dens = positive_divisors(ad);
    for (const auto& r : nums)
        for (const auto& s : dens)
            for (int sign : {1, -1})
                if (g(FieldElement(Rational(r * sign, s))).is_zero()) return true;
    return false;
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return from_min_poly(Polynomial::rational({-c, Rational(1)}), 0);
}

AlgebraicNumber AlgebraicNumber::from_min_poly(const Polynomial& f, int root_index) {
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "minimal polynomial must have degree >= 1");
    AlgebraicNumber out;
    out.min_poly_ = primitive_part(f);
    if (out.min_poly_.degree() >= 2 && has_rational_root(out.min_poly_))
        throw Error(Errc::NotIrreducible, out.min_poly_.pretty() + " has a rational root");
    if (root_index < 0 || root_index >= out.min_poly_.degree())
        throw Error(Errc::BadRange, "root index " + std::to_string(root_index) + " out of range");
    out.root_index_ = root_index;
    if (out.min_poly_.degree() == 1) {
        const FieldElement r = -out.min_poly_.coeff(0) / out.min_poly_.coeff(1);
        out.approx_ = {{static_cast<long double>(r.a().get_d()), 0.0L}, 0.0L};
    } else {
        out.approx_ = isolate_roots(out.min_poly_).roots[static_cast<std::size_t>(root_index)];
    }
    return out;
}

AlgebraicNumber AlgebraicNumber::quadratic(long a, long b, long c, int root_index) {
    return from_min_poly(Polynomial::rational({c, b, a}), root_index);
}

namespace {

// disc = q^2 * d with d squarefree (sign carried by d)
std::pair<Integer, long> split_square(const Integer& disc) {
    Integer q = 1, d = disc < 0 ? -1 : 1;
    for (auto& [p, e] : factor_integer(disc)) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
        q *= pk;
        if (e % 2) d *= p;
    }
    return {q, d.get_si()};
}

}  // namespace

NumberField AlgebraicNumber::natural_field() const {
    if (degree() == 1) return NumberField::rationals();
    if (degree() != 2) throw Error(Errc::UnsupportedDegree, "exact field representation needs degree <= 2");
    const Integer disc = discriminant(min_poly_).a().get_num();
    return NumberField::quadratic(split_square(disc).second);
}

FieldElement AlgebraicNumber::as_field_element() const {
    if (degree() == 1) return -min_poly_.coeff(0) / min_poly_.coeff(1);
    if (degree() != 2) throw Error(Errc::UnsupportedDegree, "exact field representation needs degree <= 2");
    const Rational a = min_poly_.coeff(2).a(), b = min_poly_.coeff(1).a();
    const Integer disc = discriminant(min_poly_).a().get_num();
    const auto [q, d] = split_square(disc);
    const int sign = root_index_ == 0 ? -1 : 1;
    return FieldElement(-b / (2 * a), Rational(q * sign) / (2 * a), d);
}

AlgebraicNumber AlgebraicNumber::conjugate() const {
    if (degree() != 2) throw Error(Errc::UnsupportedDegree, "conjugate is defined here for degree 2");
    return from_min_poly(min_poly_, 1 - root_index_);
}

std::string AlgebraicNumber::describe() const {
    if (degree() == 1) return as_field_element().literal();
    return "root " + std::to_string(root_index_) + " of " + min_poly_.pretty();
}

HeightValue height_point(const NumberField& field, const std::vector<FieldElement>& coords) {
    if (std::all_of(coords.begin(), coords.end(), [](const FieldElement& c) { return c.is_zero(); }))
        throw Error(Errc::AllZero, "projective point with all coordinates zero");
    std::map<PrimeIdeal, bool> support;
    for (const auto& c : coords)
        if (!c.is_zero())
            for (const auto& pf : factor_element(field, c)) support[pf.prime] = true;

    long double h = 0;
    auto add_place = [&](const Place& v) {
        long double best = -std::numeric_limits<long double>::infinity();
        for (const auto& c : coords)
            if (!c.is_zero()) best = std::max(best, log_local_value(field, c, v));
        h += best;
    };
    for (auto& [P, unused] : support) add_place(Place::finite(P));
    for (const auto& v : infinite_places(field)) add_place(v);
    return {std::exp(h), h};
}

long double absolute_height(const NumberField& field, const FieldElement& alpha) {
    return height_point(field, {field.one(), alpha}).h / field.degree();
}

long double absolute_height(const AlgebraicNumber& alpha) {
    return std::log(mahler_measure(alpha.min_poly())) / alpha.degree();
}

long double absolute_height_place_sum(const AlgebraicNumber& alpha) {
    return absolute_height(alpha.natural_field(), alpha.as_field_element());
}

HeightValue height_polynomial(const Polynomial& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "height of the zero polynomial");
    const HeightValue rel = height_point(f.field(), f.coeffs());
    const long double h = rel.h / f.field().degree();
    return {std::exp(h), h};
}

long double A_of(int d, bool base_is_rationals) {
    if (d < 2) throw Error(Errc::BadRange, "A(d) needs d >= 2");
    const long double l = std::log(static_cast<long double>(d));
    return base_is_rationals ? d * l : (2 * d - 1) * l;
}

namespace {
constexpr long double kRelTol = 1e-9L;
}

DiscriminantReport check_discriminant_bounds(const Polynomial& f_in) {
    if (f_in.degree() < 2) throw Error(Errc::DegreeTooSmall, "discriminant bounds need degree >= 2");
    const bool over_q = f_in.has_rational_coeffs();
    const Polynomial f = over_q ? primitive_part(f_in) : f_in;
    DiscriminantReport r;
    const int d = f.degree();
    r.degree = d;
    r.discriminant = discriminant(f);
    r.mahler = mahler_measure(f);
    r.part_i_lhs = std::abs(embed(r.discriminant, 0));
    r.part_i_rhs = std::pow(static_cast<long double>(d), d) * std::pow(r.mahler, 2 * d - 2);
    r.part_i_pass = r.part_i_lhs <= r.part_i_rhs * (1 + kRelTol);
    if (r.discriminant.is_zero()) {
        r.part_ii_skip_reason = "D(f)=0";
        return r;
    }
    if (!over_q) {
        r.part_ii_skip_reason = "requires coefficients in Q";
        return r;
    }
    r.part_ii_checked = true;
    r.part_ii_lhs = rational_height(r.discriminant.a());
    r.part_ii_rhs = 2 * (d - 1) * height_polynomial(f).h + A_of(d, true);
    r.part_ii_pass = r.part_ii_lhs <= r.part_ii_rhs + kRelTol * std::max(1.0L, r.part_ii_rhs);
    r.part_ii_mahler_rhs = 2 * (d - 1) * std::log(r.mahler) + A_of(d, true);
    r.part_ii_mahler_pass = r.part_ii_lhs <= r.part_ii_mahler_rhs + kRelTol * std::max(1.0L, r.part_ii_mahler_rhs);
    return r;
}

}  // namespace powval
