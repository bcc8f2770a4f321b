#pragma once

#include "powval/field.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace powval {

/// Dense univariate polynomial a_0 + a_1 x + ... + a_d x^d over k.
/// Coefficients are trimmed so that the leading one is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(NumberField field, std::vector<FieldElement> coeffs);
    /// Polynomial over Q from ascending rational coefficients.
    static Polynomial rational(std::vector<Rational> coeffs);
    static Polynomial rational(std::initializer_list<long> coeffs);
    static Polynomial constant(const NumberField& field, const FieldElement& c);
    static Polynomial x(const NumberField& field);

    const NumberField& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(int i) const;
    const FieldElement& leading() const;
    bool has_rational_coeffs() const;
    std::vector<Rational> rational_coeffs() const;

    FieldElement operator()(const FieldElement& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial pow(unsigned e) const;
    /// f(x + t).
    Polynomial shift(const FieldElement& t) const;
    /// f(lambda x).
    Polynomial scale(const FieldElement& lambda) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const FieldElement& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
    friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Coefficient list `c0,c1,...,cd` in element literal syntax.
    std::string literal() const;
    /// Human readable, e.g. `5*x^2+3*x+1`.
    std::string pretty() const;

private:
    void trim();

    NumberField field_ = NumberField::rationals();
    std::vector<FieldElement> coeffs_;
};

/// Parses `c0,c1,...,cd`.
Polynomial parse_polynomial(const NumberField& field, const std::string& literal);

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);  // exact quotient part
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Res(a, b) by the subresultant pseudo-remainder sequence.
FieldElement resultant(const Polynomial& a, const Polynomial& b);

/// (-1)^{d(d-1)/2} Res(f, f') / a_d. Throws DegreeTooSmall for deg f < 2.
FieldElement discriminant(const Polynomial& f);

/// Yun's algorithm: f = lc(f) * prod g_i^i with g_i monic, squarefree, pairwise
/// coprime. Parts with constant g_i are omitted; multiplicities ascend.
std::vector<std::pair<Polynomial, int>> squarefree_parts(const Polynomial& f);

/// For f over Q: the associated primitive integer polynomial with positive
/// leading coefficient (same roots, same projective height).
Polynomial primitive_part(const Polynomial& f);

}  // namespace powval
