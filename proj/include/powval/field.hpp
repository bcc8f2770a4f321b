#pragma once

// Exact arithmetic in k = Q or k = Q(sqrt d): elements, prime ideals, places,
// normalized local values and the invariants h_k, Reg_k, w_k, zeta_k.

#include "powval/arith.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace powval {

class FieldElement;

class NumberField {
public:
    enum class Kind { Rationals, Quadratic };

    static NumberField rationals() { return NumberField(); }
    /// Throws NotSquarefree or DisallowedValue (d in {0, 1}).
    static NumberField quadratic(long d);

    Kind kind() const noexcept { return d_ == 0 ? Kind::Rationals : Kind::Quadratic; }
    bool is_rationals() const noexcept { return d_ == 0; }
    /// Squarefree radicand; 0 encodes Q.
    long d() const noexcept { return d_; }
    /// Signed field discriminant: 1 for Q, d or 4d otherwise.
    long discriminant() const noexcept;
    int m1() const noexcept { return d_ == 0 ? 1 : (d_ > 0 ? 2 : 0); }
    int m2() const noexcept { return d_ < 0 ? 1 : 0; }
    int degree() const noexcept { return d_ == 0 ? 1 : 2; }
    /// True when the integral basis is (1, (1 + sqrt d)/2).
    bool omega_is_half() const noexcept { return d_ != 0 && ((d_ % 4) + 4) % 4 == 1; }

    FieldElement element(const Rational& a, const Rational& b = 0) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// `Q` or `Q(sqrt,<d>)`.
    std::string literal() const;

    friend bool operator==(const NumberField&, const NumberField&) = default;

private:
    NumberField() = default;
    explicit NumberField(long d) : d_(d) {}
    long d_ = 0;
};

/// a + b sqrt(d), stored in lowest terms. Elements of Q have d = 0 and b = 0,
/// and combine freely with elements of any quadratic field.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Rational& a) : a_(a) { a_.canonicalize(); }  // NOLINT(implicit)
    FieldElement(long a) : a_(a) {}             // NOLINT(implicit)
    FieldElement(const Rational& a, const Rational& b, long d);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    long d() const noexcept { return d_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool is_rational() const noexcept { return b_ == 0; }

    FieldElement conjugate() const { return FieldElement(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
    Rational trace() const { return 2 * a_; }
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    FieldElement operator-() const { return FieldElement(-a_, -b_, d_); }
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
    friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
    friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
    friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    /// Lexicographic on (a, b); used only for canonical orderings.
    friend bool operator<(const FieldElement& x, const FieldElement& y) {
        return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
    }

    /// Element literal syntax: `a/b` or `a/b+c/e*sqrt(d)`.
    std::string literal() const;

private:
    long unify(const FieldElement& o) const;

    Rational a_ = 0;
    Rational b_ = 0;
    long d_ = 0;
};

struct PrimeIdeal {
    enum class Kind { Rational, Split, Inert, Ramified };

    Integer p;
    Kind kind = Kind::Rational;
    /// omega = sqrt d or (1 + sqrt d)/2 reduces to `root` mod the ideal
    /// (split and ramified primes); 0 otherwise. Together with p it generates
    /// the ideal as (p, omega - root).
    Integer root = 0;
    Integer residue_norm;

    friend bool operator==(const PrimeIdeal& x, const PrimeIdeal& y) { return x.p == y.p && x.root == y.root && x.kind == y.kind; }
    friend bool operator<(const PrimeIdeal& x, const PrimeIdeal& y) { return x.p != y.p ? x.p < y.p : x.root < y.root; }
};

const char* kind_name(PrimeIdeal::Kind kind);

struct Place {
    enum class Kind { Finite, Real, Complex };

    Kind kind = Kind::Finite;
    PrimeIdeal prime;  // Finite only
    int index = 0;     // Real: 0 sends sqrt d to +sqrt d, 1 to -sqrt d

    static Place finite(PrimeIdeal p) { return Place{Kind::Finite, std::move(p), 0}; }
    static Place real(int index) { return Place{Kind::Real, {}, index}; }
    static Place complex() { return Place{Kind::Complex, {}, 0}; }
    bool is_finite() const noexcept { return kind == Kind::Finite; }
    std::string describe() const;
};

struct FieldInvariants {
    long class_number = 1;
    long double regulator = 1.0L;
    int roots_of_unity = 2;
    Integer abs_discriminant = 1;
    int m1 = 1;
    int m2 = 0;
    int m = 1;
    bool base_is_rationals = true;
};

struct PrimeFactor {
    PrimeIdeal prime;
    int exponent;
};

/// Parses `Q` or `Q(sqrt,<d>)`.
NumberField make_field(std::string_view literal);
NumberField make_field(long d);

/// Parses an element literal in the given field.
FieldElement parse_element(const NumberField& field, std::string_view literal);

/// Primes of K above the rational prime p, in increasing root order.
std::vector<PrimeIdeal> primes_above(const NumberField& field, const Integer& p);

/// Splitting type via the Kronecker symbol (disc_K / p).
PrimeIdeal::Kind splitting_kind(const NumberField& field, const Integer& p);

std::vector<Place> infinite_places(const NumberField& field);

/// Fractional ideal factorization of (alpha), sorted by (p, root).
std::vector<PrimeFactor> factor_element(const NumberField& field, const FieldElement& alpha,
                                        const FactorBudget& budget = {});

int valuation(const NumberField& field, const FieldElement& alpha, const PrimeIdeal& prime);

/// Normalized almost-absolute value: N(p)^(-ord_p) at finite places,
/// |sigma(alpha)| at real and |sigma(alpha)|^2 at complex places.
long double local_value(const NumberField& field, const FieldElement& alpha, const Place& place);

/// log of local_value, computed without cancellation. alpha must be nonzero.
long double log_local_value(const NumberField& field, const FieldElement& alpha, const Place& place);

std::complex<long double> embed(const FieldElement& alpha, int index = 0);

FieldInvariants field_invariants(const NumberField& field);

/// zeta_K(s) to absolute accuracy eps; s >= 2.
long double dedekind_zeta(const NumberField& field, int s, long double eps);

/// Hurwitz zeta(s, a) for real s > 1, 0 < a <= 1, to absolute accuracy eps.
long double hurwitz_zeta(long double s, long double a, long double eps);

/// Fundamental unit x + y sqrt d (d > 0) with x, y rational (half-integers allowed).
FieldElement fundamental_unit(const NumberField& field);

}  // namespace powval
