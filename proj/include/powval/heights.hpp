#pragma once

// Weil heights on k and P^n(k), Mahler measure, discriminants and the
// discriminant inequalities for polynomials and algebraic numbers.

#include "powval/field.hpp"
#include "powval/polynomial.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace powval {

struct RootEnclosure {
    std::complex<long double> center;
    long double radius = 0;
};

/// Certified isolation of the complex roots of a squarefree polynomial under
/// embedding `embedding` of its field. Roots are sorted by (real part,
/// imaginary part). Each disc contains exactly one root.
struct RootIsolation {
    std::vector<RootEnclosure> roots;
    int precision_bits = 0;
};

RootIsolation isolate_roots(const Polynomial& f, int embedding = 0);

/// M(f) = |a_d| prod max(1, |alpha_j|) within eps.
long double mahler_measure(const Polynomial& f, long double eps = 1e-12L);

/// An algebraic number given by its primitive integer minimal polynomial over Q
/// and the index of a root in the canonical (real, imaginary) ordering.
class AlgebraicNumber {
public:
    static AlgebraicNumber rational(const Rational& q);
    /// Normalizes f to its primitive part. Throws NotIrreducible when f has a
    /// rational root (this settles irreducibility up to degree 3).
    static AlgebraicNumber from_min_poly(const Polynomial& f, int root_index);
    /// Root of a x^2 + b x + c; index 0 takes -sqrt(disc), index 1 +sqrt(disc).
    static AlgebraicNumber quadratic(long a, long b, long c, int root_index);

    const Polynomial& min_poly() const noexcept { return min_poly_; }
    int degree() const noexcept { return min_poly_.degree(); }
    int root_index() const noexcept { return root_index_; }
    const RootEnclosure& approx() const noexcept { return approx_; }

    /// The number as an element of Q(alpha) when the degree is at most 2.
    NumberField natural_field() const;
    FieldElement as_field_element() const;
    AlgebraicNumber conjugate() const;

    std::string describe() const;

    friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
        return x.min_poly_ == y.min_poly_ && x.root_index_ == y.root_index_;
    }

private:
    Polynomial min_poly_;
    int root_index_ = 0;
    RootEnclosure approx_;
};

/// Whether f over Q has a rational root.
bool has_rational_root(const Polynomial& f);

struct HeightValue {
    long double H = 1;  // multiplicative
    long double h = 0;  // logarithmic
};

/// Relative heights H_K(P), h_K(P) of a projective point with coordinates in K.
HeightValue height_point(const NumberField& field, const std::vector<FieldElement>& coords);

/// Absolute logarithmic height of alpha in K, i.e. h_K([1 : alpha]) / [K : Q].
long double absolute_height(const NumberField& field, const FieldElement& alpha);

/// (1/deg) log M(min_poly).
long double absolute_height(const AlgebraicNumber& alpha);

/// Place-sum route over Q(alpha); degree at most 2.
long double absolute_height_place_sum(const AlgebraicNumber& alpha);

/// Absolute height of the coefficient point [a_0 : ... : a_d].
HeightValue height_polynomial(const Polynomial& f);

/// A(d) = d log d over Q, (2d - 1) log d otherwise.
long double A_of(int d, bool base_is_rationals);

struct DiscriminantReport {
    int degree = 0;
    FieldElement discriminant;
    long double mahler = 0;
    long double part_i_lhs = 0;  // |D(f)|
    long double part_i_rhs = 0;  // d^d M(f)^(2d-2)
    bool part_i_pass = false;
    bool part_ii_checked = false;
    std::string part_ii_skip_reason;
    long double part_ii_lhs = 0;  // h(D(f))
    long double part_ii_rhs = 0;  // 2(d-1) h(f) + A(d)
    bool part_ii_pass = true;
    // the same bound with h(f) read as log M(f); follows from part (i)
    long double part_ii_mahler_rhs = 0;
    bool part_ii_mahler_pass = true;
};

/// Both discriminant inequalities. Over Q the polynomial is first replaced by
/// its primitive integer part, which fixes the scaling of D(f). Part (ii) with
/// the coefficient height is not a theorem: -99x^2 + 100x + 100 breaks it.
DiscriminantReport check_discriminant_bounds(const Polynomial& f);

}  // namespace powval
