#pragma once

// Bounded-height points of degree <= 2 over Q, point counts against the
// Schanuel band, and brute-force search for polynomials with s-powerful
// values along a prefix.

#include "powval/bounds.hpp"
#include "powval/heights.hpp"
#include "powval/powerful.hpp"
#include "powval/sequences.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace powval {

/// Points of P^1 of degree at most `degree` over Q with multiplicative height <= X.
struct EnumerationBudget {
    Rational height_cap = 1;  // X
    int degree = 1;
    std::uint64_t max_points = 20'000'000;  // guard on the candidate box
};

/// Degree 1: the point [a : b] (a/b, or infinity when b = 0).
/// Degree 2: root `root_index` of a x^2 + b x + c.
struct PointRecord {
    int degree = 1;
    Integer a, b, c;
    int root_index = 0;
    long double height = 0;  // absolute logarithmic height

    bool at_infinity() const { return degree == 1 && b == 0; }
    AlgebraicNumber to_algebraic() const;
    std::string describe() const;
    friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

/// Canonical order: height, then degree, then (a, b, c, root_index).
std::vector<PointRecord> enumerate_points(const EnumerationBudget& budget);

struct CountReport {
    std::uint64_t count = 0;
    long double lower = 0;  // band at T = X
    long double upper = 0;
    long double b_kr = 0;
    long double ratio = 0;    // count / b_kr
    long double density = 0;  // count / X^(r(r+1))
};
CountReport count_points(const EnumerationBudget& budget, long double c5 = 0, long double c6 = 0);

struct SearchBox {
    int r = 2;
    int s = 2;
    SequencePrefix prefix;
    long coeff_bound = 1;
    std::uint64_t max_candidates = 50'000'000;
};

/// Degree-r polynomials over Q whose coefficients are n/d with |n| <= bound and
/// 1 <= d <= bound, with every multiplicity below s and f(b_i) s-powerful (and
/// nonzero) at every prefix term. One polynomial per class modulo s-th-power
/// scalars: the canonical representative when it satisfies the predicate itself,
/// otherwise the smallest member found. Sorted by coefficients, leading first.
std::vector<Polynomial> search_polynomials(const SearchBox& box);

/// The predicate used by the search, evaluated from scratch.
bool satisfies_search_predicate(const Polynomial& f, const std::vector<FieldElement>& prefix, int s);

}  // namespace powval
