#pragma once

// Proximity and counting functions over k and over quadratic points, the
// first-main-theorem identity, Vojta-type inequality evaluators and the two
// counting lemmas used in the finiteness argument.
//
// Normalization: every quantity is relative to the base field k, i.e. sums of
// log+ ||.||_v over the places of k (or over Q(alpha), divided by
// [Q(alpha) : k], for quadratic points). Over k = Q this is the absolute height.

#include "powval/field.hpp"
#include "powval/heights.hpp"
#include "powval/polynomial.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace powval {

/// S: all infinite places of the field plus the listed finite primes.
class PlaceSet {
public:
    explicit PlaceSet(NumberField field, std::vector<PrimeIdeal> finite = {});
    /// S = infinite places plus every prime above each listed rational prime.
    static PlaceSet above(const NumberField& field, const std::vector<Integer>& rational_primes);

    const NumberField& field() const noexcept { return field_; }
    const std::vector<PrimeIdeal>& finite_places() const noexcept { return finite_; }
    bool contains(const PrimeIdeal& p) const;
    /// a(S) = sum over finite places in S of log #(O_k / p).
    long double a_S() const;
    /// The finite places of K above this set, for K containing the base field.
    PlaceSet lift(const NumberField& extension) const;

private:
    NumberField field_;
    std::vector<PrimeIdeal> finite_;
};

struct TargetComponents {
    FieldElement b;
    long double m_S = 0;   // m_S(b, alpha)
    long double N_S = 0;   // N_S(b, alpha)
    long double N_S1 = 0;  // truncated N_S^(1)(b, alpha)
};

struct NevanlinnaReport {
    long double h = 0;  // m_S + N_S
    long double m_S = 0;
    long double N_S = 0;
    std::vector<TargetComponents> targets;
};

NevanlinnaReport decompose(const PlaceSet& S, const FieldElement& alpha, const std::vector<FieldElement>& targets);
/// Quadratic (or rational) alpha over k = Q; computed in Q(alpha).
NevanlinnaReport decompose(const PlaceSet& S, const AlgebraicNumber& alpha, const std::vector<FieldElement>& targets);

/// Number of target evaluations made by decompose and how many broke N^(1) <= N.
struct TruncationAudit {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
};
TruncationAudit truncation_audit();

struct FirstMainCheck {
    long double h = 0;       // height by the independent place-sum / Mahler route
    long double m_plus_n = 0;
    bool pass = false;
};
FirstMainCheck first_main_check(const PlaceSet& S, const FieldElement& alpha);
FirstMainCheck first_main_check(const PlaceSet& S, const AlgebraicNumber& alpha);

/// d_Q(alpha): 0 in degree 1, (1/2) log |disc Q(alpha)| in degree 2.
long double log_discriminant(const AlgebraicNumber& alpha);

struct InequalityCheck {
    long double lhs = 0;
    long double rhs = 0;
    bool pass = false;
};

/// d_Q(alpha) <= 2(d-1) h(alpha) + A(d) for quadratic alpha.
InequalityCheck field_discriminant_check(const AlgebraicNumber& alpha);

enum class VojtaForm { Original, Counting, Truncated };
const char* form_name(VojtaForm form);
VojtaForm parse_form(const std::string& s);

struct VojtaReport {
    VojtaForm form = VojtaForm::Truncated;
    long double lhs = 0;
    long double rhs = 0;
    bool holds = false;
    // components
    long double h = 0;
    long double d_k = 0;
    long double sigma = 0;  // sum of m_S, N_S or N_S^(1) over the targets
    long double c = 0;
    long double c_prime = 0;  // n (B + d log 2)
    long double eps = 0;
    long double B = 0;
    int n = 0;
    int d = 0;
};

struct VojtaParams {
    long double eps = 0.5L;
    long double c = 0;
    int d = 2;
    VojtaForm form = VojtaForm::Truncated;
};

VojtaReport vojta_report(const PlaceSet& S, const std::vector<FieldElement>& targets, const FieldElement& alpha,
                         const VojtaParams& params);
VojtaReport vojta_report(const PlaceSet& S, const std::vector<FieldElement>& targets, const AlgebraicNumber& alpha,
                         const VojtaParams& params);

/// Per target: h(alpha) <= m_S(b,alpha) + N_S(b,alpha) + h(b) + [k(alpha):Q] log 2,
/// together with the identity m_S(b,alpha) + N_S(b,alpha) = h(alpha - b).
struct DistanceHeightCheck {
    FieldElement b;
    long double lhs = 0;
    long double rhs = 0;
    bool holds = false;
    long double identity_gap = 0;  // |m_S(b,alpha) + N_S(b,alpha) - h(alpha - b)|
};
std::vector<DistanceHeightCheck> distance_height_check(const PlaceSet& S, const AlgebraicNumber& alpha, const std::vector<FieldElement>& targets);

/// Points of degree <= d over Q with absolute height <= log(height_cap) that violate
/// the truncated inequality, in canonical enumeration order.
std::vector<AlgebraicNumber> exceptional_scan(const PlaceSet& S, const std::vector<FieldElement>& targets,
                                              const VojtaParams& params, const Rational& height_cap);

/// h(D(g)) <= 2(d-1) sum_j h_{k_j}(alpha_j) + 4d(d-1) + A(d) for g = prod f_j,
/// f_j distinct irreducibles over Q of degree <= 2.
InequalityCheck radical_discriminant_check(const std::vector<Polynomial>& factors);

struct FactoredPolynomial {
    std::vector<std::pair<Polynomial, int>> factors;  // (f_j irreducible, s_j)
};

/// sum_j sum_i d_j N_S^(1)(b_i, alpha_j)
///   <= [M s+/s + d(2d-1)] sum_j h_{k_j}(alpha_j) + r c_2, with M = #targets.
InequalityCheck truncated_count_check(const FactoredPolynomial& f, const std::vector<FieldElement>& targets, const PlaceSet& S,
                              int s);

}  // namespace powval
