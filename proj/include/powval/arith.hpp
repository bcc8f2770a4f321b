#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powval {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Errc {
    NotSquarefree,
    DisallowedValue,
    UnsupportedDegree,
    UnsupportedField,
    BadPrecision,
    ZeroElement,
    FactorizationTooLarge,
    AllZero,
    ZeroPolynomial,
    RootCertificationFailure,
    DegreeTooSmall,
    ConstantPolynomial,
    TargetEqualsPoint,
    DuplicateTargets,
    CapTooLarge,
    NotIrreducible,
    DuplicateFactors,
    BadRange,
    SizeMismatch,
    DuplicateSequenceTerms,
    ZeroTerm,
    NotPeriodic,
    PrefixTooShort,
    DegreeMismatch,
    BudgetExceeded,
    BoxTooLarge,
    FieldMismatch,
    ParseError,
};

const char* errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Budget exhaustion (as opposed to invalid input); the CLI maps these to exit 3.
bool is_budget_error(Errc code) noexcept;

struct FactorBudget {
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t rho_iterations = 2'000'000;
};

/// Prime factorization of |n| in increasing prime order. n must be nonzero.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n, const FactorBudget& budget = {});

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& q, const Integer& p);
int valuation(const Integer& n, const Integer& p);

bool is_squarefree(const Integer& n);

/// log|x| for a nonzero rational without overflow.
long double log_abs(const Rational& q);
long double log_abs(const Integer& n);

/// log max(|a|, |b|) of the reduced fraction, i.e. the Weil height of q.
long double rational_height(const Rational& q);

Rational rational_pow(const Rational& q, long e);

/// Largest r with r^2 <= n when n >= 0; returns (r, r*r == n).
std::pair<Integer, bool> isqrt_exact(const Integer& n);

std::string to_string(const Rational& q);

}  // namespace powval
