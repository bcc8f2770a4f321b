#include "powval/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace powval {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotSquarefree: return "NotSquarefree";
        case Errc::DisallowedValue: return "DisallowedValue";
        case Errc::UnsupportedDegree: return "UnsupportedDegree";
        case Errc::UnsupportedField: return "UnsupportedField";
        case Errc::BadPrecision: return "BadPrecision";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::FactorizationTooLarge: return "FactorizationTooLarge";
        case Errc::AllZero: return "AllZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::RootCertificationFailure: return "RootCertificationFailure";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::TargetEqualsPoint: return "TargetEqualsPoint";
        case Errc::DuplicateTargets: return "DuplicateTargets";
        case Errc::CapTooLarge: return "CapTooLarge";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::DuplicateFactors: return "DuplicateFactors";
        case Errc::BadRange: return "BadRange";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::DuplicateSequenceTerms: return "DuplicateSequenceTerms";
        case Errc::ZeroTerm: return "ZeroTerm";
        case Errc::NotPeriodic: return "NotPeriodic";
        case Errc::PrefixTooShort: return "PrefixTooShort";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::BoxTooLarge: return "BoxTooLarge";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

bool is_budget_error(Errc code) noexcept {
    return code == Errc::BudgetExceeded || code == Errc::CapTooLarge || code == Errc::BoxTooLarge ||
           code == Errc::FactorizationTooLarge || code == Errc::RootCertificationFailure;
}

namespace {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho. Returns a nontrivial factor of the composite n.
Integer rho_factor(const Integer& n, std::uint64_t& budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        std::uint64_t r = 1;
        constexpr std::uint64_t block = 128;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                const std::uint64_t steps = std::min(block, r - k);
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                if (budget < steps) throw Error(Errc::FactorizationTooLarge, "rho budget exhausted on " + n.get_str());
                budget -= steps;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(const Integer& n, std::uint64_t& budget, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = rho_factor(n, budget);
    split_large(d, budget, out);
    split_large(n / d, budget, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n, const FactorBudget& budget) {
    if (n == 0) throw Error(Errc::ZeroElement, "cannot factor 0");
    Integer m = abs(n);
    std::vector<std::pair<Integer, int>> out;
    for (std::uint32_t p : small_primes()) {
        if (p > budget.trial_limit) break;
        if (Integer(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            out.emplace_back(Integer(p), e);
        }
    }
    if (m > 1) {
        std::map<Integer, int> rest;
        std::uint64_t left = budget.rho_iterations;
        split_large(m, left, rest);
        for (auto& [p, e] : rest) out.emplace_back(p, e);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw Error(Errc::ZeroElement, "valuation of 0");
    Integer m = n;
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

int valuation(const Rational& q, const Integer& p) {
    if (q == 0) throw Error(Errc::ZeroElement, "valuation of 0");
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

long double log_abs(const Integer& n) {
    if (n == 0) throw Error(Errc::ZeroElement, "log of 0");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) + static_cast<long double>(exp) * std::log(2.0L);
}

long double log_abs(const Rational& q) { return log_abs(Integer(q.get_num())) - log_abs(Integer(q.get_den())); }

long double rational_height(const Rational& q) {
    if (q == 0) return 0.0L;
    Integer a = abs(Integer(q.get_num()));
    const Integer& b = q.get_den();
    return log_abs(a > b ? a : b);
}

Rational rational_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw Error(Errc::ZeroElement, "negative power of 0");
        Rational inv = 1 / q;
        return rational_pow(inv, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    out.canonicalize();
    return out;
}

std::pair<Integer, bool> isqrt_exact(const Integer& n) {
    if (n < 0) return {Integer(0), false};
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return {r, r * r == n};
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace powval
