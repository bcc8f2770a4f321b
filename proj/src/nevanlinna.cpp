#include "powval/nevanlinna.hpp"

#include "powval/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

namespace powval {

namespace {

std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_violations{0};

constexpr long double kTol = 1e-9L;

long double log_norm(const PrimeIdeal& p) { return log_abs(p.residue_norm); }

// log+ of 1/||beta||_v at an infinite place.
long double log_plus_inverse(const NumberField& K, const FieldElement& beta, const Place& v) {
    return std::max(0.0L, -log_local_value(K, beta, v));
}

long double log_plus(const NumberField& K, const FieldElement& beta, const Place& v) {
    return std::max(0.0L, log_local_value(K, beta, v));
}

// Everything in K with S already lifted to K; `scale` = 1/[K:k].
NevanlinnaReport decompose_in(const PlaceSet& S, const FieldElement& alpha, const std::vector<FieldElement>& targets,
                              long double scale) {
    const NumberField& K = S.field();
    NevanlinnaReport r;
    if (!alpha.is_zero()) {
        for (const auto& v : infinite_places(K)) r.m_S += log_plus(K, alpha, v);
        for (const auto& pf : factor_element(K, alpha)) {
            if (pf.exponent >= 0) continue;
            const long double t = -pf.exponent * log_norm(pf.prime);
            (S.contains(pf.prime) ? r.m_S : r.N_S) += t;
        }
    }
    for (const auto& b : targets) {
        const FieldElement beta = alpha - b;
        if (beta.is_zero()) throw Error(Errc::TargetEqualsPoint, "target " + b.literal() + " equals the point");
        TargetComponents tc{b, 0, 0, 0};
        for (const auto& v : infinite_places(K)) tc.m_S += log_plus_inverse(K, beta, v);
        for (const auto& pf : factor_element(K, beta)) {
            if (pf.exponent <= 0) continue;
            const long double l = log_norm(pf.prime);
            if (S.contains(pf.prime)) {
                tc.m_S += pf.exponent * l;
            } else {
                tc.N_S += pf.exponent * l;
                tc.N_S1 += l;
            }
        }
        tc.m_S *= scale;
        tc.N_S *= scale;
        tc.N_S1 *= scale;
        ++g_checked;
        if (tc.N_S1 > tc.N_S) ++g_violations;
        r.targets.push_back(std::move(tc));
    }
    r.m_S *= scale;
    r.N_S *= scale;
    r.h = r.m_S + r.N_S;
    return r;
}

void require_rational_targets(const std::vector<FieldElement>& targets) {
    for (const auto& b : targets)
        if (!b.is_rational()) throw Error(Errc::FieldMismatch, "targets must lie in the base field Q");
}

void require_distinct(const std::vector<FieldElement>& targets) {
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j])
                throw Error(Errc::DuplicateTargets, "target " + targets[i].literal() + " is repeated");
}

long double max_target_height(const NumberField& k, const std::vector<FieldElement>& targets) {
    long double B = 0;
    for (const auto& b : targets) B = std::max(B, height_point(k, {k.one(), b}).h);
    return B;
}

VojtaReport assemble(const NevanlinnaReport& rep, long double d_k, long double B, int n, const VojtaParams& p) {
    VojtaReport v;
    v.form = p.form;
    v.h = rep.h;
    v.d_k = d_k;
    v.c = p.c;
    v.eps = p.eps;
    v.B = B;
    v.n = n;
    v.d = p.d;
    v.c_prime = n * (B + p.d * std::log(2.0L));
    for (const auto& t : rep.targets) {
        switch (p.form) {
            case VojtaForm::Original: v.sigma += t.m_S; break;
            case VojtaForm::Counting: v.sigma += t.N_S; break;
            case VojtaForm::Truncated: v.sigma += t.N_S1; break;
        }
    }
    if (p.form == VojtaForm::Original) {
        v.lhs = v.sigma;
        v.rhs = (2 + p.eps) * v.h + d_k + p.c;
    } else {
        v.lhs = (n - 2 - p.eps) * v.h;
        v.rhs = d_k + v.sigma + p.c + v.c_prime;
    }
    v.holds = v.lhs <= v.rhs;
    return v;
}

void validate_params(const VojtaParams& p) {
    if (p.d < 2) throw Error(Errc::BadRange, "d must be >= 2");
    if (!(p.eps > 0)) throw Error(Errc::BadRange, "eps must be positive");
}

struct Normalized {
    Polynomial f;
    AlgebraicNumber alpha;
};

// Primitive, irreducible factors of degree <= 2, pairwise distinct.
std::vector<Normalized> normalize_factors(const std::vector<Polynomial>& factors) {
    std::vector<Normalized> out;
    for (const auto& f : factors) {
        if (!f.has_rational_coeffs()) throw Error(Errc::UnsupportedField, "factors must have coefficients in Q");
        if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "constant factor");
        if (f.degree() > 2) throw Error(Errc::UnsupportedDegree, "factors must have degree <= 2");
        const Polynomial g = primitive_part(f);
        if (g.degree() == 2 && has_rational_root(g)) throw Error(Errc::NotIrreducible, g.pretty() + " is reducible");
        for (const auto& prev : out)
            if (prev.f == g) throw Error(Errc::DuplicateFactors, g.pretty() + " appears twice");
        out.push_back({g, AlgebraicNumber::from_min_poly(g, 0)});
    }
    return out;
}

}  // namespace

PlaceSet::PlaceSet(NumberField field, std::vector<PrimeIdeal> finite) : field_(std::move(field)), finite_(std::move(finite)) {
    std::sort(finite_.begin(), finite_.end());
    finite_.erase(std::unique(finite_.begin(), finite_.end()), finite_.end());
}

PlaceSet PlaceSet::above(const NumberField& field, const std::vector<Integer>& rational_primes) {
    std::vector<PrimeIdeal> ps;
    for (const auto& p : rational_primes) {
        if (p < 2 || factor_integer(p).size() != 1 || factor_integer(p)[0].second != 1)
            throw Error(Errc::BadRange, to_string(p) + " is not prime");
        for (auto& P : primes_above(field, p)) ps.push_back(P);
    }
    return PlaceSet(field, std::move(ps));
}

bool PlaceSet::contains(const PrimeIdeal& p) const { return std::binary_search(finite_.begin(), finite_.end(), p); }

long double PlaceSet::a_S() const {
    long double a = 0;
    for (const auto& p : finite_) a += log_norm(p);
    return a;
}

PlaceSet PlaceSet::lift(const NumberField& extension) const {
    if (extension == field_) return *this;
    if (!field_.is_rationals()) throw Error(Errc::UnsupportedField, "can only lift place sets from Q");
    std::vector<PrimeIdeal> ps;
    for (const auto& p : finite_)
        for (auto& P : primes_above(extension, p.p)) ps.push_back(P);
    return PlaceSet(extension, std::move(ps));
}

NevanlinnaReport decompose(const PlaceSet& S, const FieldElement& alpha, const std::vector<FieldElement>& targets) {
    return decompose_in(S, alpha, targets, 1.0L);
}

NevanlinnaReport decompose(const PlaceSet& S, const AlgebraicNumber& alpha, const std::vector<FieldElement>& targets) {
    if (!S.field().is_rationals()) throw Error(Errc::UnsupportedField, "algebraic points need base field Q");
    require_rational_targets(targets);
    const NumberField K = alpha.natural_field();
    return decompose_in(S.lift(K), alpha.as_field_element(), targets, 1.0L / alpha.degree());
}

TruncationAudit truncation_audit() { return {g_checked.load(), g_violations.load()}; }

FirstMainCheck first_main_check(const PlaceSet& S, const FieldElement& alpha) {
    FirstMainCheck c;
    const NumberField& k = S.field();
    c.h = height_point(k, {k.one(), alpha}).h;
    c.m_plus_n = decompose(S, alpha, {}).h;
    c.pass = std::abs(c.h - c.m_plus_n) <= kTol;
    return c;
}

FirstMainCheck first_main_check(const PlaceSet& S, const AlgebraicNumber& alpha) {
    FirstMainCheck c;
    c.h = absolute_height(alpha);
    c.m_plus_n = decompose(S, alpha, {}).h;
    c.pass = std::abs(c.h - c.m_plus_n) <= kTol;
    return c;
}

long double log_discriminant(const AlgebraicNumber& alpha) {
    if (alpha.degree() == 1) return 0;
    if (alpha.degree() != 2) throw Error(Errc::UnsupportedDegree, "logarithmic discriminant needs degree <= 2");
    return 0.5L * std::log(static_cast<long double>(std::labs(alpha.natural_field().discriminant())));
}

InequalityCheck field_discriminant_check(const AlgebraicNumber& alpha) {
    if (alpha.degree() != 2) throw Error(Errc::UnsupportedDegree, "discriminant bound is checked in degree 2");
    InequalityCheck c;
    c.lhs = log_discriminant(alpha);
    c.rhs = 2 * (alpha.degree() - 1) * absolute_height(alpha) + A_of(alpha.degree(), true);
    c.pass = c.lhs <= c.rhs + kTol;
    return c;
}

const char* form_name(VojtaForm form) {
    switch (form) {
        case VojtaForm::Original: return "original";
        case VojtaForm::Counting: return "counting";
        case VojtaForm::Truncated: return "truncated";
    }
    return "?";
}

VojtaForm parse_form(const std::string& s) {
    if (s == "original") return VojtaForm::Original;
    if (s == "counting") return VojtaForm::Counting;
    if (s == "truncated") return VojtaForm::Truncated;
    throw Error(Errc::ParseError, "unknown form '" + s + "'");
}

VojtaReport vojta_report(const PlaceSet& S, const std::vector<FieldElement>& targets, const FieldElement& alpha,
                         const VojtaParams& params) {
    validate_params(params);
    require_distinct(targets);
    const auto rep = decompose(S, alpha, targets);
    return assemble(rep, 0, max_target_height(S.field(), targets), static_cast<int>(targets.size()), params);
}

VojtaReport vojta_report(const PlaceSet& S, const std::vector<FieldElement>& targets, const AlgebraicNumber& alpha,
                         const VojtaParams& params) {
    validate_params(params);
    require_distinct(targets);
    if (alpha.degree() > params.d) throw Error(Errc::BadRange, "point degree exceeds d");
    const auto rep = decompose(S, alpha, targets);
    return assemble(rep, log_discriminant(alpha), max_target_height(S.field(), targets),
                    static_cast<int>(targets.size()), params);
}

std::vector<DistanceHeightCheck> distance_height_check(const PlaceSet& S, const AlgebraicNumber& alpha,
                                    const std::vector<FieldElement>& targets) {
    const auto rep = decompose(S, alpha, targets);
    const NumberField K = alpha.natural_field();
    const FieldElement a = alpha.as_field_element();
    std::vector<DistanceHeightCheck> out;
    for (const auto& t : rep.targets) {
        DistanceHeightCheck e;
        e.b = t.b;
        e.lhs = rep.h;
        const long double hb = height_point(NumberField::rationals(), {1, t.b}).h;
        e.rhs = t.m_S + t.N_S + hb + alpha.degree() * std::log(2.0L);
        e.holds = e.lhs <= e.rhs + kTol;
        e.identity_gap = std::abs(t.m_S + t.N_S - absolute_height(K, a - t.b));
        out.push_back(e);
    }
    return out;
}

std::vector<AlgebraicNumber> exceptional_scan(const PlaceSet& S, const std::vector<FieldElement>& targets,
                                              const VojtaParams& params, const Rational& height_cap) {
    if (!S.field().is_rationals()) throw Error(Errc::UnsupportedField, "exceptional scan runs over Q");
    if (height_cap <= 0) throw Error(Errc::BadRange, "height cap must be positive");
    if (params.d > 2) throw Error(Errc::UnsupportedDegree, "exceptional scan supports d <= 2");
    validate_params(params);
    require_distinct(targets);
    require_rational_targets(targets);
    if (height_cap < 1) return {};
    EnumerationBudget budget;
    budget.height_cap = height_cap;
    budget.degree = params.d;
    budget.max_points = 5'000'000;
    std::vector<PointRecord> pts;
    try {
        pts = enumerate_points(budget);
    } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded) throw Error(Errc::CapTooLarge, "height cap too large for the scan");
        throw;
    }
    const std::set<Rational> excluded = [&] {
        std::set<Rational> s;
        for (const auto& b : targets) s.insert(b.a());
        return s;
    }();
    std::vector<AlgebraicNumber> out;
    for (const auto& pt : pts) {
        if (pt.at_infinity()) continue;
        if (pt.degree == 1 && excluded.count(Rational(pt.a, pt.b))) continue;
        const AlgebraicNumber alpha = pt.to_algebraic();
        VojtaParams p = params;
        p.form = VojtaForm::Truncated;
        if (!vojta_report(S, targets, alpha, p).holds) out.push_back(alpha);
    }
    return out;
}

InequalityCheck radical_discriminant_check(const std::vector<Polynomial>& factors) {
    const auto fs = normalize_factors(factors);
    Polynomial g = Polynomial::rational({1L});
    long double sum_h = 0;
    for (const auto& f : fs) {
        g *= f.f;
        sum_h += f.f.degree() * absolute_height(f.alpha);
    }
    const int d = g.degree();
    if (d < 2) throw Error(Errc::DegreeTooSmall, "total degree must be >= 2");
    InequalityCheck c;
    c.lhs = rational_height(discriminant(g).a());
    c.rhs = 2 * (d - 1) * sum_h + 4.0L * d * (d - 1) + A_of(d, true);
    c.pass = c.lhs <= c.rhs + kTol;
    return c;
}

InequalityCheck truncated_count_check(const FactoredPolynomial& f, const std::vector<FieldElement>& targets, const PlaceSet& S,
                              int s) {
    if (s < 2) throw Error(Errc::BadRange, "s must be >= 2");
    if (!S.field().is_rationals()) throw Error(Errc::UnsupportedField, "lemma check runs over Q");
    require_rational_targets(targets);
    require_distinct(targets);
    std::vector<Polynomial> polys;
    for (const auto& [p, mult] : f.factors) {
        if (mult < 1) throw Error(Errc::BadRange, "multiplicities must be >= 1");
        polys.push_back(p);
    }
    const auto fs = normalize_factors(polys);
    if (fs.empty()) throw Error(Errc::DegreeTooSmall, "no factors");
    int d = 0, r = 0, s_plus = 0;
    long double sum_h = 0, lhs = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        const int dj = fs[j].f.degree(), sj = f.factors[j].second;
        for (const auto& b : targets)
            if (fs[j].f(b).is_zero())
                throw Error(Errc::TargetEqualsPoint, "target " + b.literal() + " is a root of " + fs[j].f.pretty());
        d += dj;
        r += sj * dj;
        s_plus = std::max(s_plus, sj);
        sum_h += dj * absolute_height(fs[j].alpha);
        for (const auto& t : decompose(S, fs[j].alpha, targets).targets) lhs += dj * t.N_S1;
    }
    const long double M = static_cast<long double>(targets.size());
    const long double B = max_target_height(S.field(), targets);
    const long double Ar = r >= 2 ? A_of(r, true) : 0.0L;
    const long double c2 = M * (B + std::log(2.0L)) / s + S.a_S() + Ar + 4.0L * r * (r - 1);
    InequalityCheck c;
    c.lhs = lhs;
    c.rhs = (M * s_plus / s + d * (2.0L * d - 1)) * sum_h + r * c2;
    c.pass = c.lhs <= c.rhs + kTol;
    return c;
}

}  // namespace powval
