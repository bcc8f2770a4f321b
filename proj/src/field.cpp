#include "powval/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace powval {

// ---------------------------------------------------------------- NumberField

NumberField NumberField::quadratic(long d) {
    if (d == 0 || d == 1) throw Error(Errc::DisallowedValue, "d must not be 0 or 1, got " + std::to_string(d));
    if (!is_squarefree(Integer(d))) throw Error(Errc::NotSquarefree, std::to_string(d) + " is not squarefree");
    return NumberField(d);
}

long NumberField::discriminant() const noexcept {
    if (d_ == 0) return 1;
    return omega_is_half() ? d_ : 4 * d_;
}

FieldElement NumberField::element(const Rational& a, const Rational& b) const {
    if (d_ == 0 && b != 0) throw Error(Errc::FieldMismatch, "irrational part given for an element of Q");
    return FieldElement(a, b, d_);
}

FieldElement NumberField::zero() const { return FieldElement(0, 0, d_); }
FieldElement NumberField::one() const { return FieldElement(1, 0, d_); }

std::string NumberField::literal() const { return d_ == 0 ? "Q" : "Q(sqrt," + std::to_string(d_) + ")"; }

NumberField make_field(long d) { return NumberField::quadratic(d); }

NumberField make_field(std::string_view literal) {
    if (literal == "Q" || literal == "q") return NumberField::rationals();
    constexpr std::string_view prefix = "Q(sqrt,";
    if (literal.size() > prefix.size() + 1 && literal.substr(0, prefix.size()) == prefix && literal.back() == ')') {
        std::string body(literal.substr(prefix.size(), literal.size() - prefix.size() - 1));
        try {
            std::size_t used = 0;
            long d = std::stol(body, &used);
            if (used == body.size()) return NumberField::quadratic(d);
        } catch (const std::logic_error&) {
        }
    }
    throw Error(Errc::ParseError, "bad field literal '" + std::string(literal) + "' (expected Q or Q(sqrt,<d>))");
}

// --------------------------------------------------------------- FieldElement

FieldElement::FieldElement(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 0 && b_ != 0) throw Error(Errc::FieldMismatch, "irrational part without a radicand");
}

long FieldElement::unify(const FieldElement& o) const {
    if (d_ == o.d_) return d_;
    if (o.d_ == 0 && o.b_ == 0) return d_;
    if (d_ == 0 && b_ == 0) return o.d_;
    throw Error(Errc::FieldMismatch, "elements of Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " + std::to_string(o.d_) + ")");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    d_ = unify(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    d_ = unify(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    d_ = unify(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(Errc::ZeroElement, "inverse of 0");
    Rational n = norm();
    return FieldElement(a_ / n, -b_ / n, d_);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    d_ = unify(o);
    return *this *= o.inverse();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result(1, 0, d_), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string FieldElement::literal() const {
    std::string out = a_.get_str();
    if (b_ == 0) return out;
    const std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string irr = b_ == 1 ? root : (b_ == -1 ? "-" + root : b_.get_str() + "*" + root);
    if (a_ == 0) return irr;
    return out + (b_ > 0 ? "+" : "") + irr;
}

namespace {

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw Error(Errc::ParseError, "empty rational");
    std::string text(s);
    if (text.front() == '+') text.erase(0, 1);
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw Error(Errc::ParseError, "bad rational '" + std::string(s) + "'");
    Rational q;
    if (q.set_str(text, 10) != 0) throw Error(Errc::ParseError, "bad rational '" + std::string(s) + "'");
    if (q.get_den() == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

}  // namespace

FieldElement parse_element(const NumberField& field, std::string_view literal) {
    std::string_view s = literal;
    auto pos = s.find("sqrt(");
    if (pos == std::string_view::npos) return field.element(parse_rational(s));

    // split "<a><sign><c/e>*sqrt(d)" or "<sign><c/e>*sqrt(d)"
    auto close = s.find(')', pos);
    if (close == std::string_view::npos || close + 1 != s.size()) throw Error(Errc::ParseError, "bad element '" + std::string(s) + "'");
    long d = 0;
    try {
        d = std::stol(std::string(s.substr(pos + 5, close - pos - 5)));
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad radicand in '" + std::string(s) + "'");
    }
    if (field.is_rationals() || d != field.d())
        throw Error(Errc::FieldMismatch, "sqrt(" + std::to_string(d) + ") is not in " + field.literal());

    std::string_view head = s.substr(0, pos);  // "<a>+<c/e>*" or "<c/e>*" or "<a>+" or ""
    Rational coeff = 1;
    if (!head.empty() && head.back() == '*') head.remove_suffix(1);
    else if (!head.empty() && head.back() != '+' && head.back() != '-')
        throw Error(Errc::ParseError, "bad element '" + std::string(s) + "'");

    // locate the sign splitting the rational part from the coefficient
    std::size_t split = std::string_view::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            split = i;
            break;
        }
    }
    Rational a = 0;
    std::string_view coeff_text = head;
    if (split != std::string_view::npos) {
        a = parse_rational(head.substr(0, split));
        coeff_text = head.substr(split);
    }
    if (coeff_text.empty() || coeff_text == "+") coeff = 1;
    else if (coeff_text == "-") coeff = -1;
    else coeff = parse_rational(coeff_text);
    return field.element(a, coeff);
}

// ---------------------------------------------------------------- Primes

const char* kind_name(PrimeIdeal::Kind kind) {
    switch (kind) {
        case PrimeIdeal::Kind::Rational: return "rational";
        case PrimeIdeal::Kind::Split: return "split";
        case PrimeIdeal::Kind::Inert: return "inert";
        case PrimeIdeal::Kind::Ramified: return "ramified";
    }
    return "?";
}

std::string Place::describe() const {
    switch (kind) {
        case Kind::Finite: {
            std::string s = "p=" + prime.p.get_str();
            if (prime.kind == PrimeIdeal::Kind::Split || prime.kind == PrimeIdeal::Kind::Ramified)
                s += ",root=" + prime.root.get_str();
            return s;
        }
        case Kind::Real: return "real" + std::to_string(index);
        case Kind::Complex: return "complex";
    }
    return "?";
}

PrimeIdeal::Kind splitting_kind(const NumberField& field, const Integer& p) {
    if (field.is_rationals()) return PrimeIdeal::Kind::Rational;
    Integer disc = field.discriminant();
    int k = mpz_kronecker(disc.get_mpz_t(), p.get_mpz_t());
    if (k == 0) return PrimeIdeal::Kind::Ramified;
    return k > 0 ? PrimeIdeal::Kind::Split : PrimeIdeal::Kind::Inert;
}

namespace {

Integer mod(const Integer& a, const Integer& p) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

Integer pow_mod(const Integer& b, const Integer& e, const Integer& p) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
}

// Tonelli-Shanks; a must be a nonzero quadratic residue mod the odd prime p.
Integer sqrt_mod(const Integer& a_in, const Integer& p) {
    Integer a = mod(a_in, p);
    if (a == 0) return 0;
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Integer c = pow_mod(z, q, p);
    Integer x = pow_mod(a, (q + 1) / 2, p);
    Integer t = pow_mod(a, q, p);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

Integer inverse_mod(const Integer& a, const Integer& p) {
    Integer r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

// Integral-basis coordinates: alpha = (X + Y omega) / n with n > 0 minimal.
struct IntegralForm {
    Integer x, y, n;
};

IntegralForm integral_form(const NumberField& field, const FieldElement& alpha) {
    Rational x = alpha.a(), y = alpha.b();
    if (field.omega_is_half()) {
        x = alpha.a() - alpha.b();
        y = 2 * alpha.b();
    }
    Integer n;
    mpz_lcm(n.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
    IntegralForm out;
    out.n = n;
    Rational X = x * n, Y = y * n;
    out.x = X.get_num();
    out.y = Y.get_num();
    return out;
}

Integer integral_norm(const NumberField& field, const Integer& x, const Integer& y) {
    if (field.is_rationals()) return x;
    if (field.omega_is_half()) return x * x + x * y - Integer((field.d() - 1) / 4) * y * y;
    return x * x - Integer(field.d()) * y * y;
}

int int_valuation_or_inf(const Integer& n, const Integer& p) {
    return n == 0 ? std::numeric_limits<int>::max() : valuation(n, p);
}

// ord_P of the algebraic integer x + y omega (nonzero).
int integral_valuation(const NumberField& field, const Integer& x, const Integer& y, const PrimeIdeal& P) {
    switch (P.kind) {
        case PrimeIdeal::Kind::Rational: return valuation(x, P.p);
        case PrimeIdeal::Kind::Inert: return std::min(int_valuation_or_inf(x, P.p), int_valuation_or_inf(y, P.p));
        case PrimeIdeal::Kind::Ramified: return valuation(integral_norm(field, x, y), P.p);
        case PrimeIdeal::Kind::Split: {
            int t = std::min(int_valuation_or_inf(x, P.p), int_valuation_or_inf(y, P.p));
            Integer scale;
            mpz_pow_ui(scale.get_mpz_t(), P.p.get_mpz_t(), static_cast<unsigned long>(t));
            Integer xs = x / scale, ys = y / scale;
            // at most one of the two conjugate primes divides (xs + ys omega)
            if (mod(xs + ys * P.root, P.p) != 0) return t;
            return t + valuation(integral_norm(field, xs, ys), P.p);
        }
    }
    return 0;
}

int ramification(const PrimeIdeal& P) { return P.kind == PrimeIdeal::Kind::Ramified ? 2 : 1; }

}  // namespace

std::vector<PrimeIdeal> primes_above(const NumberField& field, const Integer& p) {
    const auto kind = splitting_kind(field, p);
    if (kind == PrimeIdeal::Kind::Rational) return {PrimeIdeal{p, kind, 0, p}};
    if (kind == PrimeIdeal::Kind::Inert) return {PrimeIdeal{p, kind, 0, p * p}};
    const Integer d = field.d();
    if (kind == PrimeIdeal::Kind::Ramified) {
        Integer root = 0;
        if (field.omega_is_half()) root = (p + 1) / 2;  // omega = (1 + sqrt d)/2 with p | d
        else if (p == 2) root = mod(d, 2);
        return {PrimeIdeal{p, kind, root, p}};
    }
    std::vector<Integer> roots;
    if (field.omega_is_half()) {
        if (p == 2) roots = {0, 1};
        else {
            Integer s = sqrt_mod(d, p), half = inverse_mod(2, p);
            roots = {mod((1 + s) * half, p), mod((1 - s) * half, p)};
        }
    } else {
        Integer s = sqrt_mod(d, p);
        roots = {s, mod(-s, p)};
    }
    std::sort(roots.begin(), roots.end());
    return {PrimeIdeal{p, kind, roots[0], p}, PrimeIdeal{p, kind, roots[1], p}};
}

std::vector<Place> infinite_places(const NumberField& field) {
    if (field.is_rationals()) return {Place::real(0)};
    if (field.d() > 0) return {Place::real(0), Place::real(1)};
    return {Place::complex()};
}

std::vector<PrimeFactor> factor_element(const NumberField& field, const FieldElement& alpha, const FactorBudget& budget) {
    if (alpha.is_zero()) throw Error(Errc::ZeroElement, "factorization of 0");
    if (!alpha.is_rational() && alpha.d() != field.d()) throw Error(Errc::FieldMismatch, "element not in " + field.literal());
    const IntegralForm f = integral_form(field, alpha);
    const Integer norm = integral_norm(field, f.x, f.y);

    std::map<Integer, int> rational_primes;
    for (auto& [p, e] : factor_integer(norm, budget)) rational_primes[p] = 1;
    if (f.n != 1)
        for (auto& [p, e] : factor_integer(f.n, budget)) rational_primes[p] = 1;

    std::vector<PrimeFactor> out;
    for (auto& [p, unused] : rational_primes) {
        const int vn = f.n == 1 ? 0 : valuation(f.n, p);
        for (const auto& P : primes_above(field, p)) {
            int e = integral_valuation(field, f.x, f.y, P) - ramification(P) * vn;
            if (e != 0) out.push_back({P, e});
        }
    }
    return out;
}

int valuation(const NumberField& field, const FieldElement& alpha, const PrimeIdeal& prime) {
    if (alpha.is_zero()) throw Error(Errc::ZeroElement, "valuation of 0");
    const IntegralForm f = integral_form(field, alpha);
    const int vn = f.n == 1 ? 0 : valuation(f.n, prime.p);
    return integral_valuation(field, f.x, f.y, prime) - ramification(prime) * vn;
}

namespace {

long double log_sum(long double la, long double lb) {
    if (la < lb) std::swap(la, lb);
    return la + std::log1p(std::exp(lb - la));
}

// log|a + sign * b * sqrt(d)| for d > 0, avoiding cancellation.
long double log_abs_real_embedding(const Rational& a, const Rational& b, long d, int sign) {
    if (b == 0) return log_abs(a);
    const long double lb = log_abs(b) + 0.5L * std::log(static_cast<long double>(d));
    if (a == 0) return lb;
    const bool same_sign = (sgn(a) == sgn(b) * sign);
    if (same_sign) return log_sum(log_abs(a), lb);
    // |a + s b sqrt d| = |N| / |a - s b sqrt d|, the latter without cancellation
    const Rational n = a * a - b * b * d;
    return log_abs(n) - log_sum(log_abs(a), lb);
}

}  // namespace

long double log_local_value(const NumberField& field, const FieldElement& alpha, const Place& place) {
    if (alpha.is_zero()) throw Error(Errc::ZeroElement, "log of the local value of 0");
    switch (place.kind) {
        case Place::Kind::Finite: {
            const int e = valuation(field, alpha, place.prime);
            return -static_cast<long double>(e) * log_abs(place.prime.residue_norm);
        }
        case Place::Kind::Real:
            if (field.is_rationals()) return log_abs(alpha.a());
            return log_abs_real_embedding(alpha.a(), alpha.b(), field.d(), place.index == 0 ? 1 : -1);
        case Place::Kind::Complex: return log_abs(alpha.norm());
    }
    return 0;
}

long double local_value(const NumberField& field, const FieldElement& alpha, const Place& place) {
    if (alpha.is_zero()) return 0.0L;
    return std::exp(log_local_value(field, alpha, place));
}

std::complex<long double> embed(const FieldElement& alpha, int index) {
    const long double a = alpha.a().get_d();
    if (alpha.b() == 0) return {a, 0.0L};
    const long double b = alpha.b().get_d();
    const long double r = std::sqrt(std::fabs(static_cast<long double>(alpha.d())));
    if (alpha.d() > 0) return {a + (index == 0 ? b : -b) * r, 0.0L};
    return {a, (index == 0 ? b : -b) * r};
}

}  // namespace powval
