#include "powval/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace powval {

Polynomial::Polynomial(NumberField field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) {
        if (!c.is_rational() && c.d() != field_.d()) throw Error(Errc::FieldMismatch, "coefficient outside " + field_.literal());
        c = field_.element(c.a(), c.b());
    }
    trim();
}

Polynomial Polynomial::rational(std::vector<Rational> coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto& q : coeffs) c.emplace_back(q);
    return Polynomial(NumberField::rationals(), std::move(c));
}

Polynomial Polynomial::rational(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return rational(std::move(c));
}

Polynomial Polynomial::constant(const NumberField& field, const FieldElement& c) { return Polynomial(field, {c}); }

Polynomial Polynomial::x(const NumberField& field) { return Polynomial(field, {field.zero(), field.one()}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

const FieldElement& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
}

bool Polynomial::has_rational_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_rational(); });
}

std::vector<Rational> Polynomial::rational_coeffs() const {
    std::vector<Rational> out;
    for (const auto& c : coeffs_) {
        if (!c.is_rational()) throw Error(Errc::UnsupportedField, "polynomial has irrational coefficients");
        out.push_back(c.a());
    }
    return out;
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
    FieldElement acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<FieldElement> out;
    for (int i = 1; i <= degree(); ++i) out.push_back(coeffs_[static_cast<std::size_t>(i)] * FieldElement(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(field_, field_.one()), base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Polynomial Polynomial::shift(const FieldElement& t) const {
    // Horner in the ring: f(x + t)
    const Polynomial lin(field_, {t, field_.one()});
    Polynomial acc(field_, {});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(field_, *it);
    return acc;
}

Polynomial Polynomial::scale(const FieldElement& lambda) const {
    std::vector<FieldElement> out = coeffs_;
    FieldElement p = field_.one();
    for (auto& c : out) {
        c *= p;
        p *= lambda;
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

std::string Polynomial::literal() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].literal();
    }
    return out;
}

std::string Polynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.literal();
        if (!c.is_rational()) cs = "(" + cs + ")";
        bool negative = c.is_rational() && c.a() < 0;
        if (negative) cs = (-c).literal();
        if (!first) os << (negative ? "-" : "+");
        else if (negative) os << "-";
        first = false;
        const bool unit = cs == "1";
        if (i == 0) os << cs;
        else {
            if (!unit) os << cs << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial parse_polynomial(const NumberField& field, const std::string& literal) {
    std::vector<FieldElement> coeffs;
    std::stringstream ss(literal);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_element(field, item));
    if (coeffs.empty()) throw Error(Errc::ParseError, "empty polynomial literal");
    return Polynomial(field, std::move(coeffs));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by the zero polynomial");
    const NumberField& k = a.field().is_rationals() ? b.field() : a.field();
    std::vector<FieldElement> r = a.coeffs();
    const int db = b.degree();
    const FieldElement inv = b.leading().inverse();
    if (a.degree() < db) return {Polynomial(k, {}), Polynomial(k, r)};
    std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - db + 1), k.zero());
    for (int i = a.degree(); i >= db; --i) {
        const FieldElement c = r[static_cast<std::size_t>(i)] * inv;
        q[static_cast<std::size_t>(i - db)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial(k, std::move(q)), Polynomial(k, std::move(r))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    const int delta = a.degree() - b.degree();
    return (a * b.leading().pow(delta + 1)) % b;
}

}  // namespace

FieldElement resultant(const Polynomial& a_in, const Polynomial& b_in) {
    const NumberField& k = a_in.field().is_rationals() ? b_in.field() : a_in.field();
    if (a_in.is_zero() || b_in.is_zero()) return k.zero();
    Polynomial A = a_in, B = b_in;
    FieldElement g = k.one(), h = k.one();
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -1;
    }
    while (B.degree() > 0) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
        Polynomial R = pseudo_remainder(A, B);
        A = std::move(B);
        if (R.is_zero()) return k.zero();
        B = R * (g * h.pow(delta)).inverse();
        g = A.leading();
        h = h.pow(1 - delta) * g.pow(delta);
    }
    // deg B == 0
    const int da = A.degree();
    h = h.pow(1 - da) * B.leading().pow(da);
    return h * FieldElement(s);
}

FieldElement discriminant(const Polynomial& f) {
    const int d = f.degree();
    if (d < 2) throw Error(Errc::DegreeTooSmall, "discriminant needs degree >= 2");
    FieldElement r = resultant(f, f.derivative()) / f.leading();
    if ((d * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

std::vector<std::pair<Polynomial, int>> squarefree_parts(const Polynomial& f) {
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "squarefree decomposition of a constant");
    std::vector<std::pair<Polynomial, int>> out;
    const Polynomial fp = f.derivative();
    const Polynomial b = gcd(f, fp);
    Polynomial c = f / b;
    Polynomial d = fp / b - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        Polynomial a = gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = c / a;
        d = d / a - c.derivative();
    }
    return out;
}

Polynomial primitive_part(const Polynomial& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "primitive part of 0");
    auto q = f.rational_coeffs();
    Integer den = 1, num = 0;
    for (auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (auto& c : q) {
        Rational v = c * den;
        ints.push_back(v.get_num());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), ints.back().get_mpz_t());
    }
    std::vector<Rational> out;
    const int sign = ints.back() < 0 ? -1 : 1;
    for (auto& v : ints) out.emplace_back(Integer(v / num) * sign);
    return Polynomial::rational(std::move(out));
}

}  // namespace powval
