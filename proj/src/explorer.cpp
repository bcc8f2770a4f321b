#include "powval/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace powval {

namespace {

// Multiplicative "measure" H^2 (degree 1) or M(f) (degree 2) kept exactly as
// (t + sqrt D) / 2, with D = 0 for rational values.
struct Measure {
    Integer t;
    Integer D;
    long double value() const {
        return (static_cast<long double>(t.get_d()) + std::sqrt(static_cast<long double>(D.get_d()))) / 2;
    }
};

// sign of u + v sqrt(D), D >= 0
int sign_sqrt_form(const Integer& u, const Integer& v, const Integer& D) {
    const int su = sgn(u), sv = D == 0 ? 0 : sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    const Integer lhs = u * u, rhs = v * v * D;
    if (lhs == rhs) return 0;
    return lhs > rhs ? su : sv;
}

// sign of (t1 + sqrt D1) - (t2 + sqrt D2)
int compare(const Measure& x, const Measure& y) {
    if (x.t == y.t && x.D == y.D) return 0;
    const long double a = x.value(), b = y.value();
    if (std::abs(a - b) > 1e-9L * std::max(1.0L, std::max(a, b))) return a < b ? -1 : 1;
    // u + sqrt D1 vs sqrt D2 with u = t1 - t2
    const Integer u = x.t - y.t;
    const int sa = sign_sqrt_form(u, 1, x.D);
    if (sa < 0) return -1;
    // both sides nonnegative: compare squares, u^2 + D1 - D2 + 2u sqrt D1
    return sign_sqrt_form(u * u + x.D - y.D, 2 * u, x.D);
}

struct Keyed {
    Measure measure;
    PointRecord rec;
};

bool canonical_less(const Keyed& x, const Keyed& y) {
    if (const int c = compare(x.measure, y.measure); c != 0) return c < 0;
    const auto& p = x.rec;
    const auto& q = y.rec;
    if (p.degree != q.degree) return p.degree < q.degree;
    if (p.a != q.a) return p.a < q.a;
    if (p.b != q.b) return p.b < q.b;
    if (p.c != q.c) return p.c < q.c;
    return p.root_index < q.root_index;
}

Integer floor_q(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

Integer gcd_z(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

void degree_one(const Rational& X, std::vector<Keyed>& out) {
    const long Xi = floor_q(X).get_si();
    for (long b = 0; b <= Xi; ++b)
        for (long a = -Xi; a <= Xi; ++a) {
            if (b == 0 && a != 1) continue;
            if (gcd_z(a, b) != 1) continue;
            const long H = std::max(std::labs(a), b);
            Keyed k;
            k.measure = {Integer(2) * H * H, 0};
            k.rec.degree = 1;
            k.rec.a = a;
            k.rec.b = b;
            k.rec.c = 0;
            k.rec.height = std::log(static_cast<long double>(H));
            out.push_back(std::move(k));
        }
}

void degree_two(const Rational& X, std::vector<Keyed>& out) {
    const Rational Y = X * X;
    const long Yi = floor_q(Y).get_si();
    for (long a = 1; a <= Yi; ++a)
        for (long b = -2 * Yi; b <= 2 * Yi; ++b)
            for (long c = -Yi; c <= Yi; ++c) {
                if (c == 0) continue;
                if (gcd_z(gcd_z(a, b), c) != 1) continue;
                const Integer D = Integer(b) * b - Integer(4) * a * c;
                if (D >= 0 && isqrt_exact(D).second) continue;
                const long n = std::max(a, std::labs(c));
                Measure m{Integer(2) * n, 0};
                if (D > 0) {
                    const long t = 2 * n - std::labs(b);
                    if (t < 0 || D > Integer(t) * t) m = {Integer(std::labs(b)), D};
                }
                // M <= Y
                if (m.D == 0) {
                    if (Rational(n) > Y) continue;
                } else {
                    const Rational t = 2 * Y - std::labs(b);
                    if (t < 0 || Rational(D) > t * t) continue;
                }
                for (int idx = 0; idx < 2; ++idx) {
                    Keyed k;
                    k.measure = m;
                    k.rec.degree = 2;
                    k.rec.a = a;
                    k.rec.b = b;
                    k.rec.c = c;
                    k.rec.root_index = idx;
                    k.rec.height = std::log(m.value()) / 2;
                    out.push_back(k);
                }
            }
}

void check_budget(const EnumerationBudget& budget) {
    if (budget.degree != 1 && budget.degree != 2) throw Error(Errc::UnsupportedDegree, "degree must be 1 or 2");
    if (budget.height_cap < 1) throw Error(Errc::BadRange, "height cap must be >= 1");
    const long double X = budget.height_cap.get_d();
    long double est = (2 * X + 1) * (X + 1);
    if (budget.degree == 2) est += 8 * std::pow(X * X + 1, 3.0L);
    if (est > static_cast<long double>(budget.max_points))
        throw Error(Errc::BudgetExceeded, "enumeration box exceeds the point budget");
}

bool lex_less(const Polynomial& f, const Polynomial& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (int i = f.degree(); i >= 0; --i) {
        const Rational a = f.coeff(i).a(), b = g.coeff(i).a();
        if (a != b) return a < b;
    }
    return false;
}

}  // namespace

AlgebraicNumber PointRecord::to_algebraic() const {
    if (degree == 1) {
        if (b == 0) throw Error(Errc::BadRange, "the point at infinity has no affine coordinate");
        return AlgebraicNumber::rational(Rational(a, b));
    }
    return AlgebraicNumber::from_min_poly(Polynomial::rational({Rational(c), Rational(b), Rational(a)}), root_index);
}

std::string PointRecord::describe() const {
    if (degree == 1) {
        if (b == 0) return "inf";
        Rational q(a, b);
        q.canonicalize();
        return to_string(q);
    }
    return "root " + std::to_string(root_index) + " of " +
           Polynomial::rational({Rational(c), Rational(b), Rational(a)}).pretty();
}

std::vector<PointRecord> enumerate_points(const EnumerationBudget& budget) {
    check_budget(budget);
    std::vector<Keyed> keyed;
    degree_one(budget.height_cap, keyed);
    if (budget.degree == 2) degree_two(budget.height_cap, keyed);
    std::sort(keyed.begin(), keyed.end(), canonical_less);
    std::vector<PointRecord> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.rec));
    return out;
}

CountReport count_points(const EnumerationBudget& budget, long double c5, long double c6) {
    CountReport rep;
    rep.count = enumerate_points(budget).size();
    const long double X = budget.height_cap.get_d();
    const CountBand band = count_band(NumberField::rationals(), budget.degree, X, c5, c6);
    rep.lower = band.lower;
    rep.upper = band.upper;
    rep.b_kr = band.b_kr;
    rep.ratio = rep.count / band.b_kr;
    rep.density = rep.count / std::pow(X, static_cast<long double>(budget.degree * (budget.degree + 1)));
    return rep;
}

bool satisfies_search_predicate(const Polynomial& f, const std::vector<FieldElement>& prefix, int s) {
    if (f.degree() < 1) return false;
    const NumberField Q = NumberField::rationals();
    for (const auto& b : prefix) {
        const FieldElement v = f(b);
        if (v.is_zero() || !is_powerful_element(Q, v, s).powerful) return false;
    }
    return multiplicities_below(f, s);
}

std::vector<Polynomial> search_polynomials(const SearchBox& box) {
    if (box.s < 2 || box.s > box.r) throw Error(Errc::BadRange, "need 2 <= s <= r");
    if (box.coeff_bound < 0) throw Error(Errc::BadRange, "coefficient bound must be >= 0");
    if (!box.prefix.field.is_rationals()) throw Error(Errc::UnsupportedField, "search runs over Q");
    if (box.prefix.terms.empty()) throw Error(Errc::PrefixTooShort, "empty prefix");

    std::vector<Rational> values;
    for (long d = 1; d <= box.coeff_bound; ++d)
        for (long n = -box.coeff_bound; n <= box.coeff_bound; ++n) {
            Rational q(n, d);
            q.canonicalize();
            values.push_back(q);
        }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) return {};

    const long double total = std::pow(static_cast<long double>(values.size()), box.r + 1);
    if (total > static_cast<long double>(box.max_candidates))
        throw Error(Errc::BoxTooLarge, "search box has about " + std::to_string(static_cast<double>(total)) +
                                           " candidates, limit " + std::to_string(box.max_candidates));

    const std::size_t V = values.size();
    const int n = box.r + 1;
    std::vector<std::size_t> idx(n, 0);  // idx[0] = leading coefficient
    std::map<std::string, Polynomial> classes;
    for (;;) {
        if (values[idx[0]] != 0) {
            std::vector<Rational> cs(n);
            for (int i = 0; i < n; ++i) cs[n - 1 - i] = values[idx[i]];
            const Polynomial f = Polynomial::rational(cs);
            if (satisfies_search_predicate(f, box.prefix.terms, box.s)) {
                const std::string key = canonical_representative(f, box.s).literal();
                auto it = classes.find(key);
                if (it == classes.end()) classes.emplace(key, f);
                else if (lex_less(f, it->second)) it->second = f;
            }
        }
        int k = n - 1;
        while (k >= 0 && ++idx[k] == V) idx[k--] = 0;
        if (k < 0) break;
    }

    std::vector<Polynomial> out;
    for (auto& [key, member] : classes) {
        // The s-th-power representative need not keep |ord| >= s at every value.
        const Polynomial rep = canonical_representative(member, box.s);
        const Polynomial& f = satisfies_search_predicate(rep, box.prefix.terms, box.s) ? rep : member;
        if (!satisfies_search_predicate(f, box.prefix.terms, box.s))
            throw std::logic_error("search result " + f.pretty() + " failed re-verification");
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace powval
