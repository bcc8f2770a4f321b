#include <doctest.h>

#include "support.hpp"

#include "powval/powerful.hpp"

using namespace powval;
using namespace powval::testing;

namespace {

const NumberField Q = NumberField::rationals();

Polynomial lin(long root) { return Polynomial::rational({-root, 1}); }

// Irreducible over Q: linear, or a quadratic with non-square discriminant.
Polynomial random_irreducible() {
    if (uniform(0, 1) == 0) return Polynomial::rational({uniform(-9, 9), uniform(1, 5)});
    for (;;) {
        const long a = uniform(1, 5), b = uniform(-9, 9), c = uniform(-9, 9);
        const long D = b * b - 4 * a * c;
        if (c != 0 && !(D >= 0 && isqrt_exact(Integer(D)).second)) return Polynomial::rational({c, b, a});
    }
}

}  // namespace

TEST_CASE("squarefree decomposition examples") {
    const auto p = squarefree_decomposition(lin(1).pow(2) * lin(-2));
    REQUIRE(p.parts.size() == 2);
    CHECK(p.parts[0].first == lin(-2));
    CHECK(p.parts[0].second == 1);
    CHECK(p.parts[1].first == lin(1));
    CHECK(p.parts[1].second == 2);
    CHECK(p.s_plus == 2);
    CHECK(p.d == 2);
    const auto q = Polynomial::rational({-2, 0, 1});
    CHECK(squarefree_decomposition(q).s_plus == 1);
    const auto q3 = squarefree_decomposition(q.pow(3));
    REQUIRE(q3.parts.size() == 1);
    CHECK(q3.parts[0].second == 3);
    CHECK(q3.radical == q);
}

TEST_CASE("profiles reconstruct random products") {
    for (int i = 0; i < 300; ++i) {
        Polynomial f = Polynomial::constant(Q, FieldElement(random_nonzero_rational(20)));
        for (int k = static_cast<int>(uniform(1, 4)); k > 0; --k) f *= random_irreducible().pow(static_cast<unsigned>(uniform(1, 3)));
        const auto p = squarefree_decomposition(f);
        CHECK(p.reconstruct() == f);
        CHECK(p.radical.degree() == p.d);
        CHECK(p.t_bound >= static_cast<int>(p.parts.size()));
    }
}

TEST_CASE("powerful elements") {
    CHECK(is_powerful_element(Q, 72, 2).powerful);
    const auto v = is_powerful_element(Q, 12, 2);
    CHECK_FALSE(v.powerful);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->prime.p == 3);
    CHECK(is_powerful_element(Q, Rational(8, 9), 2).powerful);
    CHECK_FALSE(is_powerful_element(Q, Rational(8, 9), 3).powerful);
    CHECK(is_powerful_element(Q, 1, 5).powerful);
    CHECK(is_powerful_element(Q, -27, 3).powerful);
    CHECK_THROWS_AS(is_powerful_element(Q, 0, 2), Error);
    // 4 and 8 are 2-powerful, their ratio is not
    CHECK_FALSE(is_powerful_element(Q, Rational(1, 2), 2).powerful);
    // over Q(i): 2 = -i (1+i)^2 is 2-powerful, 1+i is not
    const NumberField Qi = make_field(-1);
    CHECK(is_powerful_element(Qi, Qi.element(2), 2).powerful);
    CHECK_FALSE(is_powerful_element(Qi, Qi.element(1, 1), 2).powerful);
    // 5 splits; 3+4i = (2+i)^2 while 2+i and 5 = (2+i)(2-i) are not 2-powerful
    CHECK(is_powerful_element(Qi, Qi.element(3, 4), 2).powerful);
    CHECK_FALSE(is_powerful_element(Qi, Qi.element(2, 1), 2).powerful);
    CHECK_FALSE(is_powerful_element(Qi, Qi.element(5), 2).powerful);
}

TEST_CASE("s-th powers are s-powerful") {
    for (long d : {0L, -1L, 5L}) {
        const NumberField K = d == 0 ? Q : make_field(d);
        for (int i = 0; i < 100; ++i) {
            const int s = static_cast<int>(uniform(2, 5));
            CHECK(is_powerful_element(K, random_nonzero_element(K, 200).pow(s), s).powerful);
        }
    }
}

TEST_CASE("powerful polynomials and multiplicity bounds") {
    CHECK(is_powerful_polynomial(lin(1).pow(2) * lin(-2).pow(2), 2));
    CHECK_FALSE(is_powerful_polynomial(lin(1).pow(2) * lin(-2), 2));
    CHECK(is_powerful_polynomial(Polynomial::rational({0, 0, 0, 0, 1}), 2));
    CHECK(multiplicities_below(Polynomial::rational({-2, 0, 1}), 2));
    CHECK_FALSE(multiplicities_below(lin(1).pow(2), 2));
    CHECK(multiplicities_below(lin(1).pow(2) * lin(-2), 3));
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_irreducible();
        const Polynomial g = random_irreducible();
        if (gcd(f, g).degree() == 0) f *= g;
        const int s = static_cast<int>(uniform(2, 4));
        CHECK(is_powerful_polynomial(f.pow(static_cast<unsigned>(s)), s));
        CHECK(multiplicities_below(f, s));
    }
}

TEST_CASE("canonical representatives") {
    CHECK(canonical_representative(Polynomial::rational({8, 0, 4}), 2) == Polynomial::rational({2, 0, 1}));
    CHECK(canonical_representative(Polynomial::rational({1, 0, 1}), 2) == Polynomial::rational({1, 0, 1}));
    CHECK(canonical_representative(Polynomial::rational({0, -9}), 2) == Polynomial::rational({0, -1}));
    CHECK(canonical_representative(Polynomial::rational({0, -8}), 3) == Polynomial::rational({0, 1}));
    for (int i = 0; i < 300; ++i) {
        const int s = static_cast<int>(uniform(2, 4));
        const auto f = random_int_poly(static_cast<int>(uniform(1, 4)), 30) * FieldElement(random_nonzero_rational(30));
        const auto c = canonical_representative(f, s);
        CHECK(canonical_representative(c, s) == c);
        const FieldElement lam = random_nonzero_element(Q, 12).pow(s);
        CHECK(canonical_representative(f * lam, s) == c);
        // exponents of the leading coefficient lie in [0, s)
        const Rational lc = c.leading().a();
        CHECK(lc.get_den() == 1);
        for (const auto& [p, e] : factor_integer(lc.get_num())) CHECK(e < s);
        if (s % 2 == 1) CHECK(lc > 0);
    }
}
