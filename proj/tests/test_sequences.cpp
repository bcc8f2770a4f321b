#include <doctest.h>

#include "support.hpp"

#include "powval/sequences.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

using namespace powval;
using namespace powval::testing;

namespace {

const NumberField Q = NumberField::rationals();

std::vector<FieldElement> elems(std::initializer_list<long> xs) {
    std::vector<FieldElement> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

bool all_true(const IndexCheck& c) {
    return c.pass && std::all_of(c.results.begin(), c.results.end(), [](bool b) { return b; });
}

// b_1 = start, b_{i+1} = b_i + step[(i-1) mod m] (C), b_i * step (D), or the
// reciprocal version (E): a prefix whose derived sequence has period m.
SequencePrefix periodic_prefix(SequenceKind kind, const std::vector<Rational>& block, const Rational& start, long n) {
    std::vector<FieldElement> t{FieldElement(start)};
    for (long i = 1; i < n; ++i) {
        const Rational& st = block[(i - 1) % block.size()];
        const Rational prev = t.back().a();
        switch (kind) {
        case SequenceKind::C: t.emplace_back(prev + st); break;
        case SequenceKind::D: t.emplace_back(prev / st); break;
        case SequenceKind::E: t.emplace_back(1 / (1 / prev + st)); break;
        }
    }
    return make_prefix(Q, t);
}

}  // namespace

TEST_CASE("prefix constructors and parsing") {
    const auto a = arithmetic_prefix(Q, 1, 21);
    CHECK(a.size() == 21);
    CHECK(a.b(1) == FieldElement(1));
    CHECK(a.b(21) == FieldElement(21));
    const auto g = geometric_prefix(Q, 1, 2, 10);
    CHECK(g.b(10) == FieldElement(512));
    const auto h = harmonic_prefix(10);
    CHECK(h.b(10) == FieldElement(Rational(1, 10)));
    CHECK(parse_sequence_spec(Q, "arith:1:21").terms == a.terms);
    CHECK(parse_sequence_spec(Q, "geom:1:2:10").terms == g.terms);
    CHECK(parse_sequence_spec(Q, "harm:10").terms == h.terms);
    CHECK_THROWS_AS(parse_sequence_spec(Q, "geom:1:1:3"), Error);
    CHECK_THROWS_AS(parse_sequence_spec(Q, "nope:1"), Error);
    CHECK_THROWS_AS(make_prefix(Q, elems({1, 2, 1})), Error);

    const auto t = parse_sequence_text("field Q(sqrt,-1)\n# comment\n1\nsqrt(-1)\n1/2+1/3*sqrt(-1)\n");
    CHECK(t.field == make_field(-1));
    REQUIRE(t.size() == 3);
    CHECK(t.b(2) == make_field(-1).element(0, 1));

    const std::string path = "powval_seq_test.txt";
    {
        std::ofstream out(path);
        out << "field Q\n3\n5\n7\n";
    }
    CHECK(parse_sequence_spec(Q, "file:" + path).terms == elems({3, 5, 7}));
    std::remove(path.c_str());
}

TEST_CASE("derived sequences") {
    const auto C = derive_sequence(make_prefix(Q, elems({1, 2, 3, 4})), SequenceKind::C);
    CHECK(C == elems({1, 1, 1}));
    const auto D = derive_sequence(make_prefix(Q, elems({1, 2, 4, 8})), SequenceKind::D);
    CHECK(D == std::vector<FieldElement>(3, FieldElement(Rational(1, 2))));
    const auto E = derive_sequence(harmonic_prefix(3), SequenceKind::E);
    CHECK(E == elems({1, 1}));
    CHECK_THROWS_AS(derive_sequence(make_prefix(Q, elems({0, 1})), SequenceKind::D), Error);
    const auto all = derive_sequences(make_prefix(Q, elems({0, 1, 2})));
    CHECK_FALSE(all.D.has_value());
    CHECK_FALSE(all.E.has_value());
    CHECK(all.C == elems({1, 1}));
}

TEST_CASE("period detection") {
    CHECK(detect_period(elems({1, 1, 1, 1}), 3) == 1);
    CHECK(detect_period(elems({1, 2, 1, 2, 1}), 3) == 2);
    CHECK_FALSE(detect_period(elems({1, 2, 3}), 2).has_value());
    CHECK_FALSE(detect_period(elems({1, 2, 3}), 10).has_value());
    for (const auto& B : {arithmetic_prefix(Q, 1, 30), geometric_prefix(Q, 3, Rational(2, 5), 30), harmonic_prefix(30)}) {
        const auto d = derive_sequences(B);
        CHECK(detect_period(d.C, 5) == (B.b(2) - B.b(1) == B.b(3) - B.b(2) ? std::optional<int>(1) : detect_period(d.C, 5)));
    }
    CHECK(detect_period(derive_sequences(arithmetic_prefix(Q, 1, 30)).C, 5) == 1);
    CHECK(detect_period(*derive_sequences(geometric_prefix(Q, 3, Rational(2, 5), 30)).D, 5) == 1);
    CHECK(detect_period(*derive_sequences(harmonic_prefix(30)).E, 5) == 1);
}

TEST_CASE("extension lemma on progressions") {
    CHECK(all_true(extension_lemma_check(arithmetic_prefix(Q, 1, 10), 1, SequenceKind::C)));
    CHECK(all_true(extension_lemma_check(geometric_prefix(Q, 1, 2, 10), 1, SequenceKind::D)));
    CHECK(all_true(extension_lemma_check(harmonic_prefix(10), 1, SequenceKind::E)));
    CHECK_THROWS_AS(extension_lemma_check(make_prefix(Q, elems({1, 2, 4, 5, 9})), 1, SequenceKind::C), Error);
    CHECK_THROWS_AS(extension_lemma_check(arithmetic_prefix(Q, 1, 2), 3, SequenceKind::C), Error);
}

TEST_CASE("extension lemma on random periodic prefixes") {
    for (int i = 0; i < 60; ++i) {
        const int m = static_cast<int>(uniform(1, 4));
        for (SequenceKind kind : {SequenceKind::C, SequenceKind::D, SequenceKind::E}) {
            std::vector<Rational> block;
            for (int k = 0; k < m; ++k) {
                Rational st;
                // steps above 1 (D) or positive (C, E) keep the terms distinct
                const long den = uniform(1, 3);
                st = kind == SequenceKind::D ? Rational(den + uniform(1, 4), den) : Rational(uniform(1, 7), den);
                st.canonicalize();
                block.push_back(st);
            }
            const auto B = periodic_prefix(kind, block, Rational(uniform(1, 9), uniform(1, 4)), 3 * m + 5);
            const auto seq = derive_sequence(B, kind);
            REQUIRE(detect_period(seq, m).has_value());
            CHECK(all_true(extension_lemma_check(B, m, kind)));
        }
    }
}

TEST_CASE("shift and scale transforms") {
    const auto x2 = Polynomial::rational({0, 0, 1});
    CHECK(shift_transform(x2, 1, arithmetic_prefix(Q, 1, 3), 1) == Polynomial::rational({1, 2, 1}));
    CHECK(shift_transform(x2, 0, arithmetic_prefix(Q, 1, 3), 1) == x2);
    const auto odd = make_prefix(Q, elems({1, 3, 5, 7}));
    CHECK(shift_transform(Polynomial::rational({1, 0, 1}), 2, odd, 1) == Polynomial::rational({17, 8, 1}));
    const auto g = geometric_prefix(Q, 1, 2, 6);
    CHECK(scale_transform(Polynomial::rational({0, 1, 1}), 2, g, 1) == Polynomial::rational({0, 2, 4}));
    CHECK(scale_transform(Polynomial::rational({0, 1, 1}), 1, g, 1) == Polynomial::rational({0, 1, 1}));
    CHECK_THROWS_AS(scale_transform(x2, 2, make_prefix(Q, elems({0, 1, 2})), 1), Error);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_int_poly(static_cast<int>(uniform(1, 5)), 20);
        const auto B = make_prefix(Q, elems({uniform(-50, -1), uniform(1, 50)}));
        const long j1 = uniform(-5, 5), j2 = uniform(-5, 5);
        CHECK(shift_transform(shift_transform(f, j1, B, 1), j2, B, 1) == shift_transform(f, j1 + j2, B, 1));
    }
}

TEST_CASE("inversion transform") {
    const auto u2 = Polynomial::rational({0, 0, 1});
    for (long c : {-3L, 1L, 7L}) {
        const auto t = inversion_transform_c(u2, FieldElement(c), 2);
        CHECK(t.is_polynomial());
        CHECK(t.as_polynomial() == Polynomial::rational({1}));
    }
    const auto t1 = inversion_transform_c(Polynomial::rational({1, 1}), FieldElement(1), 1);
    CHECK_FALSE(t1.is_polynomial());
    CHECK(t1.numerator == Polynomial::rational({1, 2}));
    CHECK(t1.denominator == Polynomial::rational({0, 1}));
    // c = 0 gives f(x) / x^r
    const auto f = Polynomial::rational({3, 0, 1});
    const auto t0 = inversion_transform_c(f, FieldElement(0), 2);
    CHECK(t0.numerator == f);
    CHECK(t0.denominator == Polynomial::rational({0, 0, 1}));
    CHECK_THROWS_AS(inversion_transform(f, 1, harmonic_prefix(4), 1, 3), Error);
    // polynomial outputs have degree <= r, equality exactly for monomials
    for (int i = 0; i < 80; ++i) {
        const int r = static_cast<int>(uniform(1, 4));
        const auto g = random_int_poly(r, 5);
        const auto t = inversion_transform_c(g, FieldElement(random_nonzero_rational(5)), r);
        if (!t.is_polynomial()) continue;
        const auto p = t.as_polynomial();
        CHECK(p.degree() <= r);
        const bool monomial =
            std::count_if(g.coeffs().begin(), g.coeffs().end(), [](const FieldElement& a) { return !a.is_zero(); }) == 1;
        if (p.degree() == r) CHECK(monomial);
    }
    // evaluation matches the defining expression
    for (int i = 0; i < 80; ++i) {
        const int r = static_cast<int>(uniform(1, 4));
        const auto g = random_int_poly(r, 9);
        const FieldElement c = random_rational(6);
        const auto t = inversion_transform_c(g, c, r);
        const FieldElement x = random_nonzero_rational(20);
        const FieldElement y = x.inverse() + c;
        if (y.is_zero()) continue;
        CHECK(t(x) == y.pow(r) * g(y.inverse()));
    }
}

TEST_CASE("transform value identities") {
    const auto A = arithmetic_prefix(Q, 1, 10);
    const auto cC = transform_value_identity_check(Polynomial::rational({3, 0, 1}), 2, A, 1, SequenceKind::C);
    CHECK(all_true(cC));
    CHECK(cC.results.size() == 8);
    const auto G = geometric_prefix(Q, 1, 2, 10);
    CHECK(all_true(transform_value_identity_check(Polynomial::rational({0, 0, 1}), 1, G, 1, SequenceKind::D)));
    CHECK(all_true(transform_value_identity_check(Polynomial::rational({0, 0, 1}), 2, G, 1, SequenceKind::D)));
    CHECK(all_true(transform_value_identity_check(Polynomial::rational({0, 0, 1}), 0, A, 1, SequenceKind::C)));
    const auto H = harmonic_prefix(20);
    for (long j : {1L, 2L, 5L})
        CHECK(all_true(transform_value_identity_check(Polynomial::rational({2, -1, 0, 4}), j, H, 1, SequenceKind::E)));
    // period-2 prefixes
    for (SequenceKind kind : {SequenceKind::C, SequenceKind::D, SequenceKind::E}) {
        const std::vector<Rational> block = kind == SequenceKind::D ? std::vector<Rational>{Rational(1, 2), Rational(1, 3)}
                                                                    : std::vector<Rational>{Rational(1), Rational(3)};
        const auto B = periodic_prefix(kind, block, 2, 24);
        for (long j : {1L, 2L, 3L}) {
            const auto f = random_int_poly(3, 9);
            CHECK(all_true(transform_value_identity_check(f, j, B, 2, kind)));
        }
    }
}

TEST_CASE("kind names") {
    for (SequenceKind k : {SequenceKind::C, SequenceKind::D, SequenceKind::E}) CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS_AS(parse_kind("Z"), Error);
}
