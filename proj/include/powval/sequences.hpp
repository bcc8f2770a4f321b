#pragma once

// Sequences of distinct field elements: difference, ratio and reciprocal-difference
// sequences, periods over a prefix, and the three polynomial transforms that move
// values along a periodic prefix.

#include "powval/field.hpp"
#include "powval/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace powval {

struct SequencePrefix {
    NumberField field = NumberField::rationals();
    std::vector<FieldElement> terms;  // b_1 .. b_n

    std::size_t size() const noexcept { return terms.size(); }
    /// 1-based access.
    const FieldElement& b(std::size_t i) const;
};

/// Throws DuplicateSequenceTerms on a repeated term.
SequencePrefix make_prefix(const NumberField& field, std::vector<FieldElement> terms);

/// a, a+1, ..., a+n-1
SequencePrefix arithmetic_prefix(const NumberField& field, const FieldElement& a, long n);
/// a, aq, ..., aq^(n-1)
SequencePrefix geometric_prefix(const NumberField& field, const FieldElement& a, const FieldElement& q, long n);
/// 1, 1/2, ..., 1/n
SequencePrefix harmonic_prefix(long n);

/// `arith:a:n`, `geom:a:q:n`, `harm:n` or `file:<path>`.
SequencePrefix parse_sequence_spec(const NumberField& field, const std::string& spec);
/// Line 1 `field <literal>`, then one element literal per line; `#` starts a comment.
SequencePrefix read_sequence_file(const std::string& path);
SequencePrefix parse_sequence_text(const std::string& text);

enum class SequenceKind { C, D, E };
const char* kind_name(SequenceKind kind);
SequenceKind parse_kind(const std::string& s);

/// c_i = b_{i+1} - b_i, d_i = b_i / b_{i+1}, e_i = 1/b_{i+1} - 1/b_i.
/// D and E throw ZeroTerm when a term is zero.
std::vector<FieldElement> derive_sequence(const SequencePrefix& B, SequenceKind kind);

struct DerivedSequences {
    std::vector<FieldElement> C;
    std::optional<std::vector<FieldElement>> D;  // absent when some term is zero
    std::optional<std::vector<FieldElement>> E;
};
DerivedSequences derive_sequences(const SequencePrefix& B);

/// Smallest m <= m_max, m < seq.size(), with seq[i + m] = seq[i] wherever both exist.
std::optional<int> detect_period(const std::vector<FieldElement>& seq, int m_max);

struct IndexCheck {
    std::vector<bool> results;  // one per checked index
    bool pass = true;
};

/// Closed forms along a prefix whose derived sequence has period m:
///   C: b_l = b_p + q (b_{m+1} - b_1)
///   D: b_{l+1} = b_{p+1} (b_{m+1}/b_1)^q
///   E: 1/b_l = 1/b_p + q (1/b_{m+1} - 1/b_1)
/// for l = qm + p, 1 <= p <= m. Throws NotPeriodic, PrefixTooShort.
IndexCheck extension_lemma_check(const SequencePrefix& B, int m, SequenceKind kind);

/// f(x + j (b_{m+1} - b_1))
Polynomial shift_transform(const Polynomial& f, long j, const SequencePrefix& B, int m);
/// f((b_{m+1}/b_1)^(j-1) x)
Polynomial scale_transform(const Polynomial& f, long j, const SequencePrefix& B, int m);

struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator;
    bool reduced = false;

    bool is_polynomial() const { return denominator.degree() == 0; }
    /// numerator / denominator as a polynomial; requires is_polynomial().
    Polynomial as_polynomial() const;
    FieldElement operator()(const FieldElement& x) const;
};

/// (1/x + c)^r f(1/(1/x + c)) with c = j (1/b_{m+1} - 1/b_1), as a reduced
/// fraction sum_i a_i x^i (1 + cx)^(r-i) / x^r.
RationalFunction inversion_transform(const Polynomial& f, long j, const SequencePrefix& B, int m, int r);
/// The same expansion for an explicit c.
RationalFunction inversion_transform_c(const Polynomial& f, const FieldElement& c, int r);

/// Value identities along the prefix, for every i with the target index in range:
///   C: f_j(b_i) = f(b_{jm+i})
///   D: f_j(b_i) = f(b_{(j-1)m+i})
///   E: f_j(b_i) b_{jm+i}^r = f(b_{jm+i}), r = deg f
IndexCheck transform_value_identity_check(const Polynomial& f, long j, const SequencePrefix& B, int m,
                                          SequenceKind kind);

}  // namespace powval
