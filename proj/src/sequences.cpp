#include "powval/sequences.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace powval {

namespace {

FieldElement inv(const FieldElement& x) {
    if (x.is_zero()) throw Error(Errc::ZeroTerm, "zero term where a reciprocal is needed");
    return x.inverse();
}

void require_length(const SequencePrefix& B, std::size_t n, const char* what) {
    if (B.size() < n)
        throw Error(Errc::PrefixTooShort, std::string(what) + " needs at least " + std::to_string(n) + " terms, got " +
                                              std::to_string(B.size()));
}

void require_m(int m) {
    if (m < 1) throw Error(Errc::BadRange, "period must be >= 1");
}

void require_periodic(const SequencePrefix& B, int m, SequenceKind kind) {
    const auto seq = derive_sequence(B, kind);
    for (std::size_t i = 0; i + m < seq.size(); ++i)
        if (!(seq[i + m] == seq[i]))
            throw Error(Errc::NotPeriodic, std::string("sequence ") + kind_name(kind) + " is not periodic with period " +
                                               std::to_string(m) + " over the prefix");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(part);
    return out;
}

long parse_count(const std::string& s) {
    try {
        std::size_t pos = 0;
        const long n = std::stol(s, &pos);
        if (pos != s.size() || n < 1) throw Error(Errc::ParseError, "");
        return n;
    } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad sequence length '" + s + "'");
    }
}

}  // namespace

const FieldElement& SequencePrefix::b(std::size_t i) const {
    if (i < 1 || i > terms.size()) throw Error(Errc::PrefixTooShort, "index " + std::to_string(i) + " out of range");
    return terms[i - 1];
}

SequencePrefix make_prefix(const NumberField& field, std::vector<FieldElement> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].is_rational() && terms[i].d() != field.d())
            throw Error(Errc::FieldMismatch, terms[i].literal() + " is not in " + field.literal());
        for (std::size_t j = 0; j < i; ++j)
            if (terms[j] == terms[i]) throw Error(Errc::DuplicateSequenceTerms, terms[i].literal() + " is repeated");
    }
    return SequencePrefix{field, std::move(terms)};
}

SequencePrefix arithmetic_prefix(const NumberField& field, const FieldElement& a, long n) {
    std::vector<FieldElement> t;
    for (long i = 0; i < n; ++i) t.push_back(a + FieldElement(i));
    return make_prefix(field, std::move(t));
}

SequencePrefix geometric_prefix(const NumberField& field, const FieldElement& a, const FieldElement& q, long n) {
    std::vector<FieldElement> t;
    FieldElement x = a;
    for (long i = 0; i < n; ++i, x *= q) t.push_back(x);
    return make_prefix(field, std::move(t));
}

SequencePrefix harmonic_prefix(long n) {
    std::vector<FieldElement> t;
    for (long i = 1; i <= n; ++i) t.push_back(FieldElement(Rational(1, i)));
    return make_prefix(NumberField::rationals(), std::move(t));
}

SequencePrefix parse_sequence_spec(const NumberField& field, const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) {
        SequencePrefix B = read_sequence_file(spec.substr(5));
        if (!(B.field == field)) throw Error(Errc::FieldMismatch, "sequence file field differs from --field");
        return B;
    }
    const auto parts = split(spec, ':');
    if (parts.empty()) throw Error(Errc::ParseError, "empty sequence spec");
    if (parts[0] == "arith" && parts.size() == 3)
        return arithmetic_prefix(field, parse_element(field, parts[1]), parse_count(parts[2]));
    if (parts[0] == "geom" && parts.size() == 4)
        return geometric_prefix(field, parse_element(field, parts[1]), parse_element(field, parts[2]),
                                parse_count(parts[3]));
    if (parts[0] == "harm" && parts.size() == 2) {
        SequencePrefix B = harmonic_prefix(parse_count(parts[1]));
        B.field = field;
        return B;
    }
    throw Error(Errc::ParseError, "bad sequence spec '" + spec + "' (arith:a:n, geom:a:q:n, harm:n, file:path)");
}

SequencePrefix parse_sequence_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<NumberField> field;
    std::vector<FieldElement> terms;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        if (!field) {
            if (line.rfind("field", 0) != 0)
                throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'field <literal>'");
            field = make_field(trim(line.substr(5)));
            continue;
        }
        terms.push_back(parse_element(*field, line));
    }
    if (!field) throw Error(Errc::ParseError, "sequence file has no field line");
    return make_prefix(*field, std::move(terms));
}

SequencePrefix read_sequence_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_sequence_text(ss.str());
}

const char* kind_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::C: return "C";
        case SequenceKind::D: return "D";
        case SequenceKind::E: return "E";
    }
    return "?";
}

SequenceKind parse_kind(const std::string& s) {
    if (s == "C" || s == "c") return SequenceKind::C;
    if (s == "D" || s == "d") return SequenceKind::D;
    if (s == "E" || s == "e") return SequenceKind::E;
    throw Error(Errc::ParseError, "unknown sequence kind '" + s + "'");
}

std::vector<FieldElement> derive_sequence(const SequencePrefix& B, SequenceKind kind) {
    require_length(B, 2, "derived sequence");
    std::vector<FieldElement> out;
    const auto& t = B.terms;
    if (kind != SequenceKind::C)
        for (const auto& x : t)
            if (x.is_zero()) throw Error(Errc::ZeroTerm, std::string(kind_name(kind)) + " needs nonzero terms");
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        switch (kind) {
            case SequenceKind::C: out.push_back(t[i + 1] - t[i]); break;
            case SequenceKind::D: out.push_back(t[i] * inv(t[i + 1])); break;
            case SequenceKind::E: out.push_back(inv(t[i + 1]) - inv(t[i])); break;
        }
    }
    return out;
}

DerivedSequences derive_sequences(const SequencePrefix& B) {
    DerivedSequences out;
    out.C = derive_sequence(B, SequenceKind::C);
    const bool has_zero = std::any_of(B.terms.begin(), B.terms.end(), [](const FieldElement& x) { return x.is_zero(); });
    if (!has_zero) {
        out.D = derive_sequence(B, SequenceKind::D);
        out.E = derive_sequence(B, SequenceKind::E);
    }
    return out;
}

std::optional<int> detect_period(const std::vector<FieldElement>& seq, int m_max) {
    for (int m = 1; m <= m_max && static_cast<std::size_t>(m) < seq.size(); ++m) {
        bool ok = true;
        for (std::size_t i = 0; ok && i + m < seq.size(); ++i) ok = seq[i + m] == seq[i];
        if (ok) return m;
    }
    return std::nullopt;
}

IndexCheck extension_lemma_check(const SequencePrefix& B, int m, SequenceKind kind) {
    require_m(m);
    require_length(B, static_cast<std::size_t>(m) + 1, "extension lemma");
    require_periodic(B, m, kind);
    const long n = static_cast<long>(B.size());
    IndexCheck out;
    auto record = [&](bool ok) {
        out.results.push_back(ok);
        out.pass = out.pass && ok;
    };
    switch (kind) {
        case SequenceKind::C: {
            const FieldElement delta = B.b(m + 1) - B.b(1);
            for (long l = 1; l <= n; ++l) {
                const long q = (l - 1) / m, p = (l - 1) % m + 1;
                record(B.b(l) == B.b(p) + FieldElement(q) * delta);
            }
            break;
        }
        case SequenceKind::D: {
            const FieldElement rho = B.b(m + 1) * inv(B.b(1));
            for (long l = 1; l + 1 <= n; ++l) {
                const long q = (l - 1) / m, p = (l - 1) % m + 1;
                record(B.b(l + 1) == B.b(p + 1) * rho.pow(q));
            }
            break;
        }
        case SequenceKind::E: {
            const FieldElement delta = inv(B.b(m + 1)) - inv(B.b(1));
            for (long l = 1; l <= n; ++l) {
                const long q = (l - 1) / m, p = (l - 1) % m + 1;
                record(inv(B.b(l)) == inv(B.b(p)) + FieldElement(q) * delta);
            }
            break;
        }
    }
    return out;
}

Polynomial shift_transform(const Polynomial& f, long j, const SequencePrefix& B, int m) {
    require_m(m);
    require_length(B, static_cast<std::size_t>(m) + 1, "shift transform");
    return f.shift(FieldElement(j) * (B.b(m + 1) - B.b(1)));
}

Polynomial scale_transform(const Polynomial& f, long j, const SequencePrefix& B, int m) {
    require_m(m);
    require_length(B, static_cast<std::size_t>(m) + 1, "scale transform");
    const FieldElement rho = B.b(m + 1) * inv(B.b(1));
    if (rho.is_zero()) throw Error(Errc::ZeroTerm, "b_{m+1} is zero");
    return f.scale(rho.pow(j - 1));
}

Polynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw Error(Errc::DegreeMismatch, "rational function has a nonconstant denominator");
    return numerator * denominator.coeff(0).inverse();
}

FieldElement RationalFunction::operator()(const FieldElement& x) const {
    const FieldElement den = denominator(x);
    if (den.is_zero()) throw Error(Errc::ZeroTerm, "pole at " + x.literal());
    return numerator(x) / den;
}

RationalFunction inversion_transform_c(const Polynomial& f, const FieldElement& c, int r) {
    if (f.degree() != r)
        throw Error(Errc::DegreeMismatch, "deg f = " + std::to_string(f.degree()) + " but r = " + std::to_string(r));
    const NumberField& K = f.field();
    const Polynomial x = Polynomial::x(K);
    const Polynomial one_cx = Polynomial(K, {K.one(), c});
    Polynomial num(K, {});
    for (int i = 0; i <= r; ++i) num += f.coeff(i) * x.pow(i) * one_cx.pow(r - i);
    RationalFunction out{num, x.pow(r), true};
    const Polynomial g = gcd(out.numerator, out.denominator);
    if (g.degree() > 0) {
        out.numerator = out.numerator / g;
        out.denominator = out.denominator / g;
    }
    return out;
}

RationalFunction inversion_transform(const Polynomial& f, long j, const SequencePrefix& B, int m, int r) {
    require_m(m);
    require_length(B, static_cast<std::size_t>(m) + 1, "inversion transform");
    const FieldElement c = FieldElement(j) * (inv(B.b(m + 1)) - inv(B.b(1)));
    return inversion_transform_c(f, c, r);
}

IndexCheck transform_value_identity_check(const Polynomial& f, long j, const SequencePrefix& B, int m,
                                          SequenceKind kind) {
    require_m(m);
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "transform of a constant");
    require_length(B, static_cast<std::size_t>(m) + 1, "value identity");
    require_periodic(B, m, kind);
    const long n = static_cast<long>(B.size());
    IndexCheck out;
    auto record = [&](bool ok) {
        out.results.push_back(ok);
        out.pass = out.pass && ok;
    };
    switch (kind) {
        case SequenceKind::C: {
            const Polynomial fj = shift_transform(f, j, B, m);
            for (long i = 1; i + j * m <= n; ++i) record(fj(B.b(i)) == f(B.b(j * m + i)));
            break;
        }
        case SequenceKind::D: {
            const Polynomial fj = scale_transform(f, j, B, m);
            for (long i = 1; i + (j - 1) * m <= n; ++i)
                if (i + (j - 1) * m >= 1) record(fj(B.b(i)) == f(B.b((j - 1) * m + i)));
            break;
        }
        case SequenceKind::E: {
            const int r = f.degree();
            const RationalFunction g = inversion_transform(f, j, B, m, r);
            for (long i = 1; i + j * m <= n; ++i) {
                const FieldElement bt = B.b(j * m + i);
                record(g(B.b(i)) * bt.pow(r) == f(bt));
            }
            break;
        }
    }
    if (out.results.empty() && j != 0)
        throw Error(Errc::PrefixTooShort, "no index i has its shifted index inside the prefix");
    return out;
}

}  // namespace powval
