#include "cli.hpp"

#include "powval/bounds.hpp"
#include "powval/explorer.hpp"
#include "powval/nevanlinna.hpp"
#include "powval/powerful.hpp"
#include "powval/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

namespace powval::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
    std::string field = "Q";
    std::string format = "json";
    int precision = 15;
    unsigned long seed = 0;
    std::uint64_t budget = 0;  // 0: module defaults
};

class Emitter {
public:
    Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

    Json num(long double x) const {
        if (!std::isfinite(x)) return nullptr;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*Lg", g_.precision, x);
        return std::stod(buf);
    }

    void record(Json j) { rows_.push_back(std::move(j)); }

    void flush() {
        if (g_.format == "json") {
            for (const auto& r : rows_) out_ << r.dump() << '\n';
            return;
        }
        if (rows_.empty()) return;
        std::vector<std::string> header;
        for (const auto& r : rows_)
            for (auto it = r.begin(); it != r.end(); ++it)
                if (std::find(header.begin(), header.end(), it.key()) == header.end()) header.push_back(it.key());
        for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
        out_ << '\n';
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (i) out_ << ',';
                if (r.contains(header[i])) out_ << csv_cell(r[header[i]]);
            }
            out_ << '\n';
        }
    }

private:
    static std::string csv_cell(const Json& v) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }

    const Globals& g_;
    std::ostream& out_;
    std::vector<Json> rows_;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

std::vector<FieldElement> parse_elements(const NumberField& K, const std::string& list) {
    std::vector<FieldElement> out;
    if (list.empty()) return out;
    for (const auto& s : split_list(list)) out.push_back(parse_element(K, s));
    return out;
}

PlaceSet parse_places(const NumberField& K, const std::string& primes) {
    std::vector<Integer> ps;
    for (const auto& s : split_list(primes)) {
        Integer p;
        if (s.empty() || p.set_str(s, 10) != 0) throw Error(Errc::ParseError, "bad prime '" + s + "'");
        ps.push_back(p);
    }
    return PlaceSet::above(K, ps);
}

std::string join(const std::vector<FieldElement>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].literal();
    return s;
}

std::string prime_label(const PrimeIdeal& p) {
    if (p.kind == PrimeIdeal::Kind::Rational) return "(" + to_string(p.p) + ")";
    if (p.kind == PrimeIdeal::Kind::Inert) return "(" + to_string(p.p) + ")";
    return "(" + to_string(p.p) + ",w-" + to_string(p.root) + ")";
}

// A point is either an element of the field (--point) or a root of an
// integer polynomial of degree <= 2 over Q (--min-poly with --root).
struct PointOpts {
    std::string point;
    std::string min_poly;
    int root = 0;

    void add(CLI::App* app) {
        app->add_option("--point", point, "point as an element literal of the field");
        app->add_option("--min-poly", min_poly, "minimal polynomial c0,c1,c2 over Q of an algebraic point");
        app->add_option("--root", root, "root index of --min-poly (0-based, real part then imaginary part)");
    }
    bool algebraic() const { return !min_poly.empty(); }
    AlgebraicNumber alg() const {
        return AlgebraicNumber::from_min_poly(parse_polynomial(NumberField::rationals(), min_poly), root);
    }
    FieldElement elem(const NumberField& K) const {
        if (point.empty()) throw Error(Errc::ParseError, "give --point or --min-poly");
        return parse_element(K, point);
    }
    std::string describe() const { return algebraic() ? alg().describe() : point; }
};

Json nevanlinna_json(const Emitter& em, const NevanlinnaReport& r) {
    Json j;
    j["h"] = em.num(r.h);
    j["m_s"] = em.num(r.m_S);
    j["n_s"] = em.num(r.N_S);
    Json ts = Json::array();
    for (const auto& t : r.targets)
        ts.push_back({{"b", t.b.literal()}, {"m_s", em.num(t.m_S)}, {"n_s", em.num(t.N_S)}, {"n_s1", em.num(t.N_S1)}});
    j["targets"] = ts;
    return j;
}

Json vojta_json(const Emitter& em, const VojtaReport& v) {
    return {{"form", form_name(v.form)}, {"lhs", em.num(v.lhs)},   {"rhs", em.num(v.rhs)}, {"holds", v.holds},
            {"h", em.num(v.h)},          {"d_k", em.num(v.d_k)},   {"sigma", em.num(v.sigma)},
            {"c", em.num(v.c)},          {"c_prime", em.num(v.c_prime)},
            {"eps", em.num(v.eps)},      {"b", em.num(v.B)},       {"n", v.n},             {"d", v.d}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"Heights, powerful values and counting bounds over Q and quadratic fields", "powval"};
    app.require_subcommand(1);
    app.add_option("--field", g.field, "base field: Q or Q(sqrt,<d>)");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--precision", g.precision, "significant digits for real numbers")->check(CLI::Range(1, 30));
    app.add_option("--seed", g.seed, "seed for randomized corpora");
    app.add_option("--budget", g.budget, "cap on enumerated candidates");

    Emitter em(g, out);
    std::function<void()> action;
    auto field = [&] { return make_field(g.field); };
    auto sub = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    // field-info
    {
        CLI::App* s = sub("field-info", "class number, regulator, units and discriminant");
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                const FieldInvariants inv = field_invariants(K);
                Json j{{"field", K.literal()},
                       {"degree", K.degree()},
                       {"discriminant", K.discriminant()},
                       {"class_number", inv.class_number},
                       {"regulator", em.num(inv.regulator)},
                       {"roots_of_unity", inv.roots_of_unity},
                       {"m1", inv.m1},
                       {"m2", inv.m2}};
                if (K.d() > 0) j["fundamental_unit"] = fundamental_unit(K).literal();
                em.record(j);
            };
        });
    }

    // zeta
    auto zs = std::make_shared<int>(2);
    auto zeps = std::make_shared<double>(1e-12);
    {
        CLI::App* s = sub("zeta", "Dedekind zeta value at an integer s >= 2");
        s->add_option("-s", *zs, "argument")->required();
        s->add_option("--eps", *zeps, "absolute accuracy");
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                em.record({{"field", K.literal()}, {"s", *zs}, {"value", em.num(dedekind_zeta(K, *zs, *zeps))}});
            };
        });
    }

    // height
    auto height_elems = std::make_shared<std::vector<std::string>>();
    auto height_poly = std::make_shared<std::string>();
    auto height_pt = std::make_shared<PointOpts>();
    {
        CLI::App* s = sub("height", "Weil heights of elements, projective points, polynomials, algebraic numbers");
        s->add_option("coords", *height_elems, "one element, or the coordinates of a projective point");
        s->add_option("--poly", *height_poly, "polynomial c0,c1,...");
        height_pt->add(s);
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                if (!height_poly->empty()) {
                    const auto h = height_polynomial(parse_polynomial(K, *height_poly));
                    em.record({{"poly", *height_poly}, {"h", em.num(h.h)}, {"H", em.num(h.H)}});
                } else if (height_pt->algebraic()) {
                    const AlgebraicNumber a = height_pt->alg();
                    Json j{{"point", a.describe()}, {"degree", a.degree()}, {"h", em.num(absolute_height(a))}};
                    if (a.degree() <= 2) j["h_place_sum"] = em.num(absolute_height_place_sum(a));
                    em.record(j);
                } else if (height_elems->size() == 1) {
                    const FieldElement x = parse_element(K, height_elems->front());
                    const auto rel = height_point(K, {K.one(), x});
                    em.record({{"element", x.literal()}, {"h", em.num(rel.h / K.degree())},
                               {"h_rel", em.num(rel.h)}, {"H_rel", em.num(rel.H)}});
                } else if (height_elems->size() > 1) {
                    std::vector<FieldElement> xs;
                    for (const auto& e : *height_elems) xs.push_back(parse_element(K, e));
                    const auto rel = height_point(K, xs);
                    em.record({{"point", "[" + join(xs) + "]"}, {"h", em.num(rel.h / K.degree())},
                               {"h_rel", em.num(rel.h)}, {"H_rel", em.num(rel.H)}});
                } else {
                    throw Error(Errc::ParseError, "nothing to measure");
                }
            };
        });
    }

    // mahler
    auto mahler_poly = std::make_shared<std::string>();
    {
        CLI::App* s = sub("mahler", "Mahler measure, discriminant and the discriminant bounds");
        s->add_option("poly", *mahler_poly, "polynomial c0,c1,...")->required();
        s->callback([&] {
            action = [&] {
                const Polynomial f = parse_polynomial(field(), *mahler_poly);
                Json j{{"poly", f.pretty()}, {"mahler", em.num(mahler_measure(f))}};
                if (f.degree() >= 2) {
                    const auto r = check_discriminant_bounds(f);
                    j["discriminant"] = r.discriminant.literal();
                    j["part_i_lhs"] = em.num(r.part_i_lhs);
                    j["part_i_rhs"] = em.num(r.part_i_rhs);
                    j["part_i_pass"] = r.part_i_pass;
                    if (r.part_ii_checked) {
                        j["part_ii_lhs"] = em.num(r.part_ii_lhs);
                        j["part_ii_rhs"] = em.num(r.part_ii_rhs);
                        j["part_ii_pass"] = r.part_ii_pass;
                        j["part_ii_mahler_rhs"] = em.num(r.part_ii_mahler_rhs);
                        j["part_ii_mahler_pass"] = r.part_ii_mahler_pass;
                    } else {
                        j["part_ii_skipped"] = r.part_ii_skip_reason;
                    }
                }
                em.record(j);
            };
        });
    }

    // powerful
    auto pw_s = std::make_shared<int>(2);
    auto pw_elem = std::make_shared<std::string>();
    auto pw_poly = std::make_shared<std::string>();
    {
        CLI::App* s = sub("powerful", "s-powerful test for an element or a polynomial");
        s->add_option("-s", *pw_s, "power s >= 2")->required();
        s->add_option("element", *pw_elem, "element literal");
        s->add_option("--poly", *pw_poly, "polynomial c0,c1,... (multiplicity profile)");
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                if (!pw_poly->empty()) {
                    const Polynomial f = parse_polynomial(K, *pw_poly);
                    const auto prof = squarefree_decomposition(f);
                    Json parts = Json::array();
                    for (const auto& [gi, i] : prof.parts) parts.push_back({{"g", gi.pretty()}, {"multiplicity", i}});
                    Json j{{"poly", f.pretty()},
                           {"s", *pw_s},
                           {"powerful", is_powerful_polynomial(f, *pw_s)},
                           {"multiplicities_below", multiplicities_below(f, *pw_s)},
                           {"s_plus", prof.s_plus},
                           {"parts", parts}};
                    if (f.has_rational_coeffs()) j["canonical"] = canonical_representative(f, *pw_s).pretty();
                    em.record(j);
                    return;
                }
                if (pw_elem->empty()) throw Error(Errc::ParseError, "give an element or --poly");
                const FieldElement x = parse_element(K, *pw_elem);
                const auto v = is_powerful_element(K, x, *pw_s);
                Json j{{"element", x.literal()}, {"s", *pw_s}, {"powerful", v.powerful}};
                if (v.witness) {
                    j["witness"] = prime_label(v.witness->prime);
                    j["witness_exponent"] = v.witness->exponent;
                }
                em.record(j);
            };
        });
    }

    // factor
    auto fac_elem = std::make_shared<std::string>();
    {
        CLI::App* s = sub("factor", "prime ideal factorization of an element");
        s->add_option("element", *fac_elem, "element literal")->required();
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                for (const auto& pf : factor_element(K, parse_element(K, *fac_elem)))
                    em.record({{"prime", prime_label(pf.prime)},
                               {"kind", kind_name(pf.prime.kind)},
                               {"residue_norm", to_string(pf.prime.residue_norm)},
                               {"exponent", pf.exponent}});
            };
        });
    }

    // decompose
    auto dec_pt = std::make_shared<PointOpts>();
    auto dec_primes = std::make_shared<std::string>();
    auto dec_targets = std::make_shared<std::string>();
    {
        CLI::App* s = sub("decompose", "proximity and counting functions of a point");
        dec_pt->add(s);
        s->add_option("--primes", *dec_primes, "rational primes whose places join S (infinite places always in S)");
        s->add_option("--targets", *dec_targets, "comma separated targets in the base field");
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                const PlaceSet S = parse_places(K, *dec_primes);
                const auto targets = parse_elements(K, *dec_targets);
                Json j{{"point", dec_pt->describe()}};
                const auto r = dec_pt->algebraic() ? decompose(S, dec_pt->alg(), targets)
                                                   : decompose(S, dec_pt->elem(K), targets);
                j.update(nevanlinna_json(em, r));
                em.record(j);
            };
        });
    }

    // nevanlinna
    auto nv_check = std::make_shared<std::string>("first-main");
    auto nv_pt = std::make_shared<PointOpts>();
    auto nv_primes = std::make_shared<std::string>();
    auto nv_targets = std::make_shared<std::string>();
    auto nv_factors = std::make_shared<std::vector<std::string>>();
    auto nv_mults = std::make_shared<std::string>();
    auto nv_s = std::make_shared<int>(2);
    {
        CLI::App* s = sub("nevanlinna", "first main theorem, discriminant and counting lemma checks");
        s->add_option("--check", *nv_check, "which check")
            ->check(CLI::IsMember({"first-main", "distance-height", "field-discriminant", "radical-discriminant", "truncated-count", "audit"}));
        nv_pt->add(s);
        s->add_option("--primes", *nv_primes, "rational primes whose places join S");
        s->add_option("--targets", *nv_targets, "comma separated targets");
        s->add_option("--factor", *nv_factors, "irreducible factor c0,c1[,c2] (repeatable)");
        s->add_option("--mult", *nv_mults, "multiplicities of the factors, comma separated");
        s->add_option("-s", *nv_s, "power s for truncated-count");
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                const PlaceSet S = parse_places(K, *nv_primes);
                const auto targets = parse_elements(K, *nv_targets);
                const std::string& c = *nv_check;
                auto ineq = [&](const InequalityCheck& r) {
                    em.record({{"check", c}, {"lhs", em.num(r.lhs)}, {"rhs", em.num(r.rhs)}, {"pass", r.pass}});
                };
                if (c == "first-main") {
                    const auto r = nv_pt->algebraic() ? first_main_check(S, nv_pt->alg())
                                                      : first_main_check(S, nv_pt->elem(K));
                    em.record({{"check", c}, {"point", nv_pt->describe()}, {"h", em.num(r.h)},
                               {"m_plus_n", em.num(r.m_plus_n)}, {"pass", r.pass}});
                } else if (c == "distance-height") {
                    const AlgebraicNumber a = nv_pt->algebraic() ? nv_pt->alg()
                                                                 : AlgebraicNumber::rational(nv_pt->elem(K).a());
                    for (const auto& e : distance_height_check(S, a, targets))
                        em.record({{"check", c}, {"b", e.b.literal()}, {"lhs", em.num(e.lhs)}, {"rhs", em.num(e.rhs)},
                                   {"holds", e.holds}, {"identity_gap", em.num(e.identity_gap)}});
                } else if (c == "field-discriminant") {
                    ineq(field_discriminant_check(nv_pt->alg()));
                } else if (c == "audit") {
                    const auto a = truncation_audit();
                    em.record({{"check", c}, {"checked", a.checked}, {"violations", a.violations}});
                } else {
                    std::vector<Polynomial> fs;
                    for (const auto& f : *nv_factors) fs.push_back(parse_polynomial(NumberField::rationals(), f));
                    if (c == "radical-discriminant") {
                        ineq(radical_discriminant_check(fs));
                    } else {
                        FactoredPolynomial fp;
                        const auto ms = split_list(*nv_mults);
                        for (std::size_t i = 0; i < fs.size(); ++i)
                            fp.factors.emplace_back(fs[i], i < ms.size() ? std::stoi(ms[i]) : 1);
                        ineq(truncated_count_check(fp, targets, S, *nv_s));
                    }
                }
            };
        });
    }

    // vojta
    auto vj_pt = std::make_shared<PointOpts>();
    auto vj_primes = std::make_shared<std::string>();
    auto vj_targets = std::make_shared<std::string>();
    auto vj_params = std::make_shared<VojtaParams>();
    auto vj_eps = std::make_shared<double>(0.5);
    auto vj_c = std::make_shared<double>(0);
    auto vj_form = std::make_shared<std::string>("truncated");
    auto vj_scan = std::make_shared<std::string>();
    {
        CLI::App* s = sub("vojta", "Vojta-type inequality for a point, or a scan for exceptions");
        vj_pt->add(s);
        s->add_option("--primes", *vj_primes, "rational primes whose places join S");
        s->add_option("--targets", *vj_targets, "comma separated targets")->required();
        s->add_option("--eps", *vj_eps, "epsilon > 0");
        s->add_option("-c", *vj_c, "constant c");
        s->add_option("-d", vj_params->d, "degree bound d >= 2");
        s->add_option("--form", *vj_form, "original, counting or truncated")
            ->check(CLI::IsMember({"original", "counting", "truncated"}));
        s->add_option("--scan", *vj_scan, "scan all points of degree <= d with H <= this cap");
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                const PlaceSet S = parse_places(K, *vj_primes);
                const auto targets = parse_elements(K, *vj_targets);
                VojtaParams p = *vj_params;
                p.eps = *vj_eps;
                p.c = *vj_c;
                p.form = parse_form(*vj_form);
                if (!vj_scan->empty()) {
                    const Rational cap = parse_element(NumberField::rationals(), *vj_scan).a();
                    for (const auto& a : exceptional_scan(S, targets, p, cap)) {
                        Json j{{"point", a.describe()}, {"h", em.num(absolute_height(a))}};
                        em.record(j);
                    }
                    return;
                }
                const auto v = vj_pt->algebraic() ? vojta_report(S, targets, vj_pt->alg(), p)
                                                  : vojta_report(S, targets, vj_pt->elem(K), p);
                Json j{{"point", vj_pt->describe()}};
                j.update(vojta_json(em, v));
                em.record(j);
            };
        });
    }

    // bounds
    auto bd = std::make_shared<BoundInputs>();
    auto bd_seq = std::make_shared<std::string>();
    auto bd_primes = std::make_shared<std::string>();
    auto bd_c5 = std::make_shared<double>(0), bd_c6 = std::make_shared<double>(0);
    {
        CLI::App* s = sub("bounds", "explicit constant chain for (r, s) and a prefix of M terms");
        s->add_option("-r", bd->r, "degree r")->required();
        s->add_option("-s", bd->s, "power s")->required();
        s->add_option("--sequence", *bd_seq, "arith:a:n, geom:a:q:n, harm:n or file:<path>")->required();
        s->add_option("--primes", *bd_primes, "rational primes whose places join S");
        s->add_option("--n-exceptional", bd->n_exceptional, "number of exceptional points");
        s->add_option("--c5", *bd_c5, "lower O-term constant");
        s->add_option("--c6", *bd_c6, "upper O-term constant");
        s->add_flag("--subtract-c5", bd->subtract_c5, "subtract the c5 term in C0");
        s->callback([&] {
            action = [&] {
                BoundInputs in = *bd;
                in.field = field();
                in.B_M = parse_sequence_spec(in.field, *bd_seq).terms;
                in.S = parse_places(in.field, *bd_primes);
                in.c5 = *bd_c5;
                in.c6 = *bd_c6;
                const BoundReport r = compute_bounds(in);
                em.record({{"r", r.r},
                           {"s", r.s},
                           {"M", r.M},
                           {"B", em.num(r.B)},
                           {"aS", em.num(r.a_S)},
                           {"eps", em.num(r.eps)},
                           {"c", em.num(r.c)},
                           {"c1", em.num(r.c1)},
                           {"c2", em.num(r.c2)},
                           {"c3", em.num(r.c3)},
                           {"c4", em.num(r.c4)},
                           {"akr", em.num(r.a_kr)},
                           {"bkr", em.num(r.b_kr)},
                           {"C0", em.num(r.C0)},
                           {"C1", em.num(r.C1)},
                           {"exact",
                            {{"eps", to_string(r.eps_exact)},
                             {"c3", to_string(r.c3_exact)},
                             {"c4", to_string(r.c4_exact)}}},
                           {"conditional_on", "c5, c6 and n_exceptional as supplied"}});
            };
        });
    }

    // key-inequality
    auto ki_r = std::make_shared<int>(2), ki_s = std::make_shared<int>(2);
    {
        CLI::App* s = sub("key-inequality", "exhaustive check of M(1 - s+/s) - 2d^2 - d >= 1/r");
        s->add_option("-r", *ki_r, "degree r")->required();
        s->add_option("-s", *ki_s, "power s")->required();
        s->callback([&] {
            action = [&] {
                const auto k = key_inequality_check(*ki_r, *ki_s);
                em.record({{"r", k.r},
                           {"s", k.s},
                           {"cases", k.cases},
                           {"pass", k.pass},
                           {"min_slack", to_string(k.min_slack)},
                           {"min_slack_value", em.num(static_cast<long double>(k.min_slack.get_d()))},
                           {"argmin_d", k.argmin_d},
                           {"argmin_s_plus", k.argmin_s_plus}});
            };
        });
    }

    // count
    auto ct_cap = std::make_shared<std::string>("1");
    auto ct_deg = std::make_shared<int>(1);
    auto ct_list = std::make_shared<bool>(false);
    auto ct_c5 = std::make_shared<double>(0), ct_c6 = std::make_shared<double>(0);
    {
        CLI::App* s = sub("count", "points of P^1 of degree <= 2 over Q with bounded height");
        s->add_option("--cap", *ct_cap, "multiplicative height cap X (rational)")->required();
        s->add_option("--degree", *ct_deg, "1 or 2");
        s->add_option("--c5", *ct_c5, "lower O-term constant");
        s->add_option("--c6", *ct_c6, "upper O-term constant");
        s->add_flag("--list", *ct_list, "list the points instead of counting");
        s->callback([&] {
            action = [&] {
                if (!field().is_rationals()) throw Error(Errc::UnsupportedField, "counting runs over Q");
                EnumerationBudget b;
                b.height_cap = parse_element(NumberField::rationals(), *ct_cap).a();
                b.degree = *ct_deg;
                if (g.budget) b.max_points = g.budget;
                if (*ct_list) {
                    for (const auto& p : enumerate_points(b))
                        em.record({{"point", p.describe()}, {"degree", p.degree}, {"h", em.num(p.height)}});
                    return;
                }
                const auto r = count_points(b, *ct_c5, *ct_c6);
                em.record({{"cap", *ct_cap},
                           {"degree", *ct_deg},
                           {"count", r.count},
                           {"lower", em.num(r.lower)},
                           {"upper", em.num(r.upper)},
                           {"b_kr", em.num(r.b_kr)},
                           {"ratio", em.num(r.ratio)},
                           {"density", em.num(r.density)}});
            };
        });
    }

    // search
    auto sr = std::make_shared<SearchBox>();
    auto sr_seq = std::make_shared<std::string>();
    {
        CLI::App* s = sub("search", "brute-force search for polynomials with s-powerful values on a prefix");
        s->add_option("-r", sr->r, "degree r")->required();
        s->add_option("-s", sr->s, "power s")->required();
        s->add_option("--sequence", *sr_seq, "prefix: arith:a:n, geom:a:q:n, harm:n or file:<path>")->required();
        s->add_option("--bound", sr->coeff_bound, "coefficients n/d with |n|, d <= bound")->required();
        s->callback([&] {
            action = [&] {
                SearchBox box = *sr;
                box.prefix = parse_sequence_spec(field(), *sr_seq);
                if (g.budget) box.max_candidates = g.budget;
                for (const auto& f : search_polynomials(box)) {
                    Json values = Json::array();
                    for (const auto& b : box.prefix.terms) values.push_back(f(b).literal());
                    em.record({{"poly", f.pretty()}, {"coeffs", f.literal()}, {"values", values}});
                }
            };
        });
    }

    // sequence
    auto sq_seq = std::make_shared<std::string>();
    auto sq_mmax = std::make_shared<int>(10);
    {
        CLI::App* s = sub("sequence", "derived sequences, periods and the extension lemma");
        s->add_option("--sequence", *sq_seq, "arith:a:n, geom:a:q:n, harm:n or file:<path>")->required();
        s->add_option("--m-max", *sq_mmax, "largest period to try");
        s->callback([&] {
            action = [&] {
                const SequencePrefix B = parse_sequence_spec(field(), *sq_seq);
                const auto der = derive_sequences(B);
                auto one = [&](SequenceKind kind, const std::vector<FieldElement>* seq) {
                    Json j{{"kind", kind_name(kind)}, {"n", B.size()}};
                    if (!seq) {
                        j["skipped"] = "zero term";
                        em.record(j);
                        return;
                    }
                    j["terms"] = join(*seq);
                    const auto m = detect_period(*seq, *sq_mmax);
                    if (m) {
                        j["period"] = *m;
                        j["extension_lemma"] = extension_lemma_check(B, *m, kind).pass;
                    } else {
                        j["period"] = nullptr;
                    }
                    em.record(j);
                };
                one(SequenceKind::C, &der.C);
                one(SequenceKind::D, der.D ? &*der.D : nullptr);
                one(SequenceKind::E, der.E ? &*der.E : nullptr);
            };
        });
    }

    // transforms
    auto tr_poly = std::make_shared<std::string>();
    auto tr_seq = std::make_shared<std::string>();
    auto tr_j = std::make_shared<long>(1);
    auto tr_m = std::make_shared<int>(1);
    auto tr_kind = std::make_shared<std::string>("C");
    {
        CLI::App* s = sub("transforms", "shift, scale and inversion transforms with their value identities");
        s->add_option("--poly", *tr_poly, "polynomial c0,c1,...")->required();
        s->add_option("--sequence", *tr_seq, "arith:a:n, geom:a:q:n, harm:n or file:<path>")->required();
        s->add_option("-j", *tr_j, "transform index j");
        s->add_option("-m", *tr_m, "period m");
        s->add_option("--kind", *tr_kind, "C (shift), D (scale) or E (inversion)");
        s->callback([&] {
            action = [&] {
                const NumberField K = field();
                const Polynomial f = parse_polynomial(K, *tr_poly);
                const SequencePrefix B = parse_sequence_spec(K, *tr_seq);
                const SequenceKind kind = parse_kind(*tr_kind);
                Json j{{"kind", kind_name(kind)}, {"j", *tr_j}, {"m", *tr_m}, {"poly", f.pretty()}};
                if (kind == SequenceKind::C) {
                    j["transformed"] = shift_transform(f, *tr_j, B, *tr_m).pretty();
                } else if (kind == SequenceKind::D) {
                    j["transformed"] = scale_transform(f, *tr_j, B, *tr_m).pretty();
                } else {
                    const auto g = inversion_transform(f, *tr_j, B, *tr_m, f.degree());
                    j["numerator"] = g.numerator.pretty();
                    j["denominator"] = g.denominator.pretty();
                    j["is_polynomial"] = g.is_polynomial();
                }
                const auto chk = transform_value_identity_check(f, *tr_j, B, *tr_m, kind);
                j["identity_checked"] = chk.results.size();
                j["identity_pass"] = chk.pass;
                em.record(j);
            };
        });
    }

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        if (action) action();
        em.flush();
    } catch (const Error& e) {
        em.flush();
        err << "error: " << e.what() << '\n';
        return is_budget_error(e.code()) ? 3 : 2;
    } catch (const std::invalid_argument& e) {
        err << "error: bad number: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace powval::cli
