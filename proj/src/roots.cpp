#include "powval/heights.hpp"

#include "bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace powval {

namespace {

using detail::BigComplex;
using detail::BigFloat;

constexpr int kStartBits = 64;
constexpr int kMaxBits = 1024;

BigComplex embed_big(const FieldElement& c, int embedding, mpfr_prec_t prec) {
    BigFloat a(c.a(), prec);
    if (c.b() == 0) return {a, BigFloat(prec)};
    BigFloat b(c.b(), prec);
    BigFloat r = sqrt(BigFloat(Rational(std::labs(c.d())), prec));
    if (embedding != 0) b = -b;
    if (c.d() > 0) return {a + b * r, BigFloat(prec)};
    return {a, b * r};
}

struct Evaluation {
    BigComplex value, derivative;
    BigFloat magnitude;  // sum |a_k| |z|^k, for the rounding allowance
};

Evaluation horner(const std::vector<BigComplex>& a, const BigComplex& z) {
    const mpfr_prec_t prec = z.re.prec();
    Evaluation e{BigComplex(prec), BigComplex(prec), BigFloat(prec)};
    const BigFloat az = z.abs();
    for (std::size_t i = a.size(); i-- > 0;) {
        e.derivative = e.derivative * z + e.value;
        e.value = e.value * z + a[i];
        e.magnitude = e.magnitude * az + a[i].abs();
    }
    return e;
}

// Aberth iteration followed by the inclusion test: with W_i = p(z_i) / prod_{j != i}(z_i - z_j)
// for monic p of degree n, pairwise disjoint discs D(z_i, n |W_i|) each hold exactly one root.
std::optional<std::vector<RootEnclosure>> attempt(const std::vector<BigComplex>& coeffs, std::vector<BigComplex>& z,
                                                  mpfr_prec_t prec) {
    const std::size_t n = coeffs.size() - 1;
    const BigFloat one(1.0L, prec);
    const long double tiny = std::ldexp(1.0L, -static_cast<int>(prec) + 4);
    for (int iter = 0; iter < 400; ++iter) {
        long double worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Evaluation e = horner(coeffs, z[i]);
            if (e.value.abs().to_ld() == 0) continue;
            BigComplex w = e.value / e.derivative;
            BigComplex sum(prec);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum = sum + BigComplex(one, BigFloat(prec)) / (z[i] - z[j]);
            BigComplex step = w / (BigComplex(one, BigFloat(prec)) - w * sum);
            z[i] = z[i] - step;
            const long double rel = step.abs().to_ld() / std::max(1.0L, z[i].abs().to_ld());
            worst = std::max(worst, rel);
        }
        if (worst < tiny) break;
    }

    std::vector<RootEnclosure> out(n);
    const long double u = std::ldexp(1.0L, -static_cast<int>(prec));
    for (std::size_t i = 0; i < n; ++i) {
        Evaluation e = horner(coeffs, z[i]);
        BigComplex prod(one, BigFloat(prec));
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = prod * (z[i] - z[j]);
        const long double denom = prod.abs().to_ld();
        if (!(denom > 0)) return std::nullopt;
        const long double residual = e.value.abs().to_ld() + 4.0L * (n + 2) * u * e.magnitude.to_ld();
        const long double radius = n * residual / denom * (1.0L + 64 * u) + 4 * u * std::max(1.0L, z[i].abs().to_ld());
        out[i] = {{z[i].re.to_ld(), z[i].im.to_ld()}, radius};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius) return std::nullopt;
    return out;
}

bool real_coefficients(const Polynomial& f) {
    if (f.field().d() < 0) return f.has_rational_coeffs();
    return true;
}

}  // namespace

RootIsolation isolate_roots(const Polynomial& f, int embedding) {
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "root isolation of a constant");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const Polynomial g = f.monic();
    std::vector<BigComplex> z;
    for (mpfr_prec_t prec = kStartBits; prec <= kMaxBits; prec *= 2) {
        std::vector<BigComplex> coeffs;
        for (const auto& c : g.coeffs()) coeffs.push_back(embed_big(c, embedding, prec));
        if (z.empty()) {
            // Fujiwara-type radius with points spread on a circle
            long double radius = 0;
            for (std::size_t k = 0; k < n; ++k) {
                long double ak = coeffs[k].abs().to_ld();
                if (ak > 0) radius = std::max(radius, 2 * std::pow(ak, 1.0L / static_cast<long double>(n - k)));
            }
            radius = std::max(radius, 1.0L);
            for (std::size_t k = 0; k < n; ++k) {
                long double theta = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
                z.emplace_back(BigFloat(radius * std::cos(theta), prec), BigFloat(radius * std::sin(theta), prec));
            }
        } else {
            for (auto& zi : z) zi = BigComplex(BigFloat(zi.re, prec), BigFloat(zi.im, prec));
        }
        auto found = attempt(coeffs, z, prec);
        if (!found) continue;
        auto roots = std::move(*found);
        if (real_coefficients(f)) {
            // a disc meeting its mirror image holds a real root
            for (auto& r : roots)
                if (std::fabs(r.center.imag()) <= r.radius) r.center.imag(0.0L);
        }
        std::sort(roots.begin(), roots.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
            const long double tol = a.radius + b.radius;
            if (std::fabs(a.center.real() - b.center.real()) > tol) return a.center.real() < b.center.real();
            return a.center.imag() < b.center.imag();
        });
        return {std::move(roots), static_cast<int>(prec)};
    }
    throw Error(Errc::RootCertificationFailure, "could not certify roots of " + f.pretty() + " at " +
                                                     std::to_string(kMaxBits) + " bits");
}

long double mahler_measure(const Polynomial& f, long double eps) {
    if (!(eps > 0)) throw Error(Errc::BadPrecision, "eps must be positive");
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Mahler measure of 0");
    const long double lead = std::abs(embed(f.leading(), 0));
    if (f.degree() == 0) return lead;
    long double lower = lead, upper = lead;
    for (const auto& [part, mult] : squarefree_parts(f)) {
        const RootIsolation iso = isolate_roots(part);
        long double lo = 1, hi = 1;
        for (const auto& r : iso.roots) {
            const long double m = std::abs(r.center);
            lo *= std::max(1.0L, m - r.radius);
            hi *= std::max(1.0L, m + r.radius);
        }
        lower *= std::pow(lo, mult);
        upper *= std::pow(hi, mult);
    }
    if (upper - lower > eps)
        throw Error(Errc::RootCertificationFailure, "Mahler measure enclosure wider than eps for " + f.pretty());
    return (lower + upper) / 2;
}

}  // namespace powval
