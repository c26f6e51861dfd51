#include "s34/lensing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "s34/fit.hpp"
#include "s34/param_domain.hpp"

namespace s34 {

namespace {

constexpr double kLensHalfAngle = pi / 12;
constexpr double kBendAlpha = 11 * pi / 15;
constexpr double kBendBeta = -4 * pi / 15;
constexpr double kBendLength = 1.0;

} // namespace

std::string to_string(ContourKind k)
{
    switch (k) {
    case ContourKind::gamma5: return "gamma5";
    case ContourKind::gamma_m3: return "gamma_m3";
    case ContourKind::lens_upper_alpha: return "lens_upper_alpha";
    case ContourKind::lens_lower_alpha: return "lens_lower_alpha";
    case ContourKind::lens_upper_beta: return "lens_upper_beta";
    case ContourKind::lens_lower_beta: return "lens_lower_beta";
    }
    return "?";
}

std::vector<ContourSpec> default_contours(const SpectralCurve& c, int samples)
{
    const double R = 10.0 * (1.0 + std::abs(c.alpha - c.beta));
    std::vector<ContourSpec> v;
    v.push_back({ContourKind::gamma5, c.alpha, 9 * pi / 14, samples, 1e-6, R, kBendAlpha, kBendLength});
    v.push_back({ContourKind::gamma_m3, c.beta, -5 * pi / 14, samples, 1e-6, R, kBendBeta, kBendLength});
    v.push_back({ContourKind::lens_upper_alpha, c.alpha, kLensHalfAngle, samples, 1e-6, R, 0, 0});
    v.push_back({ContourKind::lens_lower_alpha, c.alpha, -kLensHalfAngle, samples, 1e-6, R, 0, 0});
    v.push_back({ContourKind::lens_upper_beta, c.beta, pi - kLensHalfAngle, samples, 1e-6, R, 0, 0});
    v.push_back({ContourKind::lens_lower_beta, c.beta, -pi + kLensHalfAngle, samples, 1e-6, R, 0, 0});
    return v;
}

std::vector<cplx> contour_points(const ContourSpec& s)
{
    std::vector<cplx> pts;
    const cplx P0(s.anchor, 0.0);
    if (s.bend_length > 0) {
        // quadratic Bezier leaving at bend_angle, then the asymptotic ray
        const cplx P1 = P0 + std::polar(s.bend_length, s.bend_angle);
        const cplx P2 = P1 + std::polar(s.bend_length, s.direction);
        const int nb = s.samples / 4;
        // log-spaced in the Bezier parameter near the anchor
        for (double t : logspace(s.r_min / (2 * s.bend_length), 1.0, nb)) {
            pts.push_back((1 - t) * (1 - t) * P0 + 2 * t * (1 - t) * P1 + t * t * P2);
        }
        const int nr = s.samples - nb;
        for (int i = 1; i <= nr; ++i) {
            const double r = s.r_max * i / nr;
            pts.push_back(P2 + std::polar(r, s.direction));
        }
    } else {
        const int nlog = s.samples / 2;
        const double mid = std::min(1.0, s.r_max);
        for (double r : logspace(s.r_min, mid, nlog)) pts.push_back(P0 + std::polar(r, s.direction));
        const int nlin = s.samples - nlog;
        for (int i = 1; i <= nlin; ++i) {
            const double r = mid + (s.r_max - mid) * i / nlin;
            pts.push_back(P0 + std::polar(r, s.direction));
        }
    }
    return pts;
}

double signed_value(const SpectralCurve& c, ContourKind k, cplx lam)
{
    const auto g = g_all_ld(c, cplxl(lam.real(), lam.imag()));
    const long double d32 = (g[2] - g[1]).real();
    const long double d21 = (g[1] - g[0]).real();
    switch (k) {
    case ContourKind::gamma5: return static_cast<double>(d32);
    case ContourKind::gamma_m3: return static_cast<double>(d21);
    case ContourKind::lens_upper_alpha:
    case ContourKind::lens_lower_alpha: return static_cast<double>(-d32);
    case ContourKind::lens_upper_beta:
    case ContourKind::lens_lower_beta: return static_cast<double>(-d21);
    }
    return 0;
}

std::vector<SignReport> verify_inequalities(const SpectralCurve& c, const std::vector<ContourSpec>& contours)
{
    std::vector<SignReport> out;
    for (const auto& s : contours) {
        SignReport r;
        r.contour = s;
        r.min_signed_value = std::numeric_limits<double>::infinity();
        for (const cplx& lam : contour_points(s)) {
            if (std::abs(lam - cplx(s.anchor, 0)) < s.r_min) continue;
            const double v = signed_value(c, s.kind, lam);
            if (v < r.min_signed_value) {
                r.min_signed_value = v;
                r.worst_point = lam;
            }
        }
        r.all_pass = r.min_signed_value > 0.0;
        out.push_back(r);
    }
    return out;
}

double cut_real_part(const SpectralCurve& c, double x)
{
    const auto g = g_all_ld(c, cplxl(x, 0.0L), HalfPlane::upper);
    if (x > c.alpha) return static_cast<double>((g[2] - g[1]).real());
    if (x < c.beta) return static_cast<double>((g[1] - g[0]).real());
    throw DomainError("cut_real_part: x must lie outside [beta, alpha]");
}

SeparationReport gamma_C_separation(const ABCoords& q, int samples)
{
    const double a = std::abs(q.a), b = q.b, c = q.c;
    const double X = 3.0 * (a + std::sqrt(std::abs(b)) + 1.0);
    const double Ymax = 3.0 * X;

    // Gamma: y^2 = 3(x^2 - a^2), upper half, both branches.
    std::vector<cplx> gam;
    const double tmax = std::acosh(std::max(X / std::max(a, 1e-12), 1.0) + 1.0);
    for (int i = 0; i <= samples; ++i) {
        const double t = tmax * i / samples;
        const double x = a * std::cosh(t), y = std::sqrt(3.0) * a * std::sinh(t);
        gam.emplace_back(x, y);
        gam.emplace_back(-x, y);
    }

    // C: y^2 = (6x^3 - 3bx + 2c) / (6x), upper half; real-axis crossings included exactly.
    std::vector<cplx> cc;
    auto add_c = [&](double x) {
        if (x == 0.0) return;
        const double y2 = (6 * x * x * x - 3 * b * x + 2 * c) / (6 * x);
        if (y2 >= 0 && y2 <= Ymax * Ymax) cc.emplace_back(x, std::sqrt(y2));
    };
    for (double x : linspace(-X, X, 4 * samples + 1)) add_c(x);
    for (double s : logspace(1e-8, 1.0, samples)) {
        add_c(s);
        add_c(-s);
    }
    if (b > 0 && std::abs(c) <= std::pow(b, 1.5) / std::sqrt(6.0)) {
        const VieteRoots v = viete_roots(b, c);
        for (double z : {v.z_minus, v.z_zero, v.z_plus}) cc.emplace_back(z, 0.0);
    }

    double best = std::numeric_limits<double>::infinity();
    for (const cplx& p : cc)
        for (const cplx& g : gam) best = std::min(best, std::abs(p - g));
    SeparationReport r;
    r.min_distance = best;
    r.separated = best > 1e-6;
    return r;
}

} // namespace s34
