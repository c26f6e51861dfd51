// Acceptance run: one PASS/FAIL line per criterion, indented detail lines below it.
// Exit status is the number of failed criteria (capped at 1 for ctest).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "s34/critical.hpp"
#include "s34/fit.hpp"
#include "s34/lensing.hpp"
#include "s34/painleve.hpp"
#include "s34/param_domain.hpp"
#include "s34/parametrix.hpp"
#include "s34/spectral_curve.hpp"
#include "s34/tau_expansion.hpp"

using namespace s34;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    // Record a gated check.
    void check(bool ok, const std::string& what)
    {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok   " : "MISS ") + what);
    }
    // Record a diagnostic that does not affect the verdict.
    void note(const std::string& what) { lines.push_back("info " + what); }
};

std::string fmt(const char* f, double a)
{
    char b[200];
    std::snprintf(b, sizeof b, f, a);
    return b;
}
std::string fmt(const char* f, double a, double c)
{
    char b[200];
    std::snprintf(b, sizeof b, f, a, c);
    return b;
}
std::string fmt(const char* f, double a, double c, double d)
{
    char b[200];
    std::snprintf(b, sizeof b, f, a, c, d);
    return b;
}

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

// A grid of points strictly inside D: eta in (0.4, 2.2), small |mu|, nu a fraction of the critical value.
std::vector<Params> interior_grid(int n_eta, int n_mu, int n_nu)
{
    std::vector<Params> pts;
    for (int i = 0; i < n_eta; ++i)
        for (int j = 0; j < n_mu; ++j)
            for (int k = 0; k < n_nu; ++k) {
                const double eta = 0.4 + 1.8 * i / std::max(1, n_eta - 1);
                const double mu = n_mu == 1 ? 0.0 : -0.03 + 0.06 * j / (n_mu - 1);
                const double frac = n_nu == 1 ? 0.0 : -1.0 + 1.5 * k / (n_nu - 1);
                pts.push_back({eta, mu * eta, frac * 125.0 / 108 * eta * eta * eta});
            }
    return pts;
}

const std::vector<Params> three_points{{1, 0, 0}, {1, 0.1, 0.2}, {2, -0.05, 0.5}};

// ---------------------------------------------------------------------------

Outcome c1_branch_equation()
{
    Outcome o;
    double worst_ray = 0;
    for (double eta : {0.5, 1.0, 2.0}) worst_ray = std::max(worst_ray, std::abs(solve_sigma({eta, 0, 0}).sigma - 2.5 * eta));
    o.check(worst_ray <= 1e-12, fmt("sigma(eta,0,0) = 5 eta/2, worst error %.2e", worst_ray));

    const auto grid = interior_grid(5, 5, 8);
    int inside = 0;
    double worst_P = 0, min_margin = 1e300;
    for (const auto& p : grid) {
        const auto r = in_domain_D(p);
        if (!r.in_D) continue;
        ++inside;
        worst_P = std::max(worst_P, std::abs(eval_P(r.sigma, p).value));
        min_margin = std::min(min_margin, r.margin);
    }
    o.check(inside == 200, fmt("%g of 200 grid points in D", inside));
    o.check(worst_P <= 1e-12, fmt("max |P| = %.2e", worst_P));
    o.check(min_margin > 0, fmt("min dP/dsigma margin = %.3e", min_margin));

    // double-root probes: gamma_+ (sigma = 5 eta/3) and gamma_- (sigma = 0)
    bool fired = true;
    for (double eta : {0.5, 1.0, 2.0}) {
        const Params p{eta, 0, 125.0 / 108 * eta * eta * eta};
        fired = fired && std::abs(eval_P(5 * eta / 3, p).d_dsigma) < boundary_margin(5 * eta / 3) && !in_domain_D(p).in_D;
        const Params m{-eta, 0, 0};
        fired = fired && std::abs(eval_P(0, m).d_dsigma) < boundary_margin(0) && !in_domain_D(m).in_D;
    }
    o.check(fired, "double-root detection fires on the six gamma_+/gamma_- probes");
    o.check(min_margin >= boundary_margin(0), "and on none of the interior grid points");
    const double Ps = eval_P(2.5, {1, 0, 0}).d_dsigma;
    o.check(Ps == 25.0 / 8, fmt("P_sigma(1,0,0) = %.17g (25/8)", Ps));
    return o;
}

Outcome c2_bijection()
{
    Outcome o;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> ub(0.5, 3.0), uf(-0.95, 0.95), ut(0.05, 0.95);
    int n = 0;
    double worst_rt = 0, worst_j = 0, min_j = 1e300, ratio_lo = 1e300, ratio_hi = 0;
    bool solver_in_D = true;
    while (n < 50) {
        const double b = ub(rng);
        const double c = uf(rng) * std::pow(b, 1.5) / std::sqrt(6.0);
        const auto v = viete_roots(b, c);
        const bool upper = c >= 0;
        const double lo = upper ? v.z_zero : v.z_minus, hi = upper ? v.z_plus : v.z_zero;
        ABCoords q{lo + ut(rng) * (hi - lo), b, c};
        if (!(upper ? in_region_R(q) : in_region_R_tilde(q)) || std::abs(q.a) < 0.05) continue;
        ++n;
        const Params p = map_abc(q);
        const SigmaSolution s = solve_sigma(p);
        const ABCoords back = abc_from(p, s.sigma);
        worst_rt = std::max({worst_rt, std::abs(back.a - q.a), std::abs(back.b - q.b), std::abs(back.c - q.c)});
        solver_in_D = solver_in_D && in_domain_D(p).in_D;
        const double j = jacobian_abc(q);
        min_j = std::min(min_j, j);
        worst_j = std::max(worst_j, std::abs(jacobian_abc_fd(q) - j) / j);
        ratio_lo = std::min(ratio_lo, jacobian_abc_fd(q) / j);
        ratio_hi = std::max(ratio_hi, jacobian_abc_fd(q) / j);
    }
    o.check(worst_rt <= 1e-10, fmt("round trip on 50 samples of R u R~, worst %.2e", worst_rt));
    o.check(solver_in_D, "every image point is reported inside D");
    o.check(worst_j <= 1e-6, fmt("Jacobian vs finite differences, worst relative %.2e", worst_j));
    o.note(fmt("finite-difference / closed form lies in [%.9f, %.9f]: the prefactor 4/3 should be 4/5", ratio_lo, ratio_hi));
    o.check(min_j > 0, fmt("Jacobian minimum %.3e > 0", min_j));
    return o;
}

Outcome c3_g_matching()
{
    Outcome o;
    for (const auto& p : three_points) {
        const auto r = check_g_asymptotics(build_curve(p));
        o.check(r.rows.size() >= 6 && r.worst_slope_error <= 0.02,
                fmt("(%g,%g,%g)", p.eta, p.mu, p.nu) + fmt(" worst |slope + 1/3| = %.4f over all sheets/half-planes",
                                                          r.worst_slope_error));
    }
    return o;
}

Outcome c4_branch_exponents()
{
    Outcome o;
    for (const auto& p : three_points) {
        const auto c = build_curve(p);
        const auto bc = branch_coeffs(c);
        const auto fa = fit_branch_local(c, BranchPoint::alpha, 1.5);
        const auto fb = fit_branch_local(c, BranchPoint::beta, 1.5);
        const std::string at = fmt("(%g,%g,%g)", p.eta, p.mu, p.nu);
        o.check(std::abs(fa.exponent - 1.5) <= 0.01 && std::abs(fb.exponent - 1.5) <= 0.01,
                at + fmt(" exponents %.4f (alpha), %.4f (beta)", fa.exponent, fb.exponent));
        o.check(rel(std::abs(fa.prefactor), bc.rho_alpha) <= 1e-6 && rel(std::abs(fb.prefactor), bc.rho_beta) <= 1e-6,
                at + fmt(" prefactors vs rho_alpha, rho_beta: rel %.2e, %.2e", rel(std::abs(fa.prefactor), bc.rho_alpha),
                         rel(std::abs(fb.prefactor), bc.rho_beta)));
    }
    for (double eta : {1.0, 2.0}) {
        const auto c = build_curve_at({eta, 0, 125.0 / 108 * eta * eta * eta}, 5.0L * eta / 3);
        const auto bc = branch_coeffs(c);
        const auto fa = fit_branch_local(c, BranchPoint::alpha, 2.5);
        const auto fb = fit_branch_local(c, BranchPoint::beta, 2.5);
        o.check(std::abs(fa.exponent - 2.5) <= 0.02 && std::abs(fb.exponent - 2.5) <= 0.02,
                fmt("gamma_+ eta=%g exponents %.4f (alpha), %.4f (beta)", eta, fa.exponent, fb.exponent));
        const double ra = rel(std::abs(fa.prefactor), bc.rho_hat), rb = rel(std::abs(fb.prefactor), bc.rho_hat);
        o.check(ra <= 1e-6 && rb <= 1e-6, fmt("gamma_+ eta=%g prefactors vs rho_hat: rel %.3e, %.3e", eta, ra, rb));
        o.note(fmt("gamma_+ eta=%g fitted/rho_hat = %.10f; fitted vs (8 sqrt3/135) a^-7/2 (2ab - c): rel %.2e", eta,
                   std::abs(fb.prefactor) / bc.rho_hat, rel(std::abs(fb.prefactor), bc.rho_hat_beta)));
    }
    return o;
}

Outcome c5_lensing()
{
    Outcome o;
    std::vector<Params> pts = interior_grid(5, 2, 2);
    std::vector<SpectralCurve> curves;
    for (const auto& p : pts) curves.push_back(build_curve(p));
    const int interior = static_cast<int>(curves.size());
    curves.push_back(build_curve_at({1, 0, 125.0 / 108}, 5.0L / 3));
    {
        const auto sp = surface_param(3.0, 1.0);
        curves.push_back(build_curve_at({1, sp.mu_plus, sp.nu}, 3.0L));
    }
    double worst = 1e300;
    int contours = 0, min_samples = 1 << 30;
    bool all = true;
    for (const auto& c : curves) {
        const auto specs = default_contours(c, 1000);
        for (const auto& r : verify_inequalities(c, specs)) {
            ++contours;
            min_samples = std::min(min_samples, r.contour.samples);
            all = all && r.all_pass && r.min_signed_value > 0;
            worst = std::min(worst, r.min_signed_value);
        }
    }
    o.check(interior == 20, fmt("%g interior points plus 2 boundary points", interior));
    o.check(all && min_samples >= 1000,
            fmt("%g contours, >= %g samples each, min signed value %.3e", contours, min_samples, worst));
    double min_dist = 1e300;
    bool sep = true;
    for (const auto& p : pts) {
        if (p.mu < 0) continue;
        const auto s = gamma_C_separation(abc_from(p, solve_sigma(p).sigma));
        sep = sep && s.separated;
        min_dist = std::min(min_dist, s.min_distance);
    }
    o.check(sep && min_dist > 0, fmt("Gamma/C minimum distance over R points %.4f", min_dist));
    return o;
}

Outcome c6_parametrix()
{
    Outcome o;
    const std::vector<cplx> lams{{3, 2}, {-5, 1}, {2, -3}, {0.3, 0.01}, {-0.2, -4}, {7, 0.5}, {-1, -1}};
    for (const auto& p : three_points) {
        GlobalParametrix g{build_curve(p)};
        const auto j = jump_residuals(g, 20);
        const std::string at = fmt("(%g,%g,%g)", p.eta, p.mu, p.nu);
        o.check(j.points == 20 && j.alpha_cut <= 1e-10 && j.beta_cut <= 1e-10,
                at + fmt(" jumps (alpha, inf) %.1e, (-inf, beta) %.1e", j.alpha_cut, j.beta_cut));
        o.note(at + fmt(" boundary values vs M(x +- 1e-12 i): %.1e", j.limit_mismatch));
        const auto n = normalization_decay(g);
        o.check(std::abs(n.slope + 1) <= 0.05, at + fmt(" normalization slope %.4f", n.slope));
        const auto d = det_constancy(g);
        o.check(d.spread <= 1e-10, at + fmt(" det M = %.3f, spread %.1e", d.value.real(), d.spread));
        const double printed = reflection_residual(p, lams, true);
        o.check(printed <= 1e-12, at + fmt(" reflection with diag(1,-1,1): %.3e", printed));
        o.note(at + fmt(" reflection with diag(-1,1,-1): %.3e", reflection_residual(p, lams, false)));
    }
    return o;
}

Outcome c7_airy()
{
    Outcome o;
    const auto a = airy_series(10);
    o.check(a.s[1] == BigRational(5, 72) && a.t[1] == BigRational(-7, 72), "s1 = 5/72, t1 = -7/72 exactly");
    double worst = 0;
    for (int k = 1; k <= 10; ++k)
        worst = std::max(worst, std::abs(static_cast<double>(a.s[static_cast<std::size_t>(k)]) / airy_s_gamma(k) - 1));
    o.check(worst <= 1e-12, fmt("Gamma-function form for k <= 10, worst relative %.2e", worst));
    return o;
}

Outcome c8_stokes()
{
    Outcome o;
    const auto d = reference_stokes_data();
    o.check(stokes_check(d), "product identity exact over the integers for (0,-1,0,0,1,-1,0)");
    o.check(plane_membership({0, -1, 0, 0, 1, -1, 0}) == std::vector<int>{0, 1}, "plane membership {Pi0, Pi1}");
    o.check(stokes_antisymmetric(d), "s_k = -s_{k+8}");
    o.check(pi3_stokes_relation(pi3_stokes_data(1)), "3x3 relation for kappa = 1 data");
    return o;
}

Outcome c9_tau_consistency()
{
    Outcome o;
    const auto grid = interior_grid(5, 2, 5);
    double g = 0, c = 0, chi = 0;
    for (const auto& p : grid) {
        const auto r = dlogtau_consistency(p);
        g = std::max(g, *std::max_element(r.gradient.begin(), r.gradient.end()));
        c = std::max(c, *std::max_element(r.closedness.begin(), r.closedness.end()));
        const double s = solve_sigma(p).sigma;
        const double ref = -2 * (5 * p.eta - 3 * s) * eval_P(s, p).d_dsigma;
        chi = std::max(chi, std::abs(tau_leading(p).chi - ref) / std::abs(ref));
    }
    o.check(grid.size() == 50 && g <= 1e-6, fmt("d varpi0 = h/2 on 50 points, worst relative %.2e", g));
    const double anchor = dlogtau_consistency({1, 0, 0}).fd_gradient[2];
    o.check(rel(anchor, -109375.0 / 43008) <= 1e-6, fmt("d varpi0/d eta at (1,0,0) = %.12f (-109375/43008)", anchor));
    o.check(rel(-109375.0 / 43008, 0.5 * leading_hamiltonians({1, 0, 0}).h5_0) <= 1e-14, "and equals h5/2 = -15625/6144");
    o.check(chi <= 1e-12, fmt("chi = -2(5 eta - 3 sigma) P_sigma, worst relative %.2e", chi));
    o.check(c <= 1e-6, fmt("closedness cross-partials, worst relative %.2e", c));
    return o;
}

Outcome c10_topological()
{
    Outcome o;
    const Params p{1, 0.05, 0.1};
    const std::vector<double> hs{1e-2, 1e-3, 1e-4};
    const double expect[] = {2.0, 4.0}, tol[] = {0.02, 0.05};
    for (int K = 0; K <= 1; ++K) {
        const auto jet = expansion_jet<quad>(p, K);
        std::vector<double> r;
        for (double h : hs) {
            const auto v = string_residual<quad>(p, jet, quad(h));
            r.push_back(static_cast<double>(v[0] + v[1]));
        }
        const double s = loglog_slope(hs, r);
        o.check(std::abs(s - expect[K]) <= tol[K], fmt("K=%g string residual slope %.4f", K, s));
    }
    double par = 0;
    for (const Params q : {Params{1, 0.07, 0.1}, Params{1.5, 0.02, -0.4}, Params{0.6, 0.01, 0.05}}) {
        const auto a = expansion_jet<double>(q, 1);
        const auto b = expansion_jet<double>({q.eta, -q.mu, q.nu}, 1);
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t n = 0; n < a.u[k].size(); ++n) {
                par = std::max(par, std::abs(a.u[k][n] - b.u[k][n]) / (1 + std::abs(a.u[k][n])));
                par = std::max(par, std::abs(a.v[k][n] + b.v[k][n]) / (1 + std::abs(a.v[k][n])));
            }
    }
    o.check(par <= 1e-12, fmt("u even / v odd in mu, worst %.2e", par));
    double flow = 0;
    for (const auto& q : three_points) {
        const auto f = flow_compatibility(q);
        flow = std::max({flow, f.analytic[0], f.analytic[1], f.analytic[2]});
    }
    o.check(flow < 1e-10, fmt("flow compatibility residuals, worst %.2e", flow));
    return o;
}

Outcome c11_surface()
{
    Outcome o;
    double worst = 0;
    int n = 0;
    for (int i = 0; i < 10; ++i) {
        const double eta = -2.0 + 4.0 * (i + 0.5) / 10;
        const double lo = std::max(5 * eta / 3, 0.0);
        for (int k = 0; k < 5; ++k) {
            const double sigma = lo + (k == 0 ? 0.0 : std::pow(10.0, k - 3.0)) * (1 + std::abs(eta));
            const auto sp = surface_param(sigma, eta);
            for (double mu : {sp.mu_plus, sp.mu_minus}) {
                const Params p{eta, mu, sp.nu};
                const double sc = surface_discriminant_scale(p), d = std::abs(surface_discriminant(p));
                const double e = sc == 0 ? d : d / sc;
                worst = std::isnan(e) ? e : std::max(worst, e);
                ++n;
            }
        }
    }
    o.check(n == 100 && worst <= 1e-10, fmt("%g parametrized samples (gamma limits included), worst relative %.2e", n, worst));
    const auto m = gauss_angle_max();
    const double eta_star = 2 / (5 * std::sqrt(5.0)) * std::pow(3.0, 0.75);
    o.check(std::abs(m.angle - 1.580416) <= 1e-4, fmt("Gauss angle maximum %.7f", m.angle));
    o.check(std::abs(m.eta - eta_star) <= 1e-4, fmt("at eta = %.9f (closed form %.9f)", m.eta, eta_star));
    double small = 0;
    for (double eta : {1e-3, 1e-4, 1e-5}) small = std::max(small, std::abs(gauss_angle(eta) / std::sqrt(40 * eta / 3) - 1));
    o.check(small <= 0.05, fmt("small-eta sqrt(40 eta/3) law, worst relative %.4f", small));
    return o;
}

Outcome c12_modified()
{
    Outcome o;
    double red = 0;
    for (double e0 : {0.5, 1.0, 2.0}) red = std::max(red, modified_vs_critical(e0));
    o.check(red <= 1e-10, fmt("g-hat(.;0) = g on gamma_+, worst %.2e", red));
    double slope = 0;
    for (double e0 : {1.0, 2.0}) {
        const auto m = modified_curve(e0, 1.1 * e0, 0.9 * 125.0 / 108 * e0 * e0 * e0);
        slope = std::max(slope, modified_asymptotics(m).worst_slope_error);
    }
    o.check(slope <= 0.02, fmt("eta0 > 0 matching, worst |slope + 1/3| = %.2e", slope));
    bool exact = true;
    for (double e0 : {-0.5, -1.0, -2.0}) exact = exact && modified_asymptotics(modified_curve(e0, e0, 0.3)).exact;
    o.check(exact, "eta0 < 0 matching: residual identically zero (rounding level)");
    const double C = scaling_constant(1, 0, -1);
    o.check(std::abs(C - std::pow(10.0 / 3, 0.2)) <= 1e-12, fmt("C(1,(0,-1)) = %.15f", C));
    double lim = 0;
    for (auto [ne, nn] : std::vector<std::pair<double, double>>{{0, -1}, {1, 0}, {1, 1}})
        for (double hb : {1e-3, 1e-4}) lim = std::max(lim, std::abs(scaling_limit_plus(1, ne, nn, -1, hb) + 1));
    o.check(lim <= 1e-6, fmt("hbar^-4/5 xs -> x at beta-hat, worst %.2e", lim));
    const double nu_exp = nu_scaling_exponent(1, -0.7, {1e-2, 1e-3, 1e-4});
    o.check(std::abs(nu_exp - 0.8) <= 0.01, fmt("nu(hbar) exponent %.6f", nu_exp));
    return o;
}

Outcome c13_painleve()
{
    Outcome o;
    const auto tr = pi_integrate(-24, -1, 1e-3, true);
    const double res = pi_hamiltonian_residual(tr);
    o.check(res <= 1e-8, fmt("dH/dx + q on the trajectory from -24 (|q| <= 10), max %.2e", res));
    if (tr.pole) o.note(fmt("trajectory stopped at the pole guard near x = %.4f", tr.pole_x));
    const double q0 = tr.states.front().q;
    o.check(std::abs(q0 - 2) <= 0.02, fmt("q(-24) = %.6f", q0));
    double det = 0;
    for (cplx lam : {cplx(0.4, 0.3), cplx(-2, 1), cplx(5, -0.1)})
        det = std::max(det, std::abs(schlesinger_factor(lam, {-3, 0.7, 0.2, 1.3, 1}, 1, 1e-2).determinant() - 1.0));
    o.check(det <= 1e-14, fmt("Schlesinger factor |det - 1| = %.1e", det));
    for (double e0 : {0.5, 1.0, 2.0}) {
        const double nu0 = 125.0 / 108 * e0 * e0 * e0;
        const double th = tauhat0_exponent(e0, nu0, e0);
        const double vp = tau_leading_at({e0, 0, nu0}, 5 * e0 / 3).varpi0;
        o.check(std::abs(th - vp) <= 1e-10, fmt("eta0=%g tau-hat exponent %.12f vs varpi0 %.12f", e0, th, vp));
        const auto g = tauhat0_gradient(e0, nu0, e0);
        const auto h = leading_hamiltonians_at({e0, 0, nu0}, 5 * e0 / 3);
        const double ge = std::abs(g[0] - 0.5 * h.h5_0), gn = std::abs(g[1] - 0.5 * h.h1_0);
        o.check(ge <= 1e-6 && gn <= 1e-6, fmt("eta0=%g gradient mismatch (d eta, d nu) = %.3e, %.3e", e0, ge, gn));
        o.note(fmt("eta0=%g gradient / grad varpi0 = %.10f, %.10f", e0, g[0] / (0.5 * h.h5_0), g[1] / (0.5 * h.h1_0)));
    }
    return o;
}

Outcome c14_tritronquee()
{
    Outcome o;
    const double target = 1 / std::sqrt(6.0);
    for (auto [ne, nn] : std::vector<std::pair<double, double>>{{0, -1}, {1, 0}, {1, 1}}) {
        const double v = tritronquee_constant(1, Stratum::gamma_plus, ne, nn);
        o.check(std::abs(v - target) <= 1e-6, fmt("gamma_+ n=(%g,%g): %.12f", ne, nn, v));
    }
    for (double e0 : {-0.5, -1.0, -2.0}) {
        const double v = tritronquee_constant(e0, Stratum::gamma_minus);
        o.check(std::abs(v - target) <= 1e-6, fmt("gamma_- eta0=%g: %.12f", e0, v));
    }
    o.note(fmt("target 6^-1/2 = %.12f", target));
    return o;
}

Outcome c15_matrix_model()
{
    Outcome o;
    o.check(matrix_model_ideal(Rational(1), Rational(-5, 72), Rational(1, 4)) == Rational(0),
            "J(1; -5/72, 1/4, 0) = 0 in exact rational arithmetic");
    for (const auto& p : three_points) {
        const auto m = multiscaling_check(p, true);
        o.check(m.error <= 1e-6, fmt("(%g,%g,%g)", p.eta, p.mu, p.nu) +
                                     fmt(" printed substitution: limit %.10f vs 5 eta/3 - sigma = %.10f", m.extrapolated,
                                         m.target));
        const auto c = multiscaling_check(p, false);
        o.note(fmt("  sign-corrected substitution: limit %.12f, error %.2e", c.extrapolated, c.error));
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Branch equation", c1_branch_equation},
        {"Coordinate bijection", c2_bijection},
        {"g-function matching", c3_g_matching},
        {"Branch-point exponents", c4_branch_exponents},
        {"Lensing certification", c5_lensing},
        {"Global parametrix", c6_parametrix},
        {"Airy series", c7_airy},
        {"Stokes algebra", c8_stokes},
        {"tau-differential consistency", c9_tau_consistency},
        {"Topological expansion", c10_topological},
        {"Critical surface", c11_surface},
        {"Modified curves and scaling maps", c12_modified},
        {"Painleve I", c13_painleve},
        {"Degeneration constant", c14_tritronquee},
        {"Matrix-model bridge", c15_matrix_model},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.pass = false;
            r.lines.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu. %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
        for (const auto& l : r.lines) std::printf("       %s\n", l.c_str());
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed > 0 ? 1 : 0;
}
