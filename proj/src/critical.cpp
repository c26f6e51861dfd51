#include "s34/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "s34/fit.hpp"
#include "s34/param_domain.hpp"

namespace s34 {

namespace {

using quad = boost::multiprecision::cpp_bin_float_quad;

std::array<double, 12> discriminant_terms(const Params& p)
{
    const double e = p.eta, m = p.mu, n = p.nu;
    const double m2 = m * m, m4 = m2 * m2;
    return {78125.0 / 93312.0 * std::pow(e, 12) * n,
            3125.0 / 15552.0 * std::pow(e, 10) * m2,
            -625.0 / 216.0 * std::pow(e, 9) * n * n,
            -75.0 / 16.0 * std::pow(e, 7) * m2 * n,
            -17.0 / 18.0 * std::pow(e, 5) * m4,
            15.0 / 4.0 * std::pow(e, 6) * n * n * n,
            153.0 / 20.0 * std::pow(e, 4) * m2 * n * n,
            6.0 * e * e * m4 * n,
            -54.0 / 25.0 * e * e * e * std::pow(n, 4),
            m4 * m2,
            -81.0 / 25.0 * e * m2 * n * n * n,
            1458.0 / 3125.0 * std::pow(n, 5)};
}

double nu_crit(double eta0) { return 125.0 / 108.0 * eta0 * eta0 * eta0; }

// Limit at h = 0 of the interpolating polynomial through (h_k, y_k).
template <class T>
T neville_at_zero(const std::vector<double>& h, std::vector<T> y)
{
    const std::size_t n = h.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            y[i] = (T(h[i + m]) * y[i] - T(h[i]) * y[i + 1]) / T(h[i + m] - h[i]);
    return y[0];
}

std::array<cplxl, 3> ghat_all_ld(const ModifiedCurve& m, cplxl lam, HalfPlane side)
{
    const auto u = sheet_roots_ld(m.base, lam, side);
    return {horner(m.g, u[0]), horner(m.g, u[1]), horner(m.g, u[2])};
}

// psi ~ k (lam - beta)^{5/2} with k > 0 near beta; pick the fifth root of psi along sqrt(lam - beta).
cplxl fifth_root_near(cplxl psi, cplxl ref)
{
    const cplxl w0 = std::pow(psi, 0.2L);
    const cplxl rot = std::polar(1.0L, 2.0L * std::acos(-1.0L) / 5.0L);
    cplxl best = w0, w = w0;
    for (int k = 1; k < 5; ++k) {
        w *= rot;
        if ((w * std::conj(ref)).real() > (best * std::conj(ref)).real()) best = w;
    }
    return best;
}

cplxl to_ld(cplx z) { return {z.real(), z.imag()}; }

HalfPlane side_of(cplx lam) { return lam.imag() < 0 ? HalfPlane::lower : HalfPlane::upper; }

// Root of nu + s^3/2 - 5/4 eta s^2 = 0 on the branch of D, polished in quad precision.
quad sigma_mu0(const quad& eta, const quad& nu)
{
    const Params p{static_cast<double>(eta), 0.0, static_cast<double>(nu)};
    quad s = solve_sigma(p).sigma;
    for (int it = 0; it < 60; ++it) {
        const quad F = nu + s * s * s / 2 - quad(5) / 4 * eta * s * s;
        const quad dF = quad(3) / 2 * s * s - quad(5) / 2 * eta * s;
        const quad ds = F / dF;
        s -= ds;
        if (abs(ds) <= 1e-32 * abs(s)) break;
    }
    return s;
}

} // namespace

// ----------------------------------------------------------------------------
// Critical surface

double surface_discriminant(const Params& p)
{
    double s = 0;
    for (double t : discriminant_terms(p)) s += t;
    return s;
}

double surface_discriminant_scale(const Params& p)
{
    double s = 0;
    for (double t : discriminant_terms(p)) s += std::abs(t);
    return s;
}

SurfacePoint surface_param(double sigma, double eta)
{
    if (!std::isfinite(sigma) || !std::isfinite(eta)) throw DomainError("surface_param: non-finite input");
    if (sigma < std::max(5.0 * eta / 3.0, 0.0)) throw DomainError("surface_param: need sigma >= max(5 eta/3, 0)");
    SurfacePoint s;
    s.nu = -5.0 * sigma / 12.0 * (5.0 * eta * eta - 9.0 * eta * sigma + 3.0 * sigma * sigma);
    const double d = 5.0 * eta - 3.0 * sigma;
    s.mu_plus = std::sqrt(2.0 * sigma) / 12.0 * d * d;
    s.mu_minus = -s.mu_plus;
    s.t1 = s.nu;
    s.t2_plus = s.mu_plus;
    s.t2_minus = s.mu_minus;
    s.t5 = eta;
    return s;
}

double gauss_angle(double eta)
{
    const double e4 = 15625.0 * std::pow(eta, 4);
    const double r = (e4 - 4320.0 * eta + 1296.0) / (e4 + 4320.0 * eta + 1296.0);
    return std::acos(std::clamp(r, -1.0, 1.0));
}

GaussMax gauss_angle_max(double lo, double hi, double tol)
{
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = gauss_angle(c), fd = gauss_angle(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = gauss_angle(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = gauss_angle(d);
        }
    }
    const double e = 0.5 * (a + b);
    return {e, gauss_angle(e)};
}

// ----------------------------------------------------------------------------
// Modified curves

ModifiedCurve modified_curve(double eta0, double eta_hat, double nu_hat)
{
    if (eta0 == 0.0 || !std::isfinite(eta0)) throw DomainError("modified_curve: eta0 must be nonzero");
    ModifiedCurve m;
    m.eta0 = eta0;
    m.eta_hat = eta_hat;
    m.nu_hat = nu_hat;
    m.positive = eta0 > 0;
    const long double e0 = eta0, eh = eta_hat, nh = nu_hat;
    if (m.positive) {
        m.base = build_curve_at({eta0, 0.0, nu_crit(eta0)}, 5.0L * e0 / 3.0L);
        m.alpha_hat = std::sqrt(5.0 * eta0 / 6.0);
        m.beta_hat = m.base.beta;
        const long double k = 2.5L * e0;
        const long double A = -5.0L / 3.0L * (2.0L * e0 - eh);
        const long double B = -25.0L / 18.0L * e0 * (2.0L * eh - e0);
        const long double Nt = nh - 125.0L / 108.0L * e0 * e0 * (3.0L * eh - 2.0L * e0);
        m.g = {3.0L / 7.0L, 0.0L, (3.0L * A - k) / 5.0L, 0.0L, (3.0L * B - k * A) / 3.0L, 0.0L, -k * B + Nt, 0.0L};
    } else {
        m.base = build_curve_at({eta0, 0.0, 0.0}, 0.0L);
        m.g = {3.0L / 7.0L, 0.0L, eh, 0.0L, 0.0L, 0.0L, nh, 0.0L};
    }
    return m;
}

std::array<cplx, 3> ghat_all(const ModifiedCurve& m, cplx lam, HalfPlane side)
{
    const auto g = ghat_all_ld(m, to_ld(lam), side);
    return {cplx(g[0]), cplx(g[1]), cplx(g[2])};
}

DecayReport modified_asymptotics(const ModifiedCurve& m)
{
    DecayReport rep;
    const auto radii = logspace(1e3, 1e6, 13);
    const long double eh = m.eta_hat, nh = m.nu_hat;
    const double dirs[] = {pi / 6, pi / 2, 5 * pi / 6};
    bool all_exact = true;
    for (HalfPlane side : {HalfPlane::upper, HalfPlane::lower}) {
        for (double d0 : dirs) {
            const double th = side == HalfPlane::upper ? d0 : -d0;
            std::vector<std::vector<double>> res(3);
            std::vector<double> gscale(3, 0.0);
            for (double r : radii) {
                const cplxl lam = std::polar<long double>(r, th);
                const auto g = ghat_all_ld(m, lam, side);
                for (int j = 1; j <= 3; ++j) {
                    const cplxl t = theta_phase_ld(lam, hat_index(j, side), eh, 0.0L, nh, side);
                    res[j - 1].push_back(static_cast<double>(std::abs(g[j - 1] - t)));
                    gscale[j - 1] = std::max(gscale[j - 1], static_cast<double>(std::abs(g[j - 1])));
                }
            }
            for (int j = 1; j <= 3; ++j) {
                SheetDecay row;
                row.sheet = j;
                row.side = side;
                row.direction = th;
                row.max_residual = *std::max_element(res[j - 1].begin(), res[j - 1].end());
                if (row.max_residual <= 1e-17 * gscale[j - 1]) {
                    row.slope = std::numeric_limits<double>::quiet_NaN();
                } else {
                    all_exact = false;
                    row.slope = loglog_slope(radii, res[j - 1]);
                    rep.worst_slope_error = std::max(rep.worst_slope_error, std::abs(row.slope + 1.0 / 3.0));
                }
                rep.rows.push_back(row);
            }
        }
    }
    rep.exact = all_exact;
    return rep;
}

double modified_vs_critical(double eta0, int samples)
{
    if (eta0 <= 0) throw DomainError("modified_vs_critical: eta0 must be positive");
    const ModifiedCurve m = modified_curve(eta0, eta0, nu_crit(eta0));
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
        // spread over radii 0.3 .. 6 and both half-planes, avoiding the real axis
        const double r = 0.3 * std::pow(20.0, static_cast<double>(k) / std::max(samples - 1, 1));
        const double th = (k % 2 == 0 ? 1.0 : -1.0) * (0.2 + 2.7 * ((k * 7) % samples) / samples);
        const cplx lam = std::polar(r, th) + m.beta_hat * 0.5;
        const auto gh = ghat_all(m, lam, side_of(lam));
        const auto g = g_all(m.base, lam, side_of(lam));
        for (int j = 0; j < 3; ++j) worst = std::max(worst, std::abs(gh[j] - g[j]) / (1.0 + std::abs(g[j])));
    }
    return worst;
}

// ----------------------------------------------------------------------------
// Scaling maps

double scaling_constant(double eta0, double n_eta, double n_nu)
{
    if (!(eta0 > 0)) throw DomainError("scaling_constant: eta0 must be positive");
    const double den = 125.0 / 36.0 * eta0 * eta0 * n_eta - n_nu;
    if (!(den > 0)) throw DomainError("scaling_constant: direction is not admissible (C <= 0)");
    return std::pow(10.0 * eta0 / 3.0, 0.2) / den;
}

ScalingMaps scaling_maps_plus(double eta0, double n_eta, double n_nu, double x, double hbar, cplx lam)
{
    ScalingMaps s;
    s.C = scaling_constant(eta0, n_eta, n_nu);
    const double shift = s.C * x * std::pow(hbar, 0.8);
    s.eta_hat = eta0 - n_eta * shift;
    s.nu_hat = nu_crit(eta0) - n_nu * shift;
    const ModifiedCurve m0 = modified_curve(eta0, eta0, nu_crit(eta0));
    const ModifiedCurve mh = modified_curve(eta0, s.eta_hat, s.nu_hat);
    const HalfPlane side = side_of(lam);
    const auto g0 = ghat_all_ld(m0, to_ld(lam), side);
    const auto gh = ghat_all_ld(mh, to_ld(lam), side);
    const cplxl psi0 = g0[0] - g0[1];
    const cplxl psih = gh[0] - gh[1];
    s.psi = cplx(psih);
    const cplxl w = fifth_root_near(psi0, std::sqrt(to_ld(lam) - cplxl(m0.beta_hat, 0.0L)));
    s.xs = cplx(0.5L * std::pow(1.6L, 0.2L) * (psih - psi0) / w);
    s.zeta = cplx(std::pow(0.625L, 0.4L) * w * w);
    return s;
}

double scaling_limit_plus(double eta0, double n_eta, double n_nu, double x, double hbar, double theta)
{
    const double bh = -2.0 * std::pow(std::sqrt(5.0 * eta0 / 6.0), 3);
    const std::vector<double> rs{1e-2, 5e-3, 2.5e-3};
    std::vector<cplx> vals;
    const double scale = std::pow(hbar, -0.8);
    for (double r : rs) vals.push_back(scale * scaling_maps_plus(eta0, n_eta, n_nu, x, hbar, bh + std::polar(r, theta)).xs);
    return neville_at_zero(rs, vals).real();
}

double zeta_derivative_plus(double eta0)
{
    const ModifiedCurve m = modified_curve(eta0, eta0, nu_crit(eta0));
    const cplxl bh(m.beta_hat, 0.0L);
    const long double h = 1e-3L * (1.0L + std::abs(m.beta_hat));
    auto zeta = [&](cplxl lam) {
        const auto g = ghat_all_ld(m, lam, HalfPlane::upper);
        const cplxl w = fifth_root_near(g[0] - g[1], std::sqrt(lam - bh));
        return std::pow(0.625L, 0.4L) * w * w;
    };
    const cplxl ih(0.0L, h);
    const cplxl d = (4.0L * zeta(bh + ih) - zeta(bh + 2.0L * ih)) / (2.0L * ih);
    return static_cast<double>(std::abs(d));
}

ScalingMaps scaling_maps_minus(double s, double x, double hbar, cplx lam)
{
    if (!(s > 0)) throw DomainError("scaling_maps_minus: s must be positive");
    ScalingMaps m;
    const double c = 5.0 * s / 6.0;
    m.zeta = std::pow(c, 0.6) * lam;
    m.nu_hat = std::pow(c, 0.2) * std::pow(hbar, 0.8) * x;
    m.eta_hat = -s;
    m.xs = std::pow(c, -0.2) * (m.nu_hat + 3.0 / 7.0 * lam * lam);
    return m;
}

UniformLimit scaling_limit_minus(double s, double x, const std::vector<double>& hbars, double delta)
{
    UniformLimit u;
    u.hbars = hbars;
    for (double hb : hbars) {
        const double R = std::pow(hb, 0.4 + delta);
        double sup = 0;
        for (double f : {0.25, 0.5, 0.75, 0.999})
            for (int k = 0; k < 16; ++k) {
                const cplx lam = std::polar(f * R, 2 * pi * k / 16.0);
                sup = std::max(sup, std::abs(std::pow(hb, -0.8) * scaling_maps_minus(s, x, hb, lam).xs - x));
            }
        u.sup_error.push_back(sup);
    }
    u.slope = loglog_slope(u.hbars, u.sup_error);
    return u;
}

double nu_scaling_exponent(double s, double x, const std::vector<double>& hbars)
{
    std::vector<double> v;
    for (double hb : hbars) v.push_back(std::abs(scaling_maps_minus(s, x, hb, cplx(0, 0)).nu_hat));
    return loglog_slope(hbars, v);
}

std::array<cplx, 3> reconstruct_g_minus(double s, double x, double hbar, cplx lam)
{
    const ScalingMaps m = scaling_maps_minus(s, x, hbar, lam);
    const cplx w = omega<double>();
    const cplx z3 = std::pow(m.zeta, 1.0 / 3.0);
    const cplx z53 = std::pow(z3, 5);
    std::array<cplx, 3> r;
    for (int j = 1; j <= 3; ++j)
        r[j - 1] = -1.2 * std::pow(w, 1 - j) * z53 + std::pow(w, j - 1) * m.xs * z3;
    return r;
}

double reconstruct_mismatch_minus(double s, double x, double hbar, const std::vector<cplx>& lams)
{
    const ScalingMaps sm = scaling_maps_minus(s, x, hbar, cplx(0, 0));
    const ModifiedCurve m = modified_curve(-s, -s, sm.nu_hat);
    constexpr int sheet[3] = {1, 3, 2};
    double worst = 0;
    for (cplx lam : lams) {
        if (lam.imag() <= 0) throw DomainError("reconstruct_mismatch_minus: upper half-plane only");
        const auto rec = reconstruct_g_minus(s, x, hbar, lam);
        const auto g = ghat_all(m, lam, HalfPlane::upper);
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(rec[j] - g[sheet[j] - 1]) / (1.0 + std::abs(g[sheet[j] - 1])));
    }
    return worst;
}

// ----------------------------------------------------------------------------
// Painleve I related data

CMat3 schlesinger_factor(cplx lam, const PIState& st, double s, double hbar)
{
    if (lam == cplx(0, 0)) throw DomainError("schlesinger_factor: lambda must be nonzero");
    const double c = std::pow(5.0 * s / 6.0, 0.2);
    const double H = st.H;
    const double k = H * H - st.q;
    CMat3 p = CMat3::Identity();
    p(2, 0) -= std::pow(hbar, 0.2) * H / (c * lam);
    const cplx t = std::pow(hbar, 0.4) * k / (2.0 * c * c * lam);
    p(2, 1) += t;
    p(1, 0) -= t;
    p(2, 0) -= std::pow(hbar, 0.8) * k * k / (8.0 * std::pow(c, 4) * lam * lam);
    return p;
}

double tauhat0_exponent(double eta, double nu, double eta0)
{
    const double e2 = eta0 * eta0, e3 = e2 * eta0, e4 = e2 * e2, e5 = e4 * eta0;
    return -(5.0 * eta0 / 6.0)
           * (nu * nu + 125.0 / 108.0 * e3 * nu - 125.0 / 54.0 * e2 * eta * nu + 3125.0 / 1296.0 * e4 * eta * eta
              - 15625.0 / 5832.0 * e5 * eta);
}

std::array<double, 2> tauhat0_gradient(double eta, double nu, double eta0)
{
    const double e2 = eta0 * eta0, e3 = e2 * eta0, e4 = e2 * e2, e5 = e4 * eta0;
    const double f = -(5.0 * eta0 / 6.0);
    const double d_eta = f * (-125.0 / 54.0 * e2 * nu + 3125.0 / 648.0 * e4 * eta - 15625.0 / 5832.0 * e5);
    const double d_nu = f * (2.0 * nu + 125.0 / 108.0 * e3 - 125.0 / 54.0 * e2 * eta);
    return {d_eta, d_nu};
}

TritronqueeReport tritronquee_report(double eta0, Stratum side, double n_eta, double n_nu, double x)
{
    if (!(x < 0)) throw DomainError("tritronquee_report: x must be negative");
    TritronqueeReport rep;
    std::vector<double> hs;
    std::vector<quad> vals;
    for (int k = 0; k < 5; ++k) {
        const double h = 0.02 * std::pow(2.0, -k);
        const quad hb = pow(quad(h), quad(5) / 2);
        const quad t27 = pow(hb, quad(-2) / 7);
        quad q;
        if (side == Stratum::gamma_plus) {
            if (!(eta0 > 0)) throw DomainError("tritronquee: gamma_+ needs eta0 > 0");
            const quad C = scaling_constant(eta0, n_eta, n_nu);
            const quad shift = C * x * pow(hb, quad(4) / 5);
            const quad eta = quad(eta0) - n_eta * shift;
            const quad e0 = eta0;
            const quad nu = quad(125) / 108 * e0 * e0 * e0 - n_nu * shift;
            const quad T = quad(10) * e0 / 3 * t27;
            q = pow(T, quad(2) / 5) * t27 * (sigma_mu0(eta, nu) - quad(5) * eta / 3) / 4;
        } else {
            if (!(eta0 < 0)) throw DomainError("tritronquee: gamma_- needs eta0 < 0");
            const quad e0 = eta0;
            const quad T = -quad(5) * e0 / 6 * t27;
            const quad nu = pow(hb, quad(6) / 7) * pow(T, quad(1) / 5) * x;
            q = pow(T, quad(2) / 5) * t27 * sigma_mu0(e0, nu) / 2;
        }
        const quad c = q / sqrt(quad(-x));
        hs.push_back(h);
        vals.push_back(c);
        rep.hbars.push_back(static_cast<double>(hb));
        rep.values.push_back(static_cast<double>(c));
    }
    rep.extrapolated = static_cast<double>(neville_at_zero(hs, vals));
    return rep;
}

double tritronquee_constant(double eta0, Stratum side, double n_eta, double n_nu)
{
    return tritronquee_report(eta0, side, n_eta, n_nu).extrapolated;
}

std::array<long long, 5> pi3_stokes_data(long long kappa) { return {1 - kappa, -1, 0, -1, kappa}; }

IMat3 pi3_stokes_product(const std::array<long long, 5>& s)
{
    return elementary(1, 3, s[0]) * elementary(2, 3, s[1]) * elementary(2, 1, s[2]) * elementary(3, 1, s[3])
           * elementary(3, 2, s[4]);
}

bool pi3_stokes_relation(const std::array<long long, 5>& s)
{
    const IMat3 P = pi3_stokes_product(s);
    const IMat3 S = cyclic_S();
    return P * S.transpose() == S * P.transpose();
}

double pi3_xi_symmetry(double H, double q)
{
    const cplx w = omega<double>();
    const cplx w2 = w * w;
    CMat3 X1 = CMat3::Zero();
    X1(0, 0) = -H;
    X1(1, 1) = -w2 * H;
    X1(2, 2) = -w * H;
    CMat3 X2;
    X2 << 0.5 * H, (w - 1.0) / 6.0 * q, (w2 - 1.0) / 6.0 * q,
          (1.0 - w) / 6.0 * q, w / 2.0 * H, (w2 - w) / 6.0 * q,
          (1.0 - w2) / 6.0 * q, (w - w2) / 6.0 * q, w2 / 2.0 * H;
    const CMat3 S = cyclic_S().cast<double>().cast<cplx>();
    const double r1 = (std::pow(w, -1) * S.transpose() * X1 * S - X1).cwiseAbs().maxCoeff();
    const double r2 = (std::pow(w, -2) * S.transpose() * X2 * S - X2).cwiseAbs().maxCoeff();
    return std::max(r1, r2);
}

} // namespace s34
