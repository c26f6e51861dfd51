#include "s34/spectral_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "s34/fit.hpp"
#include "s34/param_domain.hpp"

namespace s34 {

namespace {

template <class T>
CurveCoeffs<T> make_coeffs(T eta, T mu, T nu, T sigma)
{
    CurveCoeffs<T> C;
    C.eta = eta;
    C.mu = mu;
    C.nu = nu;
    C.sigma = sigma;
    C.a = std::sqrt(std::max(sigma, T(0)) / T(2));
    C.b = T(2) * sigma - T(5) * eta / T(3);
    C.c = (mu == T(0)) ? T(0) : -T(3) * mu / (T(5) * eta - T(3) * sigma);
    const T a2 = C.a * C.a;
    C.lam = {T(1), T(0), -T(3) * a2, C.c};
    C.Y = {T(1), T(0), -C.b, T(4) * C.c / T(3), -T(6) * a2 * a2 + T(2) * a2 * C.b};
    // g' = Y * lambda', lambda' = 3u^2 - 3a^2
    std::array<T, 7> prod{};
    const std::array<T, 3> dl = {T(3), T(0), -T(3) * a2};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 3; ++j) prod[i + j] += C.Y[i] * dl[j];
    for (int k = 0; k < 7; ++k) C.g[k] = prod[k] / T(7 - k);
    C.g[7] = -T(2) * C.c * a2 * a2;
    C.alpha = horner(C.lam, -C.a);
    C.beta = horner(C.lam, C.a);
    return C;
}

template <class T>
std::complex<T> principal_cbrt(std::complex<T> z)
{
    if (z == std::complex<T>(0)) return z;
    const T r = std::cbrt(std::abs(z));
    const T th = std::arg(z) / T(3);
    return {r * std::cos(th), r * std::sin(th)};
}

// Roots of u^3 - 3a^2 u + c - lam for real lam; `is_real` marks real roots.
template <class T>
std::array<std::complex<T>, 3> real_lambda_roots(const CurveCoeffs<T>& C, T lam, std::array<bool, 3>& is_real)
{
    const T p = -T(3) * C.a * C.a;
    const T q = C.c - lam;
    const T disc = -(T(4) * p * p * p + T(27) * q * q);
    std::array<std::complex<T>, 3> r;
    if (disc > T(0)) {
        const T m = T(2) * std::sqrt(-p / T(3));
        T arg = T(3) * q / (T(2) * p) * std::sqrt(-T(3) / p);
        arg = std::clamp(arg, T(-1), T(1));
        const T phi = std::acos(arg) / T(3);
        const T tpi = T(2) * std::acos(T(-1)) / T(3);
        for (int k = 0; k < 3; ++k) r[k] = m * std::cos(phi - tpi * T(k));
        is_real = {true, true, true};
    } else {
        const T h = std::sqrt(std::max(q * q / T(4) + p * p * p / T(27), T(0)));
        const T x = std::cbrt(-q / T(2) + h) + std::cbrt(-q / T(2) - h);
        // polish the real root
        T xr = x;
        for (int it = 0; it < 3; ++it) {
            const T d = T(3) * xr * xr + p;
            if (d == T(0)) break;
            xr -= (xr * xr * xr + p * xr + q) / d;
        }
        const T im = std::sqrt(std::max(T(3) * xr * xr + T(4) * p, T(0))) / T(2);
        r[0] = xr;
        r[1] = std::complex<T>(-xr / T(2), im);
        r[2] = std::complex<T>(-xr / T(2), -im);
        is_real = {true, im == T(0), im == T(0)};
    }
    return r;
}

template <class T>
std::array<std::complex<T>, 3> complex_lambda_roots(const CurveCoeffs<T>& C, std::complex<T> lam)
{
    using Z = std::complex<T>;
    const Z p = -T(3) * C.a * C.a;
    const Z q = Z(C.c) - lam;
    const Z w = std::sqrt(q * q / T(4) + p * p * p / T(27));
    Z A3 = -q / T(2) + w;
    const Z B3 = -q / T(2) - w;
    if (std::abs(B3) > std::abs(A3)) A3 = B3;
    const Z A = principal_cbrt(A3);
    const Z om = omega<T>();
    std::array<Z, 3> r;
    Z rot = Z(1);
    for (int k = 0; k < 3; ++k) {
        const Z Ak = A * rot;
        r[k] = (Ak == Z(0)) ? Z(0) : Ak - p / (T(3) * Ak);
        rot *= om;
    }
    for (auto& u : r) {
        for (int it = 0; it < 2; ++it) {
            const Z d = T(3) * u * u + p;
            if (d == Z(0)) break;
            u -= (u * u * u + p * u + q) / d;
        }
    }
    return r;
}

template <class T>
std::array<std::complex<T>, 3> classify(const CurveCoeffs<T>& C, std::complex<T> lam, HalfPlane side_for_real)
{
    using Z = std::complex<T>;
    const T tiny = T(1e-13) * (T(1) + std::abs(lam));
    const bool degenerate = C.a == T(0);
    if (!degenerate) {
        const T tol = T(1e-10);
        if (std::abs(lam - Z(C.alpha)) < tol || std::abs(lam - Z(C.beta)) < tol)
            throw OnBranchPoint("lambda coincides with a branch point");
    }
    std::array<Z, 3> roots;
    std::array<bool, 3> is_real{false, false, false};
    int side;
    if (std::abs(lam.imag()) <= tiny) {
        side = lam.imag() > T(0) ? 1 : (lam.imag() < T(0) ? -1 : side_sign(side_for_real));
        roots = real_lambda_roots(C, lam.real(), is_real);
    } else {
        side = lam.imag() > T(0) ? 1 : -1;
        roots = complex_lambda_roots(C, lam);
    }
    std::array<Z, 3> out;
    std::array<bool, 3> filled{false, false, false};
    const T a2 = C.a * C.a;
    for (int k = 0; k < 3; ++k) {
        const Z u = roots[k];
        int eff;
        if (is_real[k]) {
            const T s = u.real() * u.real() - a2;
            eff = side * (s > T(0) ? 1 : (s < T(0) ? -1 : 1));
        } else {
            eff = u.imag() > T(0) ? 1 : (u.imag() < T(0) ? -1 : 0);
        }
        int j;
        if (side > 0)
            j = eff < 0 ? 2 : (u.real() > T(0) ? 1 : 3);
        else
            j = eff > 0 ? 2 : (u.real() > T(0) ? 1 : 3);
        if (filled[j - 1] && !degenerate) throw S34Error("sheet classification is not a permutation");
        out[j - 1] = u;
        filled[j - 1] = true;
    }
    if (degenerate) {
        // lambda = u^3: exact rotated cube roots.
        const Z om = omega<T>();
        Z base = principal_cbrt(lam);
        if (std::abs(lam.imag()) <= tiny && lam.real() < T(0)) {
            const T r = std::cbrt(-lam.real());
            const T th = T(side) * std::acos(T(-1)) / T(3);
            base = Z(r * std::cos(th), r * std::sin(th));
        }
        out[0] = base;
        out[1] = side > 0 ? base * om * om : base * om;
        out[2] = side > 0 ? base * om : base * om * om;
    }
    return out;
}

template <class T>
std::complex<T> theta_impl(std::complex<T> lam, int j, T eta, T mu, T nu, std::optional<HalfPlane> side)
{
    using Z = std::complex<T>;
    if (lam == Z(0)) return Z(0);
    T th = std::arg(lam);
    if (lam.imag() == T(0) && lam.real() < T(0)) {
        if (!side) throw BranchError("theta_phase: negative real lambda needs a side");
        th = (*side == HalfPlane::upper ? T(1) : T(-1)) * std::acos(T(-1));
    }
    const T r = std::cbrt(std::abs(lam));
    const Z L(r * std::cos(th / T(3)), r * std::sin(th / T(3)));
    const Z om = omega<T>();
    const Z wp = std::pow(om, j - 1);
    const Z wm = std::conj(wp);
    const Z L2 = L * L;
    const Z L5 = L2 * L2 * L;
    const Z L7 = L5 * L2;
    return T(3) / T(7) * wp * L7 + wm * eta * L5 + wm * mu * L2 + wp * nu * L;
}

template <class T, std::size_t N>
std::array<double, N> to_double(const std::array<T, N>& a)
{
    std::array<double, N> r{};
    for (std::size_t i = 0; i < N; ++i) r[i] = static_cast<double>(a[i]);
    return r;
}

} // namespace

SpectralCurve build_curve_at(const Params& p, long double sigma)
{
    SpectralCurve c;
    c.params = p;
    c.ld = make_coeffs<long double>(p.eta, p.mu, p.nu, sigma);
    c.sigma = static_cast<double>(c.ld.sigma);
    c.a = static_cast<double>(c.ld.a);
    c.b = static_cast<double>(c.ld.b);
    c.c = static_cast<double>(c.ld.c);
    c.alpha = static_cast<double>(c.ld.alpha);
    c.beta = static_cast<double>(c.ld.beta);
    c.lam_coeffs = to_double(c.ld.lam);
    c.Y_coeffs = to_double(c.ld.Y);
    c.g_coeffs = to_double(c.ld.g);
    return c;
}

SpectralCurve build_curve(const Params& p)
{
    const SigmaSolution s = solve_sigma(p);
    // polish the root in extended precision
    long double sg = s.sigma;
    const long double eta = p.eta, mu = p.mu, nu = p.nu;
    for (int it = 0; it < 4; ++it) {
        const long double d = 5.0L * eta - 3.0L * sg;
        long double P = nu + 0.5L * sg * sg * sg - 1.25L * eta * sg * sg;
        long double dP = 1.5L * sg * sg - 2.5L * eta * sg;
        if (mu != 0.0L) {
            P += 6.0L * mu * mu / (d * d);
            dP += 36.0L * mu * mu / (d * d * d);
        }
        if (dP == 0.0L) break;
        sg -= P / dP;
    }
    return build_curve_at(p, sg);
}

std::array<cplxl, 3> sheet_roots_ld(const SpectralCurve& c, cplxl lam, HalfPlane side_for_real)
{
    return classify(c.ld, lam, side_for_real);
}

std::array<cplx, 3> sheet_roots(const SpectralCurve& c, cplx lam, HalfPlane side_for_real)
{
    const auto r = classify(c.ld, cplxl(lam.real(), lam.imag()), side_for_real);
    return {cplx(r[0]), cplx(r[1]), cplx(r[2])};
}

cplx uniformize(const SpectralCurve& c, cplx lam, SheetLabel s)
{
    if (s.index < 1 || s.index > 3) throw DomainError("uniformize: sheet index must be 1..3");
    return sheet_roots(c, lam, s.side)[s.index - 1];
}

std::array<cplxl, 3> g_all_ld(const SpectralCurve& c, cplxl lam, HalfPlane side_for_real)
{
    const auto u = sheet_roots_ld(c, lam, side_for_real);
    return {horner(c.ld.g, u[0]), horner(c.ld.g, u[1]), horner(c.ld.g, u[2])};
}

std::array<cplx, 3> g_all(const SpectralCurve& c, cplx lam, HalfPlane side_for_real)
{
    const auto g = g_all_ld(c, cplxl(lam.real(), lam.imag()), side_for_real);
    return {cplx(g[0]), cplx(g[1]), cplx(g[2])};
}

cplx g_sheet(const SpectralCurve& c, cplx lam, SheetLabel s)
{
    if (s.index < 1 || s.index > 3) throw DomainError("g_sheet: sheet index must be 1..3");
    return g_all(c, lam, s.side)[s.index - 1];
}

cplx theta_phase(cplx lam, int j, const Params& p, std::optional<HalfPlane> side)
{
    return theta_impl<double>(lam, j, p.eta, p.mu, p.nu, side);
}

cplxl theta_phase_ld(cplxl lam, int j, long double eta, long double mu, long double nu,
                     std::optional<HalfPlane> side)
{
    return theta_impl<long double>(lam, j, eta, mu, nu, side);
}

int hat_index(int j, HalfPlane side)
{
    if (side == HalfPlane::lower) return j;
    return j == 1 ? 1 : (j == 2 ? 3 : 2);
}

BranchCoeffs branch_coeffs(const SpectralCurve& c)
{
    BranchCoeffs r;
    const double a = c.a, b = c.b, cc = c.c;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (a > 0.0) {
        const double k = -8.0 / (9.0 * std::sqrt(3.0 * a));
        r.rho_alpha = k * (6 * a * a * a - 3 * a * b - 2 * cc);
        r.rho_beta = k * (6 * a * a * a - 3 * a * b + 2 * cc);
        const double h = 8.0 * std::sqrt(3.0) / (135.0 * std::pow(a, 3.5));
        r.rho_hat_beta = h * (2 * a * b - cc);
        r.rho_hat = h * a * b;
    } else {
        r.rho_alpha = r.rho_beta = r.rho_hat_beta = r.rho_hat = nan;
    }
    r.b_coeff = 0.6 * b;
    return r;
}

DecayReport check_g_asymptotics(const SpectralCurve& c)
{
    DecayReport rep;
    const auto radii = logspace(1e3, 1e6, 13);
    const long double eta = c.ld.eta, mu = c.ld.mu, nu = c.ld.nu;
    const double dirs[] = {pi / 6, pi / 2, 5 * pi / 6};
    bool all_exact = true;
    for (HalfPlane side : {HalfPlane::upper, HalfPlane::lower}) {
        for (double d0 : dirs) {
            const double th = side == HalfPlane::upper ? d0 : -d0;
            std::vector<std::vector<double>> res(3);
            std::vector<double> gscale(3, 0.0);
            for (double r : radii) {
                const cplxl lam = std::polar<long double>(r, th);
                const auto g = g_all_ld(c, lam, side);
                for (int j = 1; j <= 3; ++j) {
                    const cplxl t = theta_phase_ld(lam, hat_index(j, side), eta, mu, nu, side);
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
                const bool exact = row.max_residual <= 1e-17 * gscale[j - 1];
                if (exact) {
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

LocalFit fit_branch_local(const SpectralCurve& c, BranchPoint which, double power)
{
    LocalFit f;
    f.power = power;
    const long double anchor = which == BranchPoint::alpha ? c.ld.alpha : c.ld.beta;
    f.radii = logspace(1e-4, 1e-2, 12);
    for (auto& r : f.radii) r *= 1.0 + std::abs(c.alpha);
    std::vector<double> mag, re, im;
    for (double r : f.radii) {
        const cplxl dl(0.0L, static_cast<long double>(r));
        const cplxl lam = cplxl(anchor, 0.0L) + dl;
        const auto g = g_all_ld(c, lam, HalfPlane::upper);
        const cplxl diff = which == BranchPoint::alpha ? g[2] - g[1] : g[1] - g[0];
        mag.push_back(static_cast<double>(std::abs(diff)));
        const cplxl ratio = diff / std::pow(dl, static_cast<long double>(power));
        re.push_back(static_cast<double>(ratio.real()));
        im.push_back(static_cast<double>(ratio.imag()));
    }
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < f.radii.size(); ++i) {
        lx.push_back(std::log(f.radii[i]));
        ly.push_back(std::log(mag[i]));
    }
    // log|diff| = log k + p log r + k1 r (first correction absorbed)
    const std::vector<double>& rr = f.radii;
    Eigen::MatrixXd A(static_cast<Eigen::Index>(rr.size()), 3);
    Eigen::VectorXd y(static_cast<Eigen::Index>(rr.size()));
    for (std::size_t i = 0; i < rr.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        A(k, 0) = 1.0;
        A(k, 1) = lx[i];
        A(k, 2) = rr[i];
        y(k) = ly[i];
    }
    const Eigen::VectorXd cf = A.colPivHouseholderQr().solve(y);
    f.exponent = cf(1);
    const auto quad = std::vector<std::function<double(double)>>{
        [](double) { return 1.0; }, [](double t) { return t; }, [](double t) { return t * t; }};
    const auto cre = lstsq(rr, re, quad);
    const auto cim = lstsq(rr, im, quad);
    f.prefactor = cplx(cre[0], cim[0]);
    return f;
}

} // namespace s34
