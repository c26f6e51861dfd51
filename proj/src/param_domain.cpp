#include "s34/param_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "s34/series.hpp"

namespace s34 {

namespace {

double pole_gap(double sigma, const Params& p) { return 5.0 * p.eta - 3.0 * sigma; }

void check_pole(double d, double sigma, const Params& p)
{
    const double scale = 1.0 + std::abs(5.0 * p.eta) + std::abs(3.0 * sigma);
    if (std::abs(d) < 64 * std::numeric_limits<double>::epsilon() * scale)
        throw PoleError("eval_P: 5*eta - 3*sigma vanishes");
}

Params lerp(const Params& a, const Params& b, double t)
{
    return {a.eta + t * (b.eta - a.eta), a.mu + t * (b.mu - a.mu), a.nu + t * (b.nu - a.nu)};
}

struct NewtonResult {
    double sigma;
    bool converged;
};

NewtonResult newton(double s, const Params& p, int max_iter, double rtol)
{
    for (int it = 0; it < max_iter; ++it) {
        const PValue v = eval_P(s, p);
        if (v.d_dsigma == 0.0) return {s, false};
        const double ds = v.value / v.d_dsigma;
        s -= ds;
        if (!std::isfinite(s)) return {s, false};
        if (std::abs(ds) <= rtol * (1.0 + std::abs(s))) {
            const PValue w = eval_P(s, p);
            if (w.d_dsigma != 0.0) s -= w.value / w.d_dsigma;
            return {s, true};
        }
    }
    return {s, false};
}

} // namespace

PValue eval_P(double sigma, const Params& p)
{
    PValue r;
    r.value = p.nu + 0.5 * sigma * sigma * sigma - 1.25 * p.eta * sigma * sigma;
    r.d_dsigma = 1.5 * sigma * sigma - 2.5 * p.eta * sigma;
    if (p.mu != 0.0) {
        const double d = pole_gap(sigma, p);
        check_pole(d, sigma, p);
        r.value += 6.0 * p.mu * p.mu / (d * d);
        r.d_dsigma += 36.0 * p.mu * p.mu / (d * d * d);
    }
    return r;
}

double dP_dmu(double sigma, const Params& p)
{
    if (p.mu == 0.0) return 0.0;
    const double d = pole_gap(sigma, p);
    check_pole(d, sigma, p);
    return 12.0 * p.mu / (d * d);
}

double dP_deta(double sigma, const Params& p)
{
    double r = -1.25 * sigma * sigma;
    if (p.mu != 0.0) {
        const double d = pole_gap(sigma, p);
        check_pole(d, sigma, p);
        r -= 60.0 * p.mu * p.mu / (d * d * d);
    }
    return r;
}

// A double root leaves |dP/dsigma| ~ sqrt(eps) after rounding of the inputs.
double boundary_margin(double sigma) { return 1e-7 * (1.0 + sigma * sigma); }

SigmaSolution continue_sigma(const std::vector<Params>& waypoints)
{
    if (waypoints.empty()) throw DomainError("continue_sigma: no waypoints");
    const Params& w0 = waypoints.front();
    if (!(w0.eta > 0.0) || w0.mu != 0.0 || w0.nu != 0.0)
        throw DomainError("continue_sigma: path must start on the reference ray");

    double s = 2.5 * w0.eta;
    SigmaSolution out;
    const double dt_max = 0.125;

    for (std::size_t seg = 1; seg < waypoints.size(); ++seg) {
        const Params A = waypoints[seg - 1];
        const Params B = waypoints[seg];
        const Params dp{B.eta - A.eta, B.mu - A.mu, B.nu - A.nu};
        double t = 0.0;
        double dt = dt_max / 2;
        while (t < 1.0) {
            const double h = std::min(dt, 1.0 - t);
            const Params pt = lerp(A, B, t);
            const PValue v = eval_P(s, pt);
            const double rate = -(dP_deta(s, pt) * dp.eta + dP_dmu(s, pt) * dp.mu + dp.nu) / v.d_dsigma;
            const double s_pred = s + h * rate;
            const Params pn = (h == 1.0 - t) ? B : lerp(A, B, t + h);

            bool ok = std::isfinite(s_pred);
            NewtonResult nr{s_pred, false};
            if (ok) {
                try {
                    nr = newton(s_pred, pn, 5, 1e-13);
                } catch (const PoleError&) {
                    nr.converged = false;
                }
                ok = nr.converged && std::abs(nr.sigma - s_pred) <= 0.1 * (1.0 + std::abs(s));
            }
            if (ok && pole_gap(nr.sigma, pn) >= 0.0) {
                if (pn.mu != 0.0) throw PolePassed("continuation crossed 5*eta = 3*sigma");
                ok = false;
            }
            PValue vn{};
            if (ok) {
                vn = eval_P(nr.sigma, pn);
                // a simple root keeps the sign of dP/dsigma; a flip means Newton hopped branches
                ok = (vn.d_dsigma > 0) == (v.d_dsigma > 0);
            }
            if (ok) {
                if (std::abs(vn.d_dsigma) < boundary_margin(nr.sigma))
                    throw BoundaryReached("multiple root reached during continuation");
                s = nr.sigma;
                t += h;
                ++out.steps;
                dt = std::min(dt * 2.0, dt_max);
            } else {
                dt *= 0.5;
                if (dt < 1e-14) throw BoundaryReached("continuation stalled near a multiple root");
            }
        }
    }

    const Params& target = waypoints.back();
    NewtonResult fin = newton(s, target, 20, 1e-16);
    if (std::abs(fin.sigma - s) <= 1e-6 * (1.0 + std::abs(s))) s = fin.sigma;
    const PValue v = eval_P(s, target);
    if (std::abs(v.d_dsigma) < boundary_margin(s)) throw BoundaryReached("target is a multiple root");
    out.sigma = s;
    out.dP_dsigma = v.d_dsigma;
    out.residual = std::abs(v.value);
    out.path_ok = true;
    return out;
}

namespace {

// Real roots of (5 eta - 3 sigma)^2 P, polished on P itself.
std::vector<double> real_roots_cleared(const Params& p)
{
    const double A[4] = {p.nu, 0.0, -1.25 * p.eta, 0.5};
    const double B[3] = {25.0 * p.eta * p.eta, -30.0 * p.eta, 9.0};
    double q[6] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) q[i + j] += A[i] * B[j];
    q[0] += 6.0 * p.mu * p.mu;
    Eigen::Matrix<double, 5, 5> comp = Eigen::Matrix<double, 5, 5>::Zero();
    for (int i = 1; i < 5; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < 5; ++i) comp(i, 4) = -q[i] / q[5];
    const Eigen::Matrix<std::complex<double>, 5, 1> ev = Eigen::EigenSolver<Eigen::Matrix<double, 5, 5>>(comp, false).eigenvalues();
    std::vector<double> out;
    for (const auto& z : ev) {
        if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
        try {
            const NewtonResult nr = newton(z.real(), p, 30, 1e-15);
            if (nr.converged) out.push_back(nr.sigma);
        } catch (const PoleError&) {
        }
    }
    return out;
}

// The region R is a box in (b, f, theta) with f = c sqrt(6)/b^{3/2} and a = z0 + theta (z+ - z0);
// a straight line there from the ray point maps to a path inside D.
std::vector<Params> route_through_R(const ABCoords& q, int n)
{
    const double lim = std::pow(q.b, 1.5) / std::sqrt(6.0);
    const VieteRoots v = viete_roots(q.b, q.c);
    const double f1 = q.c / lim, th1 = (q.a - v.z_zero) / (v.z_plus - v.z_zero);
    const double th0 = std::sqrt(0.75);
    std::vector<Params> w;
    for (int k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) / n;
        const double c = t * f1 * lim;
        const VieteRoots vk = viete_roots(q.b, c);
        const double a = vk.z_zero + (th0 + t * (th1 - th0)) * (vk.z_plus - vk.z_zero);
        w.push_back(k == 0 ? Params{0.3 * q.b, 0.0, 0.0} : map_abc({a, q.b, c}));
    }
    return w;
}

} // namespace

SigmaSolution solve_sigma(const Params& p)
{
    if (!std::isfinite(p.eta) || !std::isfinite(p.mu) || !std::isfinite(p.nu))
        throw DomainError("solve_sigma: non-finite parameters");
    const double eref = std::max(p.eta, 1.0);
    const Params ref{eref, 0.0, 0.0};
    const Params folded{p.eta, std::abs(p.mu), p.nu};
    try {
        return continue_sigma({ref, folded});
    } catch (const S34Error&) {
        // The straight path can leave D even when the target lies inside it; retry along
        // the image of a path in R through any root whose coordinates fall in R.
        for (double s : real_roots_cleared(folded)) {
            if (!(s > 0.0) || pole_gap(s, folded) >= 0.0) continue;
            const ABCoords q = abc_from(folded, s);
            if (!in_region_R(q)) continue;
            try {
                std::vector<Params> w = route_through_R(q, 64);
                w.back() = folded;
                const SigmaSolution r = continue_sigma(w);
                if (std::abs(r.sigma - s) <= 1e-8 * (1.0 + s)) return r;
            } catch (const S34Error&) {
            }
        }
        throw;
    }
}

VieteRoots viete_roots(double b, double c)
{
    if (!(b > 0.0)) throw DomainError("viete_roots: b must be positive");
    const double lim = std::pow(b, 1.5) / std::sqrt(6.0);
    double arg = c / lim;
    if (std::abs(arg) > 1.0 + 1e-14) throw DomainError("viete_roots: cubic has one real root");
    arg = std::clamp(arg, -1.0, 1.0);
    const double r = std::sqrt(2.0 * b / 3.0);
    const double phi = std::asin(arg) / 3.0;
    VieteRoots v;
    v.z_zero = r * std::sin(phi);
    v.z_plus = r * std::sin(phi + 2.0 * pi / 3.0);
    v.z_minus = r * std::sin(phi - 2.0 * pi / 3.0);
    return v;
}

Params map_abc(const ABCoords& q)
{
    const double a2 = q.a * q.a;
    return {0.6 * (4.0 * a2 - q.b), q.c * (q.b - 2.0 * a2),
            8.0 * a2 * a2 * a2 - 3.0 * a2 * a2 * q.b - 2.0 / 3.0 * q.c * q.c};
}

ABCoords abc_from(const Params& p, double sigma)
{
    const double a = std::sqrt(sigma / 2.0);
    const double d = pole_gap(sigma, p);
    const double c = (p.mu == 0.0) ? 0.0 : -3.0 * p.mu / d;
    return {p.mu < 0.0 ? -a : a, 2.0 * sigma - 5.0 * p.eta / 3.0, c};
}

double jacobian_abc(const ABCoords& q)
{
    const double a = q.a, b = q.b, c = q.c;
    const double k = 6.0 * a * a * a - 3.0 * b * a;
    return 4.0 / 3.0 * std::abs(a * (k + 2.0 * c) * (k - 2.0 * c));
}

double jacobian_abc_fd(const ABCoords& q, double h)
{
    double J[3][3];
    for (int j = 0; j < 3; ++j) {
        ABCoords qp = q, qm = q;
        double* xp = j == 0 ? &qp.a : (j == 1 ? &qp.b : &qp.c);
        double* xm = j == 0 ? &qm.a : (j == 1 ? &qm.b : &qm.c);
        *xp += h;
        *xm -= h;
        const Params fp = map_abc(qp), fm = map_abc(qm);
        J[0][j] = (fp.eta - fm.eta) / (2 * h);
        J[1][j] = (fp.mu - fm.mu) / (2 * h);
        J[2][j] = (fp.nu - fm.nu) / (2 * h);
    }
    const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                       J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                       J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    return std::abs(det);
}

bool in_region_R(const ABCoords& q)
{
    if (!(q.b > 0.0)) return false;
    if (!(q.c >= 0.0 && q.c < std::pow(q.b, 1.5) / std::sqrt(6.0))) return false;
    const VieteRoots v = viete_roots(q.b, q.c);
    return v.z_zero < q.a && q.a < v.z_plus;
}

bool in_region_R_tilde(const ABCoords& q)
{
    if (!(q.b > 0.0)) return false;
    if (!(q.c <= 0.0 && -q.c < std::pow(q.b, 1.5) / std::sqrt(6.0))) return false;
    const VieteRoots v = viete_roots(q.b, q.c);
    return v.z_minus < q.a && q.a < v.z_zero;
}

DomainReport in_domain_D(const Params& p)
{
    DomainReport r;
    try {
        const SigmaSolution s = solve_sigma(p);
        r.path_ok = s.path_ok;
        r.sigma = s.sigma;
        r.margin = std::abs(s.dP_dsigma);
        r.sign_ok = s.sigma > std::max(5.0 * p.eta / 3.0, 0.0);
        r.in_D = r.path_ok && r.sign_ok && r.margin >= boundary_margin(s.sigma);
        if (!r.sign_ok) r.reason = "sigma <= max(5 eta/3, 0)";
    } catch (const BoundaryReached& e) {
        r.reason = std::string("boundary: ") + e.what();
    } catch (const PolePassed& e) {
        r.reason = std::string("pole: ") + e.what();
    } catch (const S34Error& e) {
        r.reason = e.what();
    }
    return r;
}

SigmaJets sigma_jets(const Params& p, int depth)
{
    if (depth < 0 || depth > 4) throw DomainError("sigma_jets: depth must be in 0..4");
    const SigmaSolution sol = solve_sigma(p);
    SigmaJets j;
    j.depth = depth;
    const std::size_t n = static_cast<std::size_t>(depth);
    const Series<double> dnu = Series<double>::variable(n, 0.0);
    Series<double> S(n, sol.sigma);
    const double mu2 = p.mu * p.mu;
    for (int it = 0; it <= depth + 1; ++it) {
        const Series<double> d = 5.0 * p.eta - 3.0 * S;
        Series<double> F = p.nu + dnu + 0.5 * S * S * S - 1.25 * p.eta * S * S;
        Series<double> dF = 1.5 * S * S - 2.5 * p.eta * S;
        if (mu2 != 0.0) {
            F += 6.0 * mu2 / (d * d);
            dF += 36.0 * mu2 / (d * d * d);
        }
        S -= F / dF;
    }
    for (int k = 0; k <= depth; ++k) j.d_nu[k] = S.derivative(static_cast<std::size_t>(k));
    j.d_nu[0] = sol.sigma;
    j.d_mu = -dP_dmu(sol.sigma, p) / sol.dP_dsigma;
    j.d_eta = -dP_deta(sol.sigma, p) / sol.dP_dsigma;
    return j;
}

} // namespace s34
