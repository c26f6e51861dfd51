#include "s34/tau_expansion.hpp"

#include <cmath>

#include "s34/fit.hpp"
#include "s34/param_domain.hpp"
#include "s34/series.hpp"

namespace s34 {

double TauLeading::log_tau_leading(double hbar) const
{
    return varpi0 / (hbar * hbar) - std::log(chi) / 24.0;
}

LeadingHamiltonians leading_hamiltonians_at(const Params& p, double s)
{
    const double eta = p.eta, mu = p.mu;
    const double d = 5 * eta - 3 * s, d2 = d * d;
    LeadingHamiltonians h;
    h.h1_0 = -s * s * s * (20 * eta - 9 * s) / 24.0;
    h.h5_0 = 5.0 / 48.0 * std::pow(s, 5) * (2 * eta - s);
    // the mu terms vanish identically at mu = 0, also on the pole 5 eta = 3 sigma
    if (mu == 0.0) return h;
    h.h1_0 += 2 * mu * mu * (6 * s - 5 * eta) / d2;
    h.h2_0 = -mu * s * s + 16 * mu * mu * mu / (d2 * d);
    h.h5_0 += 2.5 * mu * mu * s * s * (5 * eta - 4 * s) / d2 - 30 * std::pow(mu, 4) / (d2 * d2);
    return h;
}

TauLeading tau_leading_at(const Params& p, double s)
{
    const double eta = p.eta, mu = p.mu;
    const double d = 5 * eta - 3 * s, d2 = d * d;
    TauLeading t;
    t.varpi0 = -std::pow(s, 5) / 1344.0 * (54 * s * s - 245 * eta * s + 280 * eta * eta);
    t.chi = s * d2;
    if (mu == 0.0) return t;
    t.varpi0 += -mu * mu * s * s * (50 * eta * eta - 80 * eta * s + 27 * s * s) / (8 * d2)
                + std::pow(mu, 4) * (25 * eta - 24 * s) / (d2 * d2);
    t.chi -= 72 * mu * mu / d2;
    return t;
}

LeadingHamiltonians leading_hamiltonians(const Params& p) { return leading_hamiltonians_at(p, solve_sigma(p).sigma); }

TauLeading tau_leading(const Params& p) { return tau_leading_at(p, solve_sigma(p).sigma); }

// ---------------------------------------------------------------------------
// Topological expansion

namespace {

template <class T>
using S = Series<T>;

// sigma(nu + dnu) as a Taylor series, polished in T.
template <class T>
S<T> sigma_series(const Params& p, std::size_t N)
{
    const double s0 = solve_sigma(p).sigma;
    const T eta(p.eta), mu(p.mu), nu(p.nu);
    const S<T> dnu = S<T>::variable(N, T(0));
    S<T> s(N, T(s0));
    for (std::size_t it = 0; it < N + 8; ++it) {
        const S<T> d = T(5) * eta - T(3) * s;
        const S<T> F = nu + dnu + s * s * s / T(2) - T(5) / T(4) * eta * s * s + T(6) * mu * mu / (d * d);
        const S<T> dF = T(3) / T(2) * s * s - T(5) / T(2) * eta * s + T(36) * mu * mu / (d * d * d);
        s -= F / dF;
    }
    return s;
}

template <class T>
S<T> conv2(const std::vector<S<T>>& a, const std::vector<S<T>>& b, std::size_t k)
{
    S<T> r(a[0].order(), T(0));
    for (std::size_t i = 0; i <= k; ++i) r += a[i] * b[k - i];
    return r;
}

template <class T>
S<T> conv3(const std::vector<S<T>>& a, std::size_t k)
{
    S<T> r(a[0].order(), T(0));
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; i + j <= k; ++j) r += a[i] * a[j] * a[k - i - j];
    return r;
}

// Coefficient of hbar^{2k} in both lines, with whatever u[k], v[k] currently hold.
template <class T>
std::array<S<T>, 2> order_k_lines(const Params& p, const std::vector<S<T>>& u, const std::vector<S<T>>& v,
                                  std::size_t k, const S<T>& dnu)
{
    const T eta(p.eta);
    S<T> L1 = T(5) / T(2) * eta * v[k] - T(3) / T(2) * conv2(u, v, k);
    S<T> L2 = conv3(u, k) / T(2) + T(3) / T(2) * conv2(v, v, k) - T(5) / T(4) * eta * conv2(u, u, k);
    if (k == 0) {
        L1 += T(p.mu);
        L2 += T(p.nu) + dnu;
    } else {
        L1 += v[k - 1].diff().diff();
        std::vector<S<T>> du, ddu;
        for (std::size_t i = 0; i < k; ++i) {
            du.push_back(u[i].diff());
            ddu.push_back(u[i].diff().diff());
        }
        L2 -= T(3) / T(8) * conv2(du, du, k - 1) + T(3) / T(4) * conv2(u, ddu, k - 1)
              - T(5) / T(12) * eta * ddu[k - 1];
        if (k >= 2) L2 += u[k - 2].diff().diff().diff().diff() / T(12);
    }
    return {L1, L2};
}

} // namespace

template <class T>
ExpansionJetT<T> expansion_jet(const Params& p, int K)
{
    if (K < 0 || K > 2) throw DomainError("expansion_jet: K must be in 0..2");
    const std::size_t N = 4 + 2 * static_cast<std::size_t>(K) + 2;
    const T eta(p.eta), mu(p.mu);

    std::vector<S<T>> u, v;
    u.push_back(sigma_series<T>(p, N));
    v.push_back(T(-2) * mu / (T(5) * eta - T(3) * u[0]));
    const S<T> dnu = S<T>::variable(N, T(0));

    // Jacobian of the leading system at (u0, v0)
    const S<T> J11 = T(-3) / T(2) * v[0];
    const S<T> J12 = T(5) / T(2) * eta - T(3) / T(2) * u[0];
    const S<T> J21 = T(3) / T(2) * u[0] * u[0] - T(5) / T(2) * eta * u[0];
    const S<T> J22 = T(3) * v[0];
    const S<T> det = J11 * J22 - J12 * J21;

    for (int k = 1; k <= K; ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        u.emplace_back(N, T(0));
        v.emplace_back(N, T(0));
        const auto R = order_k_lines<T>(p, u, v, kk, dnu);
        u[kk] = -(J22 * R[0] - J12 * R[1]) / det;
        v[kk] = -(J11 * R[1] - J21 * R[0]) / det;
    }

    ExpansionJetT<T> jet;
    jet.K = K;
    jet.at = p;
    for (int k = 0; k <= K; ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        std::vector<T> du, dv;
        for (std::size_t n = 0; n <= u[kk].order(); ++n) {
            du.push_back(u[kk].derivative(n));
            dv.push_back(v[kk].derivative(n));
        }
        jet.u.push_back(du);
        jet.v.push_back(dv);
    }
    return jet;
}

template <class T>
std::array<T, 2> string_residual(const Params& p, const ExpansionJetT<T>& jet, T hbar)
{
    const T h2 = hbar * hbar;
    // truncated u, v and the needed nu-derivatives
    std::array<T, 5> U{}, V{};
    T w(1);
    for (int k = 0; k <= jet.K; ++k) {
        for (std::size_t n = 0; n < 5; ++n) {
            U[n] += w * jet.u[static_cast<std::size_t>(k)][n];
            V[n] += w * jet.v[static_cast<std::size_t>(k)][n];
        }
        w *= h2;
    }
    const T eta(p.eta), mu(p.mu), nu(p.nu);
    using std::abs;
    const T r1 = T(5) / T(2) * eta * V[0] - T(3) / T(2) * U[0] * V[0] + mu + h2 * V[2];
    const T r2 = U[0] * U[0] * U[0] / T(2) + T(3) / T(2) * V[0] * V[0] - T(5) / T(4) * eta * U[0] * U[0] + nu
                 - h2 * (T(3) / T(8) * U[1] * U[1] + T(3) / T(4) * U[0] * U[2] - T(5) / T(12) * eta * U[2])
                 + h2 * h2 * U[4] / T(12);
    return {abs(r1), abs(r2)};
}

template ExpansionJetT<double> expansion_jet<double>(const Params&, int);
template ExpansionJetT<quad> expansion_jet<quad>(const Params&, int);
template std::array<double, 2> string_residual<double>(const Params&, const ExpansionJetT<double>&, double);
template std::array<quad, 2> string_residual<quad>(const Params&, const ExpansionJetT<quad>&, quad);

// ---------------------------------------------------------------------------
// Flow identities and tau-differential

namespace {

double fd_step(double x) { return 1e-5 * (1.0 + std::abs(x)); }

struct UV {
    double u, v;
};

UV leading_uv(const Params& p)
{
    const double s = solve_sigma(p).sigma;
    return {s, -2 * p.mu / (5 * p.eta - 3 * s)};
}

template <class F>
double central(F f, Params p, int coord)
{
    double* x = coord == 0 ? &p.nu : coord == 1 ? &p.mu : &p.eta;
    const double h = fd_step(*x), x0 = *x;
    *x = x0 + h;
    const double fp = f(p);
    *x = x0 - h;
    const double fm = f(p);
    return (fp - fm) / (2 * h);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

FlowReport flow_compatibility(const Params& p)
{
    FlowReport r;
    const SigmaJets j = sigma_jets(p, 1);
    const double s = j.d_nu[0], d = 5 * p.eta - 3 * s;
    const double u = s;
    const double u_nu = j.d_nu[1], u_mu = j.d_mu, u_eta = j.d_eta;
    const double v = -2 * p.mu / d;
    const double v_nu = -6 * p.mu * u_nu / (d * d);
    const double v_mu = -2 / d - 6 * p.mu * u_mu / (d * d);

    auto third = [&](double un, double ue, double vn) {
        // d/dnu [u^3/4 - v^2/2 - 5/3 eta u^2]
        return ue - (0.75 * u * u * un - v * vn - 10.0 / 3.0 * p.eta * u * un) - 4.0 / 3.0;
    };
    r.analytic = {std::abs(u_mu + 2 * v_nu), std::abs(v_mu + u * u_nu), std::abs(third(u_nu, u_eta, v_nu))};

    auto fu = [](const Params& q) { return leading_uv(q).u; };
    auto fv = [](const Params& q) { return leading_uv(q).v; };
    const double fu_nu = central(fu, p, 0), fu_mu = central(fu, p, 1), fu_eta = central(fu, p, 2);
    const double fv_nu = central(fv, p, 0), fv_mu = central(fv, p, 1);
    r.fd = {std::abs(fu_mu + 2 * fv_nu), std::abs(fv_mu + u * fu_nu), std::abs(third(fu_nu, fu_eta, fv_nu))};
    return r;
}

DlogtauReport dlogtau_consistency(const Params& p)
{
    DlogtauReport r;
    const LeadingHamiltonians h = leading_hamiltonians(p);
    const std::array<double, 3> half = {h.h1_0 / 2, h.h2_0 / 2, h.h5_0 / 2};
    auto w = [](const Params& q) { return tau_leading(q).varpi0; };
    for (int c = 0; c < 3; ++c) {
        r.fd_gradient[static_cast<std::size_t>(c)] = central(w, p, c);
        r.gradient[static_cast<std::size_t>(c)] = rel(r.fd_gradient[static_cast<std::size_t>(c)], half[static_cast<std::size_t>(c)]);
    }
    auto h1 = [](const Params& q) { return leading_hamiltonians(q).h1_0; };
    auto h2 = [](const Params& q) { return leading_hamiltonians(q).h2_0; };
    auto h5 = [](const Params& q) { return leading_hamiltonians(q).h5_0; };
    r.closedness[0] = rel(central(h1, p, 1), central(h2, p, 0));
    r.closedness[1] = rel(central(h1, p, 2), central(h5, p, 0));
    r.closedness[2] = rel(central(h2, p, 2), central(h5, p, 1));
    return r;
}

// ---------------------------------------------------------------------------
// Hamiltonians

HamiltonianValues hamiltonians_on_solution(const std::array<double, 4>& uj, const std::array<double, 2>& vj,
                                           double t1, double t2, double t5)
{
    const double U = uj[0], U1 = uj[1], U2 = uj[2], U3 = uj[3];
    const double V = vj[0], V1 = vj[1];
    HamiltonianValues h;

    h.H1 = -U1 * U3 / 12 + U2 * U2 / 24 + 3.0 / 8 * U * U1 * U1 + 0.5 * V1 * V1 - std::pow(U, 4) / 8 - 1.5 * U * V * V
           - 5.0 / 6 * t5 * (0.25 * U1 * U1 - 0.5 * U * U * U - 3 * V * V) + t1 / 2 * U * U;

    h.H2 = U3 * V1 / 6 - 0.5 * V * U * U2 + 0.25 * V * U1 * U1 - U * U1 * V1 + U * U * U * V + V * V * V
           + 5.0 / 6 * t5 * (U2 - 3 * U * U) * V + t2 / 3 * (U2 - 3 * U * U) + 2 * t1 * V;

    const double U4p = std::pow(U, 4), U5p = std::pow(U, 5), U6p = std::pow(U, 6);
    h.H5 = U1 * U2 * U3 / 144 + V1 * U3 / 12 - U * U * U1 * U3 / 16 + U * U3 * U3 / 144 + U * U1 * U1 * U2 / 16
           - 0.25 * U * V * U1 * V1 + 3.0 / 8 * std::pow(V, 4)
           - std::pow(U1, 4) / 128 - U6p / 16 + std::pow(U2, 3) / 432 + U4p * U2 / 12 + 3.0 / 32 * U * U * U * U1 * U1
           - U * U * U * V * V / 8 - U * U * U2 * U2 / 32 + U * U * V1 * V1 / 8
           - U2 * V1 * V1 / 12 - V * V * U1 * U1 / 16
           + 5.0 / 6 * t5
                 * (1.5 * U * U * V * V + U * U2 / 8 - 0.5 * U * V1 * V1 - U1 * U1 * U2 / 12 - 0.5 * V * V * U2
                    - 7.0 / 12 * U * U * U * U2 - 0.75 * U1 * U1 * U * U + U * U1 * U3 / 3 + 0.5 * V * U1 * V1
                    + 5.0 / 8 * U5p - U3 * U3 / 36)
           + 0.5 * t2 * (U * U * V + U2 * V / 3 - U1 * V1)
           + t1 / 2 * (V * V - 0.25 * U1 * U1 - 0.5 * U * U * U + U * U2 / 3) - 5.0 / 3 * t5 * t2 * U * V
           + 5.0 / 3 * t5 * t1 * (U * U - U2 / 3)
           + 25.0 / 36 * t5 * t5 * (U * U * U2 + 3 * U * V * V - 1.5 * U4p - U2 * U2 / 6 - 2 * V1 * V1 - 8 * t2 * V)
           - 125.0 / 18 * t5 * t5 * t5 * V - 10.0 / 9 * t5 * t2 * t2 - 2.0 / 3 * t1 * t1;

    Darboux& D = h.darboux;
    D.QU = U - 4.0 / 3 * t5;
    D.QV = V;
    D.QW = U1;
    D.PU = 0.25 * (3 * U * U1 - U3 / 3 - 7.0 / 3 * t5 * U1);
    D.PV = V1;
    D.PW = U2 / 12 - t5 * U / 6 + 7.0 / 18 * t5 * t5;

    const double QU = D.QU, QV = D.QV, QW = D.QW, PU = D.PU, PV = D.PV, PW = D.PW;
    const double t52 = t5 * t5, t53 = t52 * t5;
    h.H1_darboux = PU * QW + 6 * PW * PW - 3.0 / 8 * QU * QW * QW + 0.5 * PV * PV - std::pow(QU, 4) / 8
                   - 1.5 * QU * QV * QV - t1 * QU + 2 * t2 * QV
                   + t5 / 8 * (16 * QU * PW - 2 * QU * QU * QU + 4 * QV * QV - QW * QW) - 0.5 * t52 * (4 * PW - QU * QU)
                   + 19.0 / 27 * t53 * QU + 41.0 / 54 * t52 * t52 - 4.0 / 3 * t5 * t1;

    h.H2_darboux = 0.5 * PV * QU * QW + 0.25 * QV * QW * QW - 2 * PU * PV - 6 * PW * QU * QV + QV * QV * QV
                   + QU * QU * QU * QV + 2 * t1 * QV + t2 * (4 * PW - QU * QU)
                   + 0.5 * t5 * (QV * QU * QU - PV * QW + 4 * QV * PW) - 2 * t5 * t2 * QU - 65.0 / 27 * t53 * QV
                   - 22.0 / 9 * t52 * t2;

    const double QU2 = QU * QU, QU3 = QU2 * QU, QU4 = QU3 * QU;
    h.H5_darboux = 0.5 * QW * PV * QU * QV - 0.75 * PU * QW * QU2 - PU * PV * QV + PU * PW * QW + 3.0 / 8 * std::pow(QV, 4)
                   - std::pow(QW, 4) / 128 + 4 * PW * PW * PW
                   - std::pow(QU, 6) / 16 - PW * PV * PV + PW * QU4 + PU * PU * QU - 4.5 * PW * PW * QU2
                   - QU3 * QV * QV / 8 + QU2 * PV * PV / 8 + 3.0 / 32 * QW * QW * QU3 - QW * QW * QV * QV / 16
                   + t1 * (2 * QU * PW - QW * QW / 8 - QU3 / 4 + QV * QV / 2)
                   + 0.5 * t2 * (QV * QU2 - PV * QW + 4 * QV * PW)
                   + t5
                         * (3.0 / 16 * std::pow(QU, 5) - 2 * PU * PU - QU2 * QW * QW / 16 - PW * QW * QW / 4
                            + 5 * PW * PW * QU - 2 * PW * QU3 - 5 * PW * QV * QV + 0.75 * QU2 * QV * QV
                            - 0.25 * PV * PV * QU + 0.5 * PV * QV * QW + PU * QU * QW)
                   - t2 * t2 * QU - t1 * t2 * (4 * PW - QU2)
                   + t52
                         * (47.0 / 12 * QU * QV * QV - 29.0 / 18 * PU * QW - 1.5 * PW * QU2 + 29.0 / 48 * QU * QW * QW
                            + 7.0 / 18 * QU4 - 14.0 / 9 * PV * PV - 20.0 / 3 * PW * PW)
                   - t53 / 108 * (284 * QU * PW - 49 * QU3 + 152 * QV * QV - 11 * QW * QW) + 19.0 / 9 * t52 * t1 * QU
                   - 65.0 / 9 * t52 * t2 * QV + t52 * t52 / 216 * (1304 * PW - 299 * QU2)
                   - 2173.0 / 972 * t52 * t53 * QU - 2.0 / 3 * t1 * t1 - 22.0 / 9 * t5 * t2 * t2
                   + 82.0 / 27 * t53 * t1 - 556.0 / 243 * t53 * t53;
    return h;
}

HamiltonianScaling hamiltonian_scaling(const Params& p, const std::vector<double>& hbars)
{
    const ExpansionJet jet = expansion_jet<double>(p, 1);
    std::array<std::vector<double>, 5> vals;
    for (double hb : hbars) {
        const double h2 = hb * hb;
        auto sc = [&](double e) { return std::pow(hb, e / 7.0); };
        std::array<double, 4> U{};
        std::array<double, 2> V{};
        for (std::size_t n = 0; n < 4; ++n) U[n] = sc(-2.0 + 6.0 * n) * (jet.u[0][n] + h2 * jet.u[1][n]);
        for (std::size_t n = 0; n < 2; ++n) V[n] = sc(-3.0 + 6.0 * n) * (jet.v[0][n] + h2 * jet.v[1][n]);
        const auto H = hamiltonians_on_solution(U, V, sc(-6) * p.nu, sc(-5) * p.mu, sc(-2) * p.eta);
        const std::array<double, 5> row = {H.H1, H.H2, H.H5, H.H1_darboux, H.H2_darboux};
        for (std::size_t i = 0; i < 5; ++i) vals[i].push_back(row[i]);
    }
    HamiltonianScaling r;
    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<double> a;
        for (double x : vals[i]) a.push_back(std::abs(x) + 1e-300);
        r.exponent[i] = loglog_slope(hbars, a);
        const double e7 = std::round(7.0 * r.exponent[i]) / 7.0;
        r.coefficient[i] = vals[i].back() * std::pow(hbars.back(), -e7);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Matrix-model bridge

namespace {

template <class T>
T ideal_impl(const T& sigma, const T& t, const T& tau, const T& H)
{
    using std::cosh;
    T r = -t - tau * tau * sigma * (sigma * sigma - T(3)) / T(9) - sigma / (T(3) * (T(1) + sigma) * (T(1) + sigma));
    if (H != T(0)) {
        const T den = T(1) - sigma * sigma;
        if (den == T(0)) throw PoleError("matrix_model_ideal: sigma = +-1 with H != 0");
        const T q = sigma / den;
        r += T(2) / T(3) * q * q * (cosh(H) - T(1));
    }
    return r;
}

} // namespace

double matrix_model_ideal(double sigma, double t, double tau, double H)
{
    if (sigma == -1.0) throw PoleError("matrix_model_ideal: sigma = -1");
    return ideal_impl<double>(sigma, t, tau, H);
}

Rational matrix_model_ideal(const Rational& sigma, const Rational& t, const Rational& tau)
{
    if (sigma == Rational(-1)) throw PoleError("matrix_model_ideal: sigma = -1");
    return -t - tau * tau * sigma * (sigma * sigma - 3) / 9 - sigma / (3 * (1 + sigma) * (1 + sigma));
}

quad matrix_model_ideal(const quad& sigma, const quad& t, const quad& tau, const quad& H)
{
    if (sigma == quad(-1)) throw PoleError("matrix_model_ideal: sigma = -1");
    return ideal_impl<quad>(sigma, t, tau, H);
}

MultiscalingReport multiscaling_check(const Params& p, bool literal)
{
    const quad C1 = quad(9) / 164, C2 = quad(2) / 3, C5 = quad(5) / 12;
    const quad eta(p.eta), mu(p.mu), nu(p.nu);
    MultiscalingReport r;
    r.target = 5.0 * p.eta / 3.0 - solve_sigma(p).sigma;

    auto F = [&](const quad& eps, const quad& s) {
        const quad e2 = eps * eps, e3 = e2 * eps;
        const quad tau = quad(1) / 4 - C5 * eta * eps + C1 * nu * e3 / 9;
        const quad sg = literal ? quad(-8) : quad(8);
        const quad t = quad(-5) / 72 - C5 * eta * eps / 9 - C1 * nu * e3 + 2 * C5 * C5 * eta * eta * e2 / 9
                       + sg * C5 * C5 * C5 * eta * eta * eta * e3 / 9;
        using boost::multiprecision::pow;
        const quad H = literal ? C2 * mu * e3 : C2 * mu * pow(eps, quad(5) / 2);
        return matrix_model_ideal(quad(1) + eps * s, t, tau, H) / e3;
    };

    std::vector<quad> es, ss;
    for (int k = 0; k < 5; ++k) {
        const quad eps = quad(1e-3) / quad(1 << k);
        quad s(r.target);
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            const quad h("1e-15");
            const quad f = F(eps, s);
            const quad df = (F(eps, s + h) - F(eps, s - h)) / (2 * h);
            const quad ds = f / df;
            s -= ds;
            if (abs(ds) < quad("1e-20") * (1 + abs(s))) {
                ok = true;
                break;
            }
        }
        r.eps.push_back(static_cast<double>(eps));
        r.ratio.push_back(ok ? static_cast<double>(s) : std::nan(""));
        es.push_back(eps);
        ss.push_back(s);
    }

    // Neville extrapolation to eps = 0
    std::vector<quad> P = ss;
    const std::size_t n = P.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i) P[i] = (es[i + m] * P[i] - es[i] * P[i + 1]) / (es[i + m] - es[i]);
    r.extrapolated = static_cast<double>(P[0]);
    r.error = std::abs(r.extrapolated - r.target);
    return r;
}

} // namespace s34
