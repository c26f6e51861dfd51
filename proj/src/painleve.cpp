#include "s34/painleve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace s34 {

namespace {

using State = std::array<double, 2>;

// Exponent of the k-th term in t = -x.
double series_power(int k) { return 0.5 - 2.5 * k; }

struct PoleStop {
    double x;
};

} // namespace

double pi_hamiltonian(double x, double q, double qp) { return 0.5 * qp * qp - 2.0 * q * q * q - x * q; }

double pi_hamiltonian_asymptotic(double x)
{
    const double t = -x;
    return 2.0 / 3.0 * t * std::sqrt(t) / std::sqrt(6.0);
}

std::vector<double> pi_series_coeffs(int nmax)
{
    std::vector<double> a{1.0 / std::sqrt(6.0)};
    for (int n = 1; n < nmax; ++n) {
        const double p = series_power(n - 1);
        double conv = 0;
        for (int i = 1; i < n; ++i) conv += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(n - i)];
        a.push_back((p * (p - 1.0) * a.back() - 6.0 * conv) / (12.0 * a[0]));
    }
    return a;
}

PISeed pi_seed(double x, int nmax)
{
    if (x >= 0) throw DomainError("pi_seed: x must be negative");
    const double t = -x;
    const auto a = pi_series_coeffs(nmax);
    std::vector<double> terms;
    for (int k = 0; k < nmax; ++k) terms.push_back(a[static_cast<std::size_t>(k)] * std::pow(t, series_power(k)));
    // stop before the smallest term
    int m = 1;
    for (int k = 2; k < nmax; ++k)
        if (std::abs(terms[static_cast<std::size_t>(k)]) < std::abs(terms[static_cast<std::size_t>(m)])) m = k;
    PISeed s;
    s.terms = m;
    s.truncation = std::abs(terms[static_cast<std::size_t>(m)]);
    for (int k = 0; k < m; ++k) {
        const double p = series_power(k);
        s.q += terms[static_cast<std::size_t>(k)];
        s.qprime -= p * terms[static_cast<std::size_t>(k)] / t;
    }
    return s;
}

PITrajectory pi_integrate(double x_start, double x_end, double step, bool stop_at_pole)
{
    namespace ode = boost::numeric::odeint;
    if (!(x_start <= pi_seed_limit))
        throw DomainError("pi_integrate: x_start must be <= " + std::to_string(pi_seed_limit));
    if (!(x_end > x_start) || !(step > 0)) throw DomainError("pi_integrate: empty integration range");

    PITrajectory tr;
    tr.step = step;
    tr.seed = pi_seed(x_start);
    State y{tr.seed.q, tr.seed.qprime};
    auto rhs = [](const State& s, State& d, double x) {
        d[0] = s[1];
        d[1] = 6.0 * s[0] * s[0] + x;
    };
    auto push = [&](double x) { tr.states.push_back({x, y[0], y[1], pi_hamiltonian(x, y[0], y[1]), 1}); };
    auto stepper = ode::make_controlled(1e-14, 1e-13, ode::runge_kutta_fehlberg78<State>());
    auto guard = [](const State& s, double x) {
        if (!std::isfinite(s[0]) || std::abs(s[0]) > pi_pole_guard) throw PoleStop{x};
    };

    const auto n = static_cast<long>(std::floor((x_end - x_start) / step + 1e-9));
    push(x_start);
    for (long i = 1; i <= n; ++i) {
        const double x0 = x_start + static_cast<double>(i - 1) * step;
        const double x1 = x_start + static_cast<double>(i) * step;
        const State saved = y;
        try {
            ode::integrate_adaptive(stepper, rhs, y, x0, x1, step, guard);
        } catch (const PoleStop& p) {
            if (!stop_at_pole)
                throw PoleEncountered("pi_integrate: |q| exceeded the pole guard near x = " + std::to_string(p.x));
            y = saved;
            tr.pole = true;
            tr.pole_x = p.x;
            return tr;
        }
        push(x1);
    }
    return tr;
}

std::vector<double> pi_hamiltonian_residuals(const PITrajectory& t, double q_cap)
{
    const auto& s = t.states;
    std::vector<double> r(s.size(), std::numeric_limits<double>::quiet_NaN());
    const double h = t.step;
    for (std::size_t i = 2; i + 2 < s.size(); ++i) {
        bool ok = true;
        for (std::size_t k = i - 2; k <= i + 2; ++k) ok = ok && std::abs(s[k].q) <= q_cap;
        if (!ok) continue;
        const double d = (-s[i + 2].H + 8.0 * s[i + 1].H - 8.0 * s[i - 1].H + s[i - 2].H) / (12.0 * h);
        r[i] = std::abs(d + s[i].q);
    }
    return r;
}

double pi_hamiltonian_residual(const PITrajectory& t, double q_cap)
{
    double m = 0;
    for (double v : pi_hamiltonian_residuals(t, q_cap))
        if (!std::isnan(v)) m = std::max(m, v);
    return m;
}

} // namespace s34
