#include <doctest.h>

#include <cmath>

#include "s34/painleve.hpp"

using namespace s34;

TEST_CASE("series coefficients")
{
    const auto a = pi_series_coeffs(6);
    CHECK(a.size() == 6);
    CHECK(a[0] == doctest::Approx(1 / std::sqrt(6.0)).epsilon(1e-15));
    // q = a0 t^{1/2} + a1 t^{-2} + ..., t = -x: the t^{-3/2} balance gives a1 = -1/48
    CHECK(a[1] == doctest::Approx(-1.0 / 48).epsilon(1e-14));
}

TEST_CASE("property: the truncated series nearly solves the equation")
{
    for (double x : {-30.0, -24.0}) {
        const double h = 1e-3;
        const double qm = pi_seed(x - h).q, q0 = pi_seed(x).q, qp = pi_seed(x + h).q;
        const double res = (qp - 2 * q0 + qm) / (h * h) - 6 * q0 * q0 - x;
        CHECK(std::abs(res) < 1e-4);
    }
    const auto s = pi_seed(-24);
    CHECK(s.truncation < 1e-30);
    CHECK(std::abs(s.q - 2) < 0.02);
}

TEST_CASE("Hamiltonian")
{
    CHECK(pi_hamiltonian(-1, 2, 3) == doctest::Approx(4.5 - 16 + 2));
    const auto tr = pi_integrate(-24, -20);
    CHECK(tr.states.front().H == doctest::Approx(pi_hamiltonian_asymptotic(-24)).epsilon(1e-3));
    CHECK(pi_hamiltonian_residual(tr) < 1e-8);
}

TEST_CASE("trajectory from -24 stops at the pole guard")
{
    CHECK_THROWS_AS(pi_integrate(-24, -1), PoleEncountered);
    const auto tr = pi_integrate(-24, -1, 1e-3, true);
    CHECK(tr.pole);
    CHECK(tr.pole_x > -24);
    CHECK(tr.pole_x < -1);
    CHECK(tr.states.back().x < tr.pole_x);
    CHECK(pi_hamiltonian_residual(tr) < 1e-8);
    // the residual column is NaN only where |q| is large
    const auto r = pi_hamiltonian_residuals(tr);
    for (std::size_t i = 2; i + 2 < r.size(); ++i)
        if (std::isnan(r[i])) CHECK(std::abs(tr.states[i].q) > 5);
}

TEST_CASE("seed consistency between two starts")
{
    const auto a = pi_integrate(-24, -22);
    const auto b = pi_integrate(-25, -22);
    double worst = 0;
    for (const auto& s : a.states) {
        const auto i = static_cast<std::size_t>(std::llround((s.x + 25) / 1e-3));
        REQUIRE(i < b.states.size());
        CHECK(std::abs(b.states[i].x - s.x) < 1e-9);
        worst = std::max(worst, std::abs(b.states[i].q - s.q));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(pi_integrate(-19, -1), DomainError);
    CHECK_THROWS_AS(pi_integrate(-24, -25), DomainError);
    CHECK_THROWS_AS(pi_seed(1), DomainError);
}
