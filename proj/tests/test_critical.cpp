#include <doctest.h>

#include <cmath>
#include <vector>

#include "s34/critical.hpp"
#include "s34/tau_expansion.hpp"

using namespace s34;

namespace {

// every term vanishes at the gamma_- points, so an exact zero counts as zero
double rel_disc(const Params& p)
{
    const double s = surface_discriminant_scale(p);
    return s == 0 ? std::abs(surface_discriminant(p)) : std::abs(surface_discriminant(p)) / s;
}

} // namespace

TEST_CASE("discriminant at reference points")
{
    CHECK(rel_disc({1, 0, 125.0 / 108}) < 1e-14);
    CHECK(surface_discriminant({-1, 0, 0}) == 0);
    CHECK(surface_discriminant({1, 0, 0}) == 0);
    CHECK(rel_disc({1, 0.1, 0.2}) > 1e-3);
}

TEST_CASE("property: discriminant vanishes on the parametrized surface")
{
    int n = 0;
    for (double eta : {-2.0, -1.0, -0.3, 0.4, 1.0, 2.5})
        for (double f : {0.0, 0.01, 0.2, 0.7, 1.5, 4.0}) {
            const double lo = std::max(5 * eta / 3, 0.0);
            const double sigma = lo + f * (1 + std::abs(eta));
            const auto sp = surface_param(sigma, eta);
            CHECK(rel_disc({eta, sp.mu_plus, sp.nu}) < 1e-10);
            CHECK(rel_disc({eta, sp.mu_minus, sp.nu}) < 1e-10);
            CHECK(sp.mu_plus == doctest::Approx(-sp.mu_minus));
            CHECK(sp.t5 == eta);
            ++n;
        }
    CHECK(n == 36);
}

TEST_CASE("surface limits: gamma_+ and gamma_- endpoints")
{
    const auto plus = surface_param(5.0 / 3, 1.0);
    CHECK(plus.mu_plus == 0);
    CHECK(plus.nu == doctest::Approx(125.0 / 108).epsilon(1e-14));
    const auto minus = surface_param(0.0, -1.0);
    CHECK(minus.nu == 0);
    CHECK(minus.mu_plus == 0);
    CHECK_THROWS_AS(surface_param(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(surface_param(-0.1, -1.0), DomainError);
}

TEST_CASE("Gauss angle")
{
    const auto m = gauss_angle_max();
    const double eta_star = 2 / (5 * std::sqrt(5.0)) * std::pow(3.0, 0.75);
    CHECK(std::abs(m.eta - eta_star) < 1e-4);
    CHECK(std::abs(m.angle - 1.580416) < 1e-4);
    CHECK(gauss_angle(m.eta) >= gauss_angle(m.eta + 0.01));
    CHECK(gauss_angle(m.eta) >= gauss_angle(m.eta - 0.01));
    for (double eta : {1e-4, 1e-5}) CHECK(std::abs(gauss_angle(eta) / std::sqrt(40 * eta / 3) - 1) < 0.05);
}

TEST_CASE("modified curves reduce to the critical curve")
{
    for (double e0 : {0.5, 1.0, 2.0}) CHECK(modified_vs_critical(e0) < 1e-10);
}

TEST_CASE("modified curve matching")
{
    for (double e0 : {1.0, 2.0}) {
        const auto m = modified_curve(e0, 1.1 * e0, 0.9 * 125.0 / 108 * e0 * e0 * e0);
        CHECK(m.positive);
        CHECK(m.alpha_hat == doctest::Approx(std::sqrt(5 * e0 / 6)).epsilon(1e-14));
        CHECK(m.beta_hat == doctest::Approx(-2 * std::pow(m.alpha_hat, 3)).epsilon(1e-14));
        CHECK(modified_asymptotics(m).worst_slope_error < 0.02);
    }
    const auto neg = modified_curve(-1, -1, 0.3);
    CHECK_FALSE(neg.positive);
    CHECK(neg.alpha_hat == 0);
    CHECK(modified_asymptotics(neg).exact);
}

TEST_CASE("scaling constant and the scaling limit on gamma_+")
{
    CHECK(std::abs(scaling_constant(1, 0, -1) - std::pow(10.0 / 3, 0.2)) < 1e-12);
    CHECK_THROWS_AS(scaling_constant(1, 0, 1), DomainError);
    for (auto [ne, nn] : std::vector<std::pair<double, double>>{{0, -1}, {1, 0}, {1, 1}})
        for (double hb : {1e-3, 1e-4}) CHECK(std::abs(scaling_limit_plus(1, ne, nn, -1, hb) + 1) < 1e-6);
    CHECK(zeta_derivative_plus(1) > 1e-3);
}

TEST_CASE("scaling maps on gamma_-")
{
    const std::vector<double> hs{1e-2, 1e-3, 1e-4};
    const auto ul = scaling_limit_minus(1, -0.7, hs, 0.1);
    CHECK(ul.slope == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(std::abs(nu_scaling_exponent(1, -0.7, hs) - 0.8) < 0.01);
    CHECK(reconstruct_mismatch_minus(1, -0.7, 1e-3, {{0.3, 0.2}, {-1, 0.5}, {2, 3}, {0.01, 0.01}}) < 1e-10);
}

TEST_CASE("Schlesinger factor is unimodular")
{
    for (cplx lam : {cplx(0.4, 0.3), cplx(-2, 1), cplx(5, -0.1)}) {
        const PIState st{-3, 0.7, 0.2, 1.3, 1};
        const CMat3 P = schlesinger_factor(lam, st, 1, 1e-2);
        CHECK(std::abs(P.determinant() - 1.0) < 1e-14);
    }
}

TEST_CASE("tau-hat normalizer on gamma_+")
{
    // independent evaluation of the printed exponent
    auto ref = [](double eta, double nu, double e0) {
        return -(5 * e0 / 6) * (nu * nu + 125.0 / 108 * std::pow(e0, 3) * nu - 125.0 / 54 * e0 * e0 * eta * nu +
                                3125.0 / 1296 * std::pow(e0, 4) * eta * eta - 15625.0 / 5832 * std::pow(e0, 5) * eta);
    };
    CHECK(tauhat0_exponent(1, 0.3, 1.2) == doctest::Approx(ref(1, 0.3, 1.2)).epsilon(1e-14));
    const double h = 1e-6;
    const auto g = tauhat0_gradient(0.9, 0.5, 1.1);
    CHECK(g[0] == doctest::Approx((ref(0.9 + h, 0.5, 1.1) - ref(0.9 - h, 0.5, 1.1)) / (2 * h)).epsilon(1e-7));
    CHECK(g[1] == doctest::Approx((ref(0.9, 0.5 + h, 1.1) - ref(0.9, 0.5 - h, 1.1)) / (2 * h)).epsilon(1e-7));
    // on gamma_+ the gradient is (h5, h1), twice the gradient of varpi0
    for (double e0 : {0.5, 1.0, 2.0}) {
        const double nu0 = 125.0 / 108 * e0 * e0 * e0;
        const auto hh = leading_hamiltonians_at({e0, 0, nu0}, 5 * e0 / 3);
        const auto gg = tauhat0_gradient(e0, nu0, e0);
        CHECK(gg[0] == doctest::Approx(hh.h5_0).epsilon(1e-12));
        CHECK(gg[1] == doctest::Approx(hh.h1_0).epsilon(1e-12));
    }
}

TEST_CASE("degeneration constant is 1/sqrt(6)")
{
    const double target = 1 / std::sqrt(6.0);
    for (auto [ne, nn] : std::vector<std::pair<double, double>>{{0, -1}, {1, 0}, {1, 1}})
        CHECK(std::abs(tritronquee_constant(1, Stratum::gamma_plus, ne, nn) - target) < 1e-6);
    for (double e0 : {-0.5, -1.0, -2.0}) CHECK(std::abs(tritronquee_constant(e0, Stratum::gamma_minus) - target) < 1e-6);
    const auto rep = tritronquee_report(2, Stratum::gamma_plus);
    CHECK(rep.values.size() == rep.hbars.size());
    CHECK(std::abs(rep.extrapolated - target) < std::abs(rep.values.front() - target));
}

TEST_CASE("3x3 Painleve I Stokes data")
{
    CHECK(pi3_stokes_data(1) == std::array<long long, 5>{0, -1, 0, -1, 1});
    CHECK(pi3_stokes_relation(pi3_stokes_data(1)));
    CHECK_FALSE(pi3_stokes_relation({1, 1, 1, 1, 1}));
    CHECK(pi3_xi_symmetry(1.3, 0.7) < 1e-12);
    CHECK(pi3_xi_symmetry(-0.4, 2.2) < 1e-12);
}
