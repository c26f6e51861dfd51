#pragma once

#include <array>
#include <vector>

#include "s34/painleve.hpp"
#include "s34/parametrix.hpp"
#include "s34/spectral_curve.hpp"

namespace s34 {

// ----------------------------------------------------------------------------
// Critical surface

double surface_discriminant(const Params& p);
// Sum of the absolute values of the twelve monomials; the natural scale for |D|.
double surface_discriminant_scale(const Params& p);

struct SurfacePoint {
    double nu = 0;
    double mu_plus = 0;
    double mu_minus = 0;
    double t1 = 0;
    double t2_plus = 0;
    double t2_minus = 0;
    double t5 = 0;
};

// Requires sigma > max(5 eta / 3, 0); sigma == 0 is allowed as the gamma_- endpoint.
SurfacePoint surface_param(double sigma, double eta);

// Angle between the two unit normals on gamma_+ at (eta, 0, 125/108 eta^3).
double gauss_angle(double eta);

struct GaussMax {
    double eta = 0;
    double angle = 0;
};

GaussMax gauss_angle_max(double lo = 0.05, double hi = 2.0, double tol = 1e-10);

// ----------------------------------------------------------------------------
// Modified curves

struct ModifiedCurve {
    double eta0 = 0;
    double eta_hat = 0;
    double nu_hat = 0;
    bool positive = true;            // eta0 > 0 case
    double alpha_hat = 0;            // u-value of the merged branch point (0 when eta0 < 0)
    double beta_hat = 0;             // lambda-value -2 alpha_hat^3
    SpectralCurve base;              // lambda-hat and the sheet structure
    std::array<long double, 8> g{};  // g-hat coefficients, u^7 ... u^0
};

ModifiedCurve modified_curve(double eta0, double eta_hat, double nu_hat);

std::array<cplx, 3> ghat_all(const ModifiedCurve& m, cplx lam, HalfPlane side = HalfPlane::upper);

// Matching of g-hat against the phase at (eta_hat, 0, nu_hat).
DecayReport modified_asymptotics(const ModifiedCurve& m);

// max |g-hat_j(lam; 0) - g_j(lam)| against the critical curve on gamma_+, over sample points.
double modified_vs_critical(double eta0, int samples = 20);

// ----------------------------------------------------------------------------
// Scaling maps

struct ScalingMaps {
    cplx zeta;    // conformal coordinate at lam
    cplx xs;      // analytic scaling function at lam
    double C = 0; // constant of the direction n (eta0 > 0 case)
    cplx psi;     // g1 - g2 (eta0 > 0 case)
    double eta_hat = 0;
    double nu_hat = 0;
};

double scaling_constant(double eta0, double n_eta, double n_nu);

ScalingMaps scaling_maps_plus(double eta0, double n_eta, double n_nu, double x, double hbar, cplx lam);

// hbar^{-4/5} xs extrapolated to lam -> beta-hat along arg(lam - beta-hat) = theta.
double scaling_limit_plus(double eta0, double n_eta, double n_nu, double x, double hbar, double theta = pi / 2);

// |zeta'| at beta-hat by finite differences.
double zeta_derivative_plus(double eta0);

ScalingMaps scaling_maps_minus(double s, double x, double hbar, cplx lam);

struct UniformLimit {
    std::vector<double> hbars;
    std::vector<double> sup_error; // sup over |lam| < hbar^{2/5 + delta} of |hbar^{-4/5} xs - x|
    double slope = 0;
};

UniformLimit scaling_limit_minus(double s, double x, const std::vector<double>& hbars, double delta = 0.1);

// log-log slope of |nu(hbar)| over the given hbars.
double nu_scaling_exponent(double s, double x, const std::vector<double>& hbars);

// Reconstruction -(6/5) w^{1-j} zeta^{5/3} + w^{j-1} xs zeta^{1/3}, j = 1..3 (upper half-plane).
std::array<cplx, 3> reconstruct_g_minus(double s, double x, double hbar, cplx lam);
// Formula index j corresponds to sheet (1, 3, 2)[j]; max |reconstruction - g-hat| over lams.
double reconstruct_mismatch_minus(double s, double x, double hbar, const std::vector<cplx>& lams);

// ----------------------------------------------------------------------------
// Painleve I related data

CMat3 schlesinger_factor(cplx lam, const PIState& st, double s, double hbar);

// hbar^2 log tau-hat_0
double tauhat0_exponent(double eta, double nu, double eta0);
std::array<double, 2> tauhat0_gradient(double eta, double nu, double eta0); // (d/deta, d/dnu)

enum class Stratum { gamma_plus, gamma_minus };

struct TritronqueeReport {
    std::vector<double> hbars;
    std::vector<double> values;
    double extrapolated = 0;
};

TritronqueeReport tritronquee_report(double eta0, Stratum side, double n_eta = 0, double n_nu = -1, double x = -1);
double tritronquee_constant(double eta0, Stratum side, double n_eta = 0, double n_nu = -1);

// 3x3 Painleve I problem: Stokes data (1 - k, -1, 0, -1, k) and the relation
// S1...S5 S^T = S (S1...S5)^T.
std::array<long long, 5> pi3_stokes_data(long long kappa);
IMat3 pi3_stokes_product(const std::array<long long, 5>& s);
bool pi3_stokes_relation(const std::array<long long, 5>& s);
// max |w^{-k} S^T Xi_k S - Xi_k| for k = 1, 2 at the given (H, q).
double pi3_xi_symmetry(double H, double q);

} // namespace s34
