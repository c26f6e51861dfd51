#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "s34/types.hpp"

namespace s34 {

enum class HalfPlane { upper, lower };

inline int side_sign(HalfPlane h) { return h == HalfPlane::upper ? 1 : -1; }

// Sheet index 1..3. For real lambda, `side` selects the boundary value.
struct SheetLabel {
    int index = 1;
    HalfPlane side = HalfPlane::upper;
};

template <class T>
struct CurveCoeffs {
    T eta{}, mu{}, nu{};
    T sigma{}, a{}, b{}, c{};
    T alpha{}, beta{};
    std::array<T, 4> lam{}; // u^3 ... u^0
    std::array<T, 5> Y{};   // u^4 ... u^0
    std::array<T, 8> g{};   // u^7 ... u^0
};

struct SpectralCurve {
    Params params;
    double sigma = 0;
    double a = 0;
    double b = 0;
    double c = 0;
    double alpha = 0;
    double beta = 0;
    std::array<double, 4> lam_coeffs{};
    std::array<double, 5> Y_coeffs{};
    std::array<double, 8> g_coeffs{};
    CurveCoeffs<long double> ld; // same curve, extended precision
};

struct BranchCoeffs {
    double rho_alpha = 0;
    double rho_beta = 0;
    double rho_hat_beta = 0;
    double rho_hat = 0;
    double b_coeff = 0; // 3/5 b, small-lambda coefficient on the eta < 0 boundary
};

struct SheetDecay {
    int sheet = 0;
    HalfPlane side = HalfPlane::upper;
    double direction = 0;    // arg(lambda) of the sampled ray
    double slope = 0;        // log-log slope of |g_j - Theta_jj|
    double max_residual = 0; // over the sampled radii
};

struct DecayReport {
    std::vector<SheetDecay> rows;
    double worst_slope_error = 0; // max |slope + 1/3|
    bool exact = false;           // all residuals at rounding level
};

// Build from a point of D (sigma by continuation).
SpectralCurve build_curve(const Params& p);
// Build with an explicitly supplied root, for points on the boundary of D.
SpectralCurve build_curve_at(const Params& p, long double sigma);

// Root u of lambda(u) = lam on the requested sheet.
cplx uniformize(const SpectralCurve& c, cplx lam, SheetLabel s);
std::array<cplx, 3> sheet_roots(const SpectralCurve& c, cplx lam, HalfPlane side_for_real = HalfPlane::upper);
std::array<cplxl, 3> sheet_roots_ld(const SpectralCurve& c, cplxl lam, HalfPlane side_for_real = HalfPlane::upper);

cplx g_sheet(const SpectralCurve& c, cplx lam, SheetLabel s);
std::array<cplx, 3> g_all(const SpectralCurve& c, cplx lam, HalfPlane side_for_real = HalfPlane::upper);
std::array<cplxl, 3> g_all_ld(const SpectralCurve& c, cplxl lam, HalfPlane side_for_real = HalfPlane::upper);

// Phase theta_j with the principal cube root; a side is required on the negative axis.
cplx theta_phase(cplx lam, int j, const Params& p, std::optional<HalfPlane> side = std::nullopt);
cplxl theta_phase_ld(cplxl lam, int j, long double eta, long double mu, long double nu,
                     std::optional<HalfPlane> side = std::nullopt);
// Diagonal entry (j,j) of the permuted phase matrix: (1,3,2) above, (1,2,3) below.
int hat_index(int j, HalfPlane side);

BranchCoeffs branch_coeffs(const SpectralCurve& c);

DecayReport check_g_asymptotics(const SpectralCurve& c);

enum class BranchPoint { alpha, beta };

// Local behaviour of g3-g2 at alpha or g2-g1 at beta along arg(lambda - anchor) = pi/2.
struct LocalFit {
    double exponent = 0;    // fitted power
    cplx prefactor;         // limit of the difference over (lambda - anchor)^power
    double power = 0;       // power used for the prefactor
    std::vector<double> radii;
};

LocalFit fit_branch_local(const SpectralCurve& c, BranchPoint which, double power);

// Horner evaluation of a real-coefficient polynomial (highest degree first).
template <class T, class Z, std::size_t N>
Z horner(const std::array<T, N>& coeffs, Z x)
{
    Z r = Z(coeffs[0]);
    for (std::size_t k = 1; k < N; ++k) r = r * x + Z(coeffs[k]);
    return r;
}

} // namespace s34
