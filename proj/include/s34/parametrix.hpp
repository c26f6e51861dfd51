#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "s34/spectral_curve.hpp"

namespace s34 {

using IMat3 = Eigen::Matrix<long long, 3, 3>;
using CMat3 = Eigen::Matrix3cd;
using CMat2 = Eigen::Matrix2cd;
using BigRational = boost::multiprecision::cpp_rational;

// I + s E_ij with 1-based (i, j).
IMat3 elementary(int i, int j, long long s);
// Cyclic matrix with ones on the superdiagonal and in the (3,1) corner.
IMat3 cyclic_S();

// ----------------------------------------------------------------------------
// Stokes data of the 3x3 problem

struct StokesData {
    std::map<int, long long> s;                     // k = -7..-1, 1..7
    std::map<int, std::pair<int, int>> pattern;     // (i, j) of E_ij for each k
    IMat3 Scal = IMat3::Zero();

    IMat3 S(int k) const;
};

// Extend (s1..s7) by s_k = -s_{k+8}.
StokesData stokes_data(const std::array<long long, 7>& s7);
// Data (0, -1, 0, 0, 1, -1, 0).
StokesData reference_stokes_data();

// S_{-7} ... S_{-1} S_1 ... S_7
IMat3 stokes_product(const StokesData& d);
bool stokes_check(const StokesData& d);
bool stokes_antisymmetric(const StokesData& d);

// Seven planes of the Stokes manifold, parametrized by (x, y).
std::array<long long, 7> plane_point(int k, long long x, long long y);
std::vector<int> plane_membership(const std::array<double, 7>& s7);

// ----------------------------------------------------------------------------
// Global parametrix

struct GlobalParametrix {
    SpectralCurve curve;
};

// M_ij = phi_i(u_j); for real lam the side selects the boundary value.
CMat3 global_M(const GlobalParametrix& g, cplx lam, std::optional<HalfPlane> side = std::nullopt);

// Normalizing gauge f-hat(lam).
CMat3 f_hat(cplx lam, std::optional<HalfPlane> side = std::nullopt);

// Jump matrices: M_+ = M_- Ja on (alpha, inf); M_lower = M_upper Jb on (-inf, beta).
CMat3 jump_alpha();
CMat3 jump_beta();

struct JumpReport {
    double alpha_cut = 0;   // max residual on (alpha, inf)
    double beta_cut = 0;    // max residual on (-inf, beta)
    double gap = 0;         // max |M_+ - M_-| on (beta, alpha)
    double limit_mismatch = 0; // boundary values against M(x +- i 1e-12)
    int points = 0;
};

JumpReport jump_residuals(const GlobalParametrix& g, int points = 20);

struct NormalizationReport {
    double slope = 0;          // log-log slope of |M f^-1 - I| in |lam|
    double worst_residual = 0; // at the smallest radius
};

NormalizationReport normalization_decay(const GlobalParametrix& g);

struct DetReport {
    cplx value;
    double spread = 0; // max deviation from value over the samples
};

DetReport det_constancy(const GlobalParametrix& g, int samples = 40);

// Reflection M(lam; mu) = D M(-lam; -mu) S-tilde, with D = diag(1,-1,1) as printed
// or D = diag(-1,1,-1). Returns the max residual over the sample points.
double reflection_residual(const Params& p, const std::vector<cplx>& lams, bool printed_sign);

// ----------------------------------------------------------------------------
// Airy coefficients

struct AiryCoeffs {
    std::vector<BigRational> s;
    std::vector<BigRational> t;
};

AiryCoeffs airy_series(int kmax);
// Gamma-function form of s_k in floating point.
double airy_s_gamma(int k);

CMat2 P_k_matrix(int k, cplx zeta, const AiryCoeffs& coeffs);

// ----------------------------------------------------------------------------
// First correction

struct ResidueData {
    CMat3 W1;
    CMat3 W1_hat;
    double radius_agreement = 0; // max |W1(r1) - W1(r2)|
};

CMat3 residue_W1_at(const GlobalParametrix& g, double radius, int nodes = 256);
ResidueData residue_W1(const GlobalParametrix& g);

struct PairingReport {
    double value = 0;      // -(W1 + W1_hat)_{31}, real part
    double imag = 0;
    double oracle = 0;     // -(1/24) d log(chi) / d nu
};

PairingReport pairing_check(const Params& p);

} // namespace s34
