#pragma once

#include <string>
#include <vector>

#include "s34/spectral_curve.hpp"

namespace s34 {

enum class ContourKind { gamma5, gamma_m3, lens_upper_alpha, lens_lower_alpha, lens_upper_beta, lens_lower_beta };

std::string to_string(ContourKind k);

struct ContourSpec {
    ContourKind kind = ContourKind::gamma5;
    double anchor = 0;      // alpha or beta
    double direction = 0;   // asymptotic angle of the ray
    int samples = 1000;
    double r_min = 1e-6;    // excluded disc around the anchor
    double r_max = 0;       // radial extent
    double bend_angle = 0;  // departure angle at the anchor (Bezier contours)
    double bend_length = 0; // control-leg length of the Bezier (0: straight ray)
};

struct SignReport {
    ContourSpec contour;
    double min_signed_value = 0;
    bool all_pass = false;
    cplx worst_point;
};

struct SeparationReport {
    bool separated = false;
    double min_distance = 0;
};

// Default geometry: Bezier-bent Gamma5 / Gamma-3 and straight lens rays at +-pi/12.
std::vector<ContourSpec> default_contours(const SpectralCurve& c, int samples = 1000);

std::vector<cplx> contour_points(const ContourSpec& s);

// Signed value whose positivity is the inequality for this contour kind.
double signed_value(const SpectralCurve& c, ContourKind k, cplx lam);

std::vector<SignReport> verify_inequalities(const SpectralCurve& c, const std::vector<ContourSpec>& contours);

// Re(g3 - g2) at x in (alpha, inf) or Re(g2 - g1) at x in (-inf, beta), upper boundary values.
double cut_real_part(const SpectralCurve& c, double x);

SeparationReport gamma_C_separation(const ABCoords& q, int samples = 4000);

} // namespace s34
