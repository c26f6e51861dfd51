#pragma once

#include <array>
#include <string>
#include <vector>

#include "s34/types.hpp"

namespace s34 {

struct PValue {
    double value = 0;
    double d_dsigma = 0;
};

struct SigmaSolution {
    double sigma = 0;
    double dP_dsigma = 0;
    double residual = 0;
    bool path_ok = false;
    int steps = 0;
};

struct VieteRoots {
    double z_minus = 0;
    double z_zero = 0;
    double z_plus = 0;
};

struct DomainReport {
    bool in_D = false;
    bool path_ok = false;
    double sigma = 0;
    double margin = 0;           // |dP/dsigma| at the root
    bool sign_ok = false;        // sigma > max(5 eta / 3, 0)
    std::string reason;          // empty when in_D
};

struct SigmaJets {
    int depth = 0;
    std::array<double, 5> d_nu{}; // d^n sigma / d nu^n, n = 0..depth
    double d_mu = 0;
    double d_eta = 0;
};

// Branch quintic P(sigma) = nu + sigma^3/2 - 5/4 eta sigma^2 + 6 mu^2/(5 eta - 3 sigma)^2.
PValue eval_P(double sigma, const Params& p);
double dP_dmu(double sigma, const Params& p);
double dP_deta(double sigma, const Params& p);

// Margin below which a root counts as multiple.
double boundary_margin(double sigma);

// Root continued from the reference ray point (max(eta,1), 0, 0). If the straight path
// leaves D, retries along the image of a path inside R.
SigmaSolution solve_sigma(const Params& p);

// Continuation along a polyline. The first waypoint must lie on the ray
// (eta > 0, 0, 0); mu values are used as given (no |mu| folding).
SigmaSolution continue_sigma(const std::vector<Params>& waypoints);

VieteRoots viete_roots(double b, double c);

Params map_abc(const ABCoords& q);
// Inverse of map_abc on R, given the root sigma at p (mu >= 0 side).
ABCoords abc_from(const Params& p, double sigma);
// Closed form (4/3)|a(6a^3-3ba+2c)(6a^3-3ba-2c)|; the true determinant of map_abc is 3/5 of this.
double jacobian_abc(const ABCoords& q);
// Central-difference Jacobian determinant of map_abc.
double jacobian_abc_fd(const ABCoords& q, double h = 1e-5);

// Region membership in (a,b,c) coordinates.
bool in_region_R(const ABCoords& q);
bool in_region_R_tilde(const ABCoords& q);

DomainReport in_domain_D(const Params& p);

SigmaJets sigma_jets(const Params& p, int depth);

} // namespace s34
