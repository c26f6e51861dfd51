#pragma once

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/rational.hpp>

#include "s34/types.hpp"

namespace s34 {

using quad = boost::multiprecision::cpp_bin_float_quad;
using Rational = boost::rational<long long>;

struct LeadingHamiltonians {
    double h1_0 = 0;
    double h2_0 = 0;
    double h5_0 = 0;
};

struct TauLeading {
    double varpi0 = 0;
    double chi = 0;
    // hbar^-2 varpi0 - log(chi)/24; the overall constant is not modelled.
    double log_tau_leading(double hbar) const;
};

// Leading Hamiltonians and the genus-zero tau data, with sigma recomputed from p.
LeadingHamiltonians leading_hamiltonians(const Params& p);
TauLeading tau_leading(const Params& p);
// Same closed forms at an explicitly supplied sigma (used on the critical surface).
LeadingHamiltonians leading_hamiltonians_at(const Params& p, double sigma);
TauLeading tau_leading_at(const Params& p, double sigma);

// Coefficients u_k, v_k of the hbar^2 expansion and their nu-derivatives:
// u[k][n] = d^n u_k / d nu^n, n = 0..4 at least.
template <class T>
struct ExpansionJetT {
    int K = 0;
    Params at;
    std::vector<std::vector<T>> u;
    std::vector<std::vector<T>> v;
};
using ExpansionJet = ExpansionJetT<double>;

template <class T>
ExpansionJetT<T> expansion_jet(const Params& p, int K);

// Absolute residuals of the two lines of the rescaled string equation.
template <class T>
std::array<T, 2> string_residual(const Params& p, const ExpansionJetT<T>& jet, T hbar);

struct FlowReport {
    std::array<double, 3> analytic{}; // residuals with implicit-differentiation jets
    std::array<double, 3> fd{};       // residuals with central differences
};

FlowReport flow_compatibility(const Params& p);

struct DlogtauReport {
    // relative errors of d varpi0/d(nu, mu, eta) against h/2
    std::array<double, 3> gradient{};
    // relative errors of the cross-partials (nu,mu), (nu,eta), (mu,eta)
    std::array<double, 3> closedness{};
    std::array<double, 3> fd_gradient{};
};

DlogtauReport dlogtau_consistency(const Params& p);

struct Darboux {
    double QU = 0, QV = 0, QW = 0;
    double PU = 0, PV = 0, PW = 0;
};

struct HamiltonianValues {
    double H1 = 0, H2 = 0, H5 = 0;          // evaluated-on-solution forms
    Darboux darboux;
    double H1_darboux = 0, H2_darboux = 0, H5_darboux = 0; // canonical forms at the same jets
};

// ujet = (U, U', U'', U'''), vjet = (V, V').
HamiltonianValues hamiltonians_on_solution(const std::array<double, 4>& ujet, const std::array<double, 2>& vjet,
                                           double t1, double t2, double t5);

struct HamiltonianScaling {
    // observed log-log exponents in hbar for H1, H2, H5 (on-shell) and H1, H2 (Darboux)
    std::array<double, 5> exponent{};
    // H * hbar^{-exponent rounded to sevenths} at the smallest hbar
    std::array<double, 5> coefficient{};
};

// Leading-order jets pushed through the time rescaling t5 = hbar^{-2/7} eta, ...
HamiltonianScaling hamiltonian_scaling(const Params& p, const std::vector<double>& hbars);

double matrix_model_ideal(double sigma, double t, double tau, double H);
quad matrix_model_ideal(const quad& sigma, const quad& t, const quad& tau, const quad& H);
// Exact evaluation for H = 0.
Rational matrix_model_ideal(const Rational& sigma, const Rational& t, const Rational& tau);

struct MultiscalingReport {
    std::vector<double> eps;
    std::vector<double> ratio;   // (sigma - 1)/eps at each eps
    double extrapolated = 0;     // Richardson limit
    double target = 0;           // 5 eta / 3 - sigma(eta, mu, nu)
    double error = 0;
};

// Root sigma(eps) of the ideal under the multiscaling substitution.
// literal = true uses the substitution as printed (sign of the eta^3 eps^3 term, H ~ eps^3).
MultiscalingReport multiscaling_check(const Params& p, bool literal = false);

} // namespace s34
