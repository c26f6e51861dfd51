#pragma once

#include <vector>

#include "s34/types.hpp"

namespace s34 {

// Real solution of q'' = 6 q^2 + x at one abscissa.
struct PIState {
    double x = 0;
    double q = 0;
    double qprime = 0;
    double H = 0;
    int kappa = 1;
};

double pi_hamiltonian(double x, double q, double qp);

// Optimally truncated asymptotic series q ~ sqrt(-x/6) (1 + ...) as x -> -inf.
struct PISeed {
    double q = 0;
    double qprime = 0;
    int terms = 0;
    double truncation = 0; // size of the first omitted term
};

std::vector<double> pi_series_coeffs(int nmax = 40);
PISeed pi_seed(double x, int nmax = 40);

inline constexpr double pi_seed_limit = -20.0;
inline constexpr double pi_pole_guard = 1e6;

struct PITrajectory {
    std::vector<PIState> states; // on a uniform grid
    double step = 0;
    bool pole = false;           // stopped by the |q| guard
    double pole_x = 0;
    PISeed seed;
};

// Throws DomainError when x_start > -20 or the range is empty, PoleEncountered when
// |q| passes the guard (unless stop_at_pole, which truncates the trajectory instead).
PITrajectory pi_integrate(double x_start, double x_end, double step = 1e-3, bool stop_at_pole = false);

// |dH/dx + q| by five-point differences at each interior grid point; NaN where any
// stencil point has |q| > q_cap.
std::vector<double> pi_hamiltonian_residuals(const PITrajectory& t, double q_cap = 10.0);
double pi_hamiltonian_residual(const PITrajectory& t, double q_cap = 10.0);

// Leading asymptotics of H for the seed: (2/3)(-x)^{3/2}/sqrt(6).
double pi_hamiltonian_asymptotic(double x);

} // namespace s34
