#pragma once

// Small least-squares helpers shared by the fit-based checks.

#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace s34 {

// Least squares for y ~ sum_j coef_j * basis_j(x).
inline std::vector<double> lstsq(const std::vector<double>& x, const std::vector<double>& y,
                                 const std::vector<std::function<double(double)>>& basis)
{
    Eigen::MatrixXd A(static_cast<Eigen::Index>(x.size()), static_cast<Eigen::Index>(basis.size()));
    Eigen::VectorXd b(static_cast<Eigen::Index>(y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j)
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis[j](x[i]);
        b(static_cast<Eigen::Index>(i)) = y[i];
    }
    const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    return {c.data(), c.data() + c.size()};
}

// Slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    const auto c = lstsq(lx, ly, {[](double) { return 1.0; }, [](double t) { return t; }});
    return c[1];
}

inline std::vector<double> logspace(double lo, double hi, int n)
{
    std::vector<double> r;
    for (int i = 0; i < n; ++i)
        r.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1)));
    return r;
}

inline std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> r;
    for (int i = 0; i < n; ++i) r.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return r;
}

} // namespace s34
