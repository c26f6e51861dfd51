#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace s34 {

using cplx = std::complex<double>;
using cplxl = std::complex<long double>;

// Point in the rescaled parameter space.
struct Params {
    double eta = 0;
    double mu = 0;
    double nu = 0;
};

// Uniformization parameters of the genus-zero curve.
struct ABCoords {
    double a = 0;
    double b = 0;
    double c = 0;
};

class S34Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Continuation ran into a multiple root of the branch quintic.
class BoundaryReached : public S34Error {
public:
    using S34Error::S34Error;
};

// 5 eta - 3 sigma changed sign along a continuation path.
class PolePassed : public S34Error {
public:
    using S34Error::S34Error;
};

// Evaluation too close to the pole 5 eta = 3 sigma.
class PoleError : public S34Error {
public:
    using S34Error::S34Error;
};

class DomainError : public S34Error {
public:
    using S34Error::S34Error;
};

class OnBranchPoint : public S34Error {
public:
    using S34Error::S34Error;
};

class BranchError : public S34Error {
public:
    using S34Error::S34Error;
};

class PoleEncountered : public S34Error {
public:
    using S34Error::S34Error;
};

class QuadratureError : public S34Error {
public:
    using S34Error::S34Error;
};

inline constexpr double pi = std::numbers::pi;

// omega = exp(2 pi i / 3)
template <class T>
std::complex<T> omega()
{
    return {T(-0.5L), std::sqrt(T(3)) / T(2)};
}

} // namespace s34
