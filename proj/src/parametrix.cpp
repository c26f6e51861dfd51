#include "s34/parametrix.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "s34/fit.hpp"
#include "s34/param_domain.hpp"
#include "s34/tau_expansion.hpp"

namespace s34 {

IMat3 elementary(int i, int j, long long s)
{
    IMat3 m = IMat3::Identity();
    m(i - 1, j - 1) += s;
    return m;
}

IMat3 cyclic_S()
{
    IMat3 m = IMat3::Zero();
    m(0, 1) = 1;
    m(1, 2) = 1;
    m(2, 0) = 1;
    return m;
}

// ---------------------------------------------------------------------------
// Stokes data

namespace {

const std::map<int, std::pair<int, int>>& stokes_pattern()
{
    static const std::map<int, std::pair<int, int>> pat = {
        {1, {2, 1}},  {-1, {3, 1}}, {2, {2, 3}},  {-2, {3, 2}}, {3, {1, 3}},  {-3, {1, 2}}, {4, {1, 2}},
        {-4, {1, 3}}, {5, {3, 2}},  {-5, {2, 3}}, {6, {3, 1}},  {-6, {2, 1}}, {7, {2, 1}},  {-7, {3, 1}},
    };
    return pat;
}

struct Plane {
    std::array<long long, 7> base;
    std::array<long long, 7> dx;
    std::array<long long, 7> dy;
};

// Pi_k(x, y) = base + x dx + y dy
const std::array<Plane, 7>& planes()
{
    static const std::array<Plane, 7> P = {{
        {{1, -1, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}},
        {{0, -1, 0, 0, 1, -1, 0}, {0, 0, 1, 0, -1, 0, 0}, {0, 0, 0, 1, 0, 0, 0}},
        {{0, -1, 1, 0, 0, -1, 0}, {1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 1}},
        {{0, 0, 1, 0, 0, -1, 1}, {0, 0, 0, 1, 0, -1, 0}, {0, 0, 0, 0, 1, 0, 0}},
        {{0, 0, 1, -1, 0, 0, 1}, {1, 0, -1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}},
        {{1, 0, 0, -1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, -1, 0, 1}},
        {{1, -1, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, -1, 0, 1, 0, 0, 0}},
    }};
    return P;
}

} // namespace

IMat3 StokesData::S(int k) const
{
    const auto& ij = pattern.at(k);
    return elementary(ij.first, ij.second, s.at(k));
}

StokesData stokes_data(const std::array<long long, 7>& s7)
{
    StokesData d;
    d.pattern = stokes_pattern();
    d.Scal = cyclic_S();
    for (int k = 1; k <= 7; ++k) d.s[k] = s7[static_cast<std::size_t>(k - 1)];
    for (int k = -7; k <= -1; ++k) d.s[k] = -d.s[k + 8];
    return d;
}

StokesData reference_stokes_data() { return stokes_data({0, -1, 0, 0, 1, -1, 0}); }

IMat3 stokes_product(const StokesData& d)
{
    IMat3 P = IMat3::Identity();
    for (int k = -7; k <= 7; ++k) {
        if (k == 0) continue;
        P = P * d.S(k);
    }
    return P;
}

bool stokes_check(const StokesData& d) { return stokes_product(d) == d.Scal.transpose(); }

bool stokes_antisymmetric(const StokesData& d)
{
    for (int k = -7; k <= -1; ++k)
        if (d.s.at(k) != -d.s.at(k + 8)) return false;
    return true;
}

std::array<long long, 7> plane_point(int k, long long x, long long y)
{
    if (k < 0 || k > 6) throw DomainError("plane_point: index must be in 0..6");
    const Plane& P = planes()[static_cast<std::size_t>(k)];
    std::array<long long, 7> r{};
    for (std::size_t i = 0; i < 7; ++i) r[i] = P.base[i] + x * P.dx[i] + y * P.dy[i];
    return r;
}

std::vector<int> plane_membership(const std::array<double, 7>& s7)
{
    std::vector<int> out;
    for (int k = 0; k < 7; ++k) {
        const Plane& P = planes()[static_cast<std::size_t>(k)];
        Eigen::Matrix<double, 7, 2> A;
        Eigen::Matrix<double, 7, 1> b;
        for (int i = 0; i < 7; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            A(i, 0) = static_cast<double>(P.dx[ii]);
            A(i, 1) = static_cast<double>(P.dy[ii]);
            b(i) = s7[ii] - static_cast<double>(P.base[ii]);
        }
        const Eigen::Vector2d xy = A.colPivHouseholderQr().solve(b);
        if ((A * xy - b).cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + b.cwiseAbs().maxCoeff())) out.push_back(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Global parametrix

namespace {

cplx sqrt_cut(cplx u, double r, int sd)
{
    if (std::abs(u.imag()) <= 1e-12) {
        const double x = u.real();
        const double sgn = (x * x - r * r) >= 0 ? 1.0 : -1.0;
        u = cplx(x, sd * sgn * 1e-300);
    }
    return std::sqrt(u - r) * std::sqrt(u + r);
}

HalfPlane resolve_side(cplx lam, std::optional<HalfPlane> side)
{
    if (side) return *side;
    return lam.imag() < 0 ? HalfPlane::lower : HalfPlane::upper;
}

} // namespace

CMat3 global_M(const GlobalParametrix& g, cplx lam, std::optional<HalfPlane> side)
{
    const HalfPlane hp = resolve_side(lam, side);
    const int sd = side_sign(hp);
    const auto us = sheet_roots(g.curve, lam, hp);
    const double sg = g.curve.sigma;
    const double r = std::sqrt(sg / 2);
    const cplx k = cplx(0, 1) / std::sqrt(3.0);
    CMat3 M;
    for (int j = 0; j < 3; ++j) {
        const cplx u = us[static_cast<std::size_t>(j)];
        const cplx s = sqrt_cut(u, r, sd);
        M(0, j) = k * (u * u - 0.75 * sg) / s;
        M(1, j) = k * u / s;
        M(2, j) = k / s;
    }
    if (hp == HalfPlane::lower) M.col(1) *= -1.0;
    return M;
}

CMat3 f_hat(cplx lam, std::optional<HalfPlane> side)
{
    const HalfPlane hp = resolve_side(lam, side);
    if (lam.imag() == 0.0) lam = cplx(lam.real(), side_sign(hp) * 0.0);
    const cplx om = omega<double>();
    const cplx l3 = std::pow(lam, 1.0 / 3.0);
    CMat3 V;
    V << 1.0, om, om * om, 1.0, 1.0, 1.0, 1.0, om * om, om;
    CMat3 f = (cplx(0, 1) / std::sqrt(3.0)) * Eigen::Vector3cd(l3, 1.0, 1.0 / l3).asDiagonal() * V;
    if (hp == HalfPlane::upper) {
        CMat3 P;
        P << 1, 0, 0, 0, 0, 1, 0, 1, 0;
        return f * P;
    }
    return f * Eigen::Vector3cd(1.0, -1.0, 1.0).asDiagonal();
}

CMat3 jump_alpha()
{
    CMat3 J;
    J << 1, 0, 0, 0, 0, -1, 0, 1, 0;
    return J;
}

CMat3 jump_beta()
{
    CMat3 J;
    J << 0, -1, 0, 1, 0, 0, 0, 0, 1;
    return J;
}

JumpReport jump_residuals(const GlobalParametrix& g, int points)
{
    const SpectralCurve& c = g.curve;
    const double L = 10.0 * (1.0 + std::abs(c.alpha - c.beta));
    JumpReport r;
    r.points = points;
    for (double d : logspace(1e-3, L, points)) {
        const cplx xa(c.alpha + d, 0.0), xb(c.beta - d, 0.0);
        const CMat3 ua = global_M(g, xa, HalfPlane::upper), la = global_M(g, xa, HalfPlane::lower);
        r.alpha_cut = std::max(r.alpha_cut, (ua - la * jump_alpha()).cwiseAbs().maxCoeff());
        const CMat3 ub = global_M(g, xb, HalfPlane::upper), lb = global_M(g, xb, HalfPlane::lower);
        r.beta_cut = std::max(r.beta_cut, (lb - ub * jump_beta()).cwiseAbs().maxCoeff());
        const cplx dy(0.0, 1e-12);
        for (const auto& [x, up, lo] : {std::tuple{xa, ua, la}, std::tuple{xb, ub, lb}}) {
            r.limit_mismatch = std::max(r.limit_mismatch, (global_M(g, x + dy) - up).cwiseAbs().maxCoeff());
            r.limit_mismatch = std::max(r.limit_mismatch, (global_M(g, x - dy) - lo).cwiseAbs().maxCoeff());
        }
    }
    const double w = c.alpha - c.beta;
    for (int i = 1; i <= points; ++i) {
        const cplx x(c.beta + w * i / (points + 1), 0.0);
        r.gap = std::max(r.gap, (global_M(g, x, HalfPlane::upper) - global_M(g, x, HalfPlane::lower)).cwiseAbs().maxCoeff());
    }
    return r;
}

NormalizationReport normalization_decay(const GlobalParametrix& g)
{
    const std::vector<double> radii = logspace(1e3, 1e6, 10);
    const std::array<double, 4> dirs = {0.5, 2.5, -0.7, -2.0};
    std::vector<double> res;
    for (double R : radii) {
        double worst = 0;
        for (double th : dirs) {
            const cplx lam = std::polar(R, th);
            const CMat3 E = global_M(g, lam) * f_hat(lam).inverse() - CMat3::Identity();
            worst = std::max(worst, E.cwiseAbs().maxCoeff());
        }
        res.push_back(worst);
    }
    NormalizationReport r;
    r.slope = loglog_slope(radii, res);
    r.worst_residual = res.front();
    return r;
}

DetReport det_constancy(const GlobalParametrix& g, int samples)
{
    const SpectralCurve& c = g.curve;
    const double L = 1.0 + std::abs(c.alpha - c.beta);
    DetReport r;
    r.value = global_M(g, cplx(0.0, L)).determinant();
    for (int i = 0; i < samples; ++i) {
        const double th = 2 * pi * (i + 0.37) / samples;
        const double rad = L * (0.2 + 3.0 * (i % 7) / 7.0);
        const cplx lam = 0.5 * (c.alpha + c.beta) + std::polar(rad, th);
        if (std::abs(lam.imag()) < 1e-9) continue;
        r.spread = std::max(r.spread, std::abs(global_M(g, lam).determinant() - r.value));
    }
    return r;
}

double reflection_residual(const Params& p, const std::vector<cplx>& lams, bool printed_sign)
{
    GlobalParametrix g{build_curve(p)};
    GlobalParametrix gm{build_curve({p.eta, -p.mu, p.nu})};
    CMat3 St;
    St << 0, 0, 1, 0, -1, 0, 1, 0, 0;
    const Eigen::Vector3cd dv = printed_sign ? Eigen::Vector3cd(1, -1, 1) : Eigen::Vector3cd(-1, 1, -1);
    double worst = 0;
    for (const cplx& lam : lams) {
        const CMat3 lhs = global_M(g, lam);
        const CMat3 rhs = dv.asDiagonal() * global_M(gm, -lam) * St;
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Airy coefficients

AiryCoeffs airy_series(int kmax)
{
    if (kmax < 0 || kmax > 20) throw DomainError("airy_series: kmax must be in 0..20");
    AiryCoeffs a;
    a.s.push_back(BigRational(1));
    a.t.push_back(BigRational(1));
    for (int k = 1; k <= kmax; ++k) {
        const BigRational ratio(BigRational((6 * k - 5) * (6 * k - 1)) / BigRational(72 * k));
        a.s.push_back(a.s.back() * ratio);
        a.t.push_back(a.s.back() * BigRational(1 + 6 * k) / BigRational(1 - 6 * k));
    }
    return a;
}

double airy_s_gamma(int k)
{
    return std::tgamma(3 * k + 0.5) / (std::pow(54.0, k) * std::tgamma(k + 1.0) * std::tgamma(k + 0.5));
}

CMat2 P_k_matrix(int k, cplx zeta, const AiryCoeffs& coeffs)
{
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs.s.size()) throw DomainError("P_k_matrix: k out of range");
    if (zeta.imag() == 0.0 && zeta.real() <= 0.0) throw BranchError("P_k_matrix: zeta on (-inf, 0]");
    const double sk = static_cast<double>(coeffs.s[static_cast<std::size_t>(k)]);
    const double tk = static_cast<double>(coeffs.t[static_cast<std::size_t>(k)]);
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    const cplx i(0, 1);
    CMat2 A, B;
    A << 1.0, -i, -i, 1.0;
    B << sgn, i, sgn * i, 1.0;
    const cplx X = 2.0 / 3.0 * std::pow(zeta, 1.5);
    return 0.5 * A * Eigen::Vector2cd(sk, tk).asDiagonal() * B * std::pow(X, -k);
}

// ---------------------------------------------------------------------------
// First correction

CMat3 residue_W1_at(const GlobalParametrix& g, double radius, int nodes)
{
    const SpectralCurve& c = g.curve;
    static const AiryCoeffs coeffs = airy_series(1);
    CMat3 acc = CMat3::Zero();
    for (int k = 0; k < nodes; ++k) {
        const double th = 2 * pi * (k + 0.5) / nodes;
        const cplx e = std::polar(1.0, th);
        const cplx lam = c.beta + radius * e;
        const auto gs = g_all(c, lam);
        const cplx dl = lam - c.beta;
        const cplx zeta = dl * std::pow(0.75 * (gs[1] - gs[0]) / std::pow(dl, 1.5), 2.0 / 3.0);
        CMat3 P3 = CMat3::Zero();
        P3.topLeftCorner<2, 2>() = P_k_matrix(1, zeta, coeffs);
        const CMat3 M = global_M(g, lam);
        acc += M * P3 * M.inverse() * (radius * e);
    }
    return acc / static_cast<double>(nodes);
}

ResidueData residue_W1(const GlobalParametrix& g)
{
    const SpectralCurve& c = g.curve;
    double r1 = 1e-2 * (1.0 + std::abs(c.alpha - c.beta));
    auto build = [&](const GlobalParametrix& gg, double& agree) {
        double r = r1;
        for (int attempt = 0; attempt < 4; ++attempt, r /= 2) {
            const CMat3 A = residue_W1_at(gg, r), B = residue_W1_at(gg, r / 2);
            agree = (A - B).cwiseAbs().maxCoeff();
            if (agree <= 1e-8) return A;
        }
        throw QuadratureError("residue_W1: circle radii disagree");
    };
    ResidueData d;
    d.W1 = build(g, d.radius_agreement);
    const Params& p = c.params;
    const GlobalParametrix gm{p.mu == 0.0 ? c : build_curve({p.eta, -p.mu, p.nu})};
    double agree_m = 0;
    const CMat3 Wm = build(gm, agree_m);
    const Eigen::Vector3cd D(1, -1, 1);
    d.W1_hat = D.asDiagonal() * Wm * D.asDiagonal();
    d.radius_agreement = std::max(d.radius_agreement, agree_m);
    return d;
}

PairingReport pairing_check(const Params& p)
{
    const GlobalParametrix g{build_curve(p)};
    const ResidueData d = residue_W1(g);
    PairingReport r;
    const cplx v = -(d.W1 + d.W1_hat)(2, 0);
    r.value = v.real();
    r.imag = v.imag();
    const double s = g.curve.sigma, dd = 5 * p.eta - 3 * s, mu2 = p.mu * p.mu;
    const double chi = tau_leading_at(p, s).chi;
    const double dchi_ds = dd * dd - 6 * s * dd - 432 * mu2 / (dd * dd * dd);
    const double s_nu = -1.0 / eval_P(s, p).d_dsigma;
    r.oracle = -(dchi_ds * s_nu / chi) / 24.0;
    return r;
}

} // namespace s34
