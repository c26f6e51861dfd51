#include <doctest.h>

#include <cmath>

#include "s34/lensing.hpp"
#include "s34/param_domain.hpp"

using namespace s34;

TEST_CASE("default contours cover the six kinds")
{
    const auto c = build_curve({1, 0, 0});
    const auto cs = default_contours(c, 200);
    CHECK(cs.size() == 6);
    for (const auto& s : cs) {
        const auto pts = contour_points(s);
        CHECK(pts.size() == 200);
        CHECK(std::abs(pts.front() - cplx(s.anchor, 0)) <= s.r_min * 1.0001 + 1e-12);
    }
}

TEST_CASE("property: all inequality families strictly positive across D")
{
    for (Params p : {Params{1, 0, 0}, Params{1, 0.05, 0}, Params{0.5, 0.05, 0.02}, Params{2, -0.05, 0.5},
                     Params{1, 0, -0.3}, Params{2, 0, -2}, Params{0.5, 0, 0.1}}) {
        const auto c = build_curve(p);
        for (const auto& r : verify_inequalities(c, default_contours(c, 1000))) {
            INFO(to_string(r.contour.kind));
            CHECK(r.all_pass);
            CHECK(r.min_signed_value > 0);
        }
    }
}

TEST_CASE("real parts vanish on the cuts")
{
    const auto c = build_curve({1, 0.1, 0.2});
    for (double d : {0.01, 1.0, 20.0}) {
        CHECK(std::abs(cut_real_part(c, c.alpha + d)) < 1e-9 * (1 + d * d * d));
        CHECK(std::abs(cut_real_part(c, c.beta - d)) < 1e-9 * (1 + d * d * d));
    }
}

TEST_CASE("Gamma and C are separated on R")
{
    for (Params p : {Params{1, 0, 0}, Params{1, 0.05, 0}, Params{0.5, 0.05, 0.02}}) {
        const auto c = build_curve(p);
        const auto s = gamma_C_separation(abc_from(p, c.sigma));
        CHECK(s.separated);
        CHECK(s.min_distance > 0);
    }
}

TEST_CASE("contour kind names are distinct")
{
    CHECK(to_string(ContourKind::gamma5) != to_string(ContourKind::gamma_m3));
    CHECK(to_string(ContourKind::lens_upper_alpha) != to_string(ContourKind::lens_lower_alpha));
}
