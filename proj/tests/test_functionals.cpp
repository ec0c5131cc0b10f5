#include <doctest.h>

#include "concavlab/errors.hpp"
#include "concavlab/functionals.hpp"
#include "concavlab/quadrature.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace concavlab;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

// Normal derivative of the torsion function of [0,a]x[0,b] on the side x = 0,
// from the sine series in x with hyperbolic profiles in y.
double torsion_normal_derivative(double a, double b, double y) {
    const double dist = std::min(y, b - y);
    double s = 0.0;
    for (int m = 1; m < 40001; m += 2) {
        // cosh(k (y - b/2)) / cosh(k b/2) in overflow-free form.
        const double c = (std::exp(-m * kPi * y / a) + std::exp(-m * kPi * (b - y) / a)) / (1.0 + std::exp(-m * kPi * b / a));
        const double term = c / (double(m) * m);
        s += term;
        if (m * kPi * dist / a > 45.0) break;
    }
    return a / 2.0 - 4.0 * a / (kPi * kPi) * s;
}

// Side energy on x = 0 by adaptive quadrature in y.
double side_energy_oracle(double a, double b) {
    auto f = [&](double y) { return std::pow(torsion_normal_derivative(a, b, y), 2); };
    return integrate_adaptive(f, 0.0, b, 1e-12 * b * a * a, 14);
}

} // namespace

TEST_CASE("box and rectangle eigenvalues") {
    CHECK(rel(lambda1_box({{1, 1, 1}}), 3 * kPi * kPi) < 1e-15);
    CHECK(rel(lambda1_box({{1, 2, 2}}), 1.5 * kPi * kPi) < 1e-15);
    CHECK(rel(lambda1_box({{0.5, 1, 3}}), 4.0 * lambda1_box({{1, 2, 6}})) < 1e-14);
    CHECK(rel(lambda2_rect({1, 1}), 5 * kPi * kPi) < 1e-15);
    CHECK(rel(lambda2_rect({2, 1}), 2 * kPi * kPi) < 1e-15);
    for (double a : {0.1, 0.7, 1.0, 3.0, 20.0})
        CHECK(lambda2_rect({a, 1.3}) >= lambda1_rect({a, 1.3}));
    CHECK_THROWS_AS(lambda1_box({{1, -1}}), Error);
}

TEST_CASE("lambda1 boundary energies") {
    CHECK(rel(boundary_energy_lambda1_box({{1, 1, 1}}), 12 * kPi * kPi) < 1e-15);
    for (double l : {1e-3, 0.1, 1.0, 5.0})
        CHECK(rel(boundary_energy_lambda1_rect({l, 1}), 4 * kPi * kPi * (1 / (l * l * l) + 1)) < 1e-14);

    // Direct face integral of (du/dx)^2 for u = (2/sqrt(ab)) sin(pi x/a) sin(pi y/b) at x = 0.
    const double a = 0.7, b = 1.9;
    const double face = integrate_adaptive(
        [&](double y) { return std::pow(2.0 / std::sqrt(a * b) * kPi / a * std::sin(kPi * y / b), 2); }, 0, b);
    CHECK(rel(face, 2 * kPi * kPi / (a * a * a)) < 1e-12);
}

TEST_CASE("torsion of rectangles") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.3, 1.0}, {1.0, 4.0}, {2.5, 0.2}})
        CHECK(rel(torsion_rect({a, b}), oracles::torsion_slow(a, b)) < 1e-12);
    // Unit square: tau = 0.0351404...
    CHECK(std::abs(torsion_rect({1, 1}) - 0.035144253738) < 1e-11);
    CHECK(rel(torsion_rect({0.4, 1.7}), torsion_rect({1.7, 0.4})) < 1e-15);

    const double l = 1e-3;
    CHECK(std::abs(torsion_rect({l, 1}) / (l * l * l) - 1.0 / 12.0) < 0.01 / 12.0);
    for (double t : {0.5, 2.0})
        CHECK(rel(torsion_rect({t * 0.6, t * 1.1}), std::pow(t, 4) * torsion_rect({0.6, 1.1})) < 1e-12);
}

TEST_CASE("torsion side energies against boundary quadrature") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.5, 1.0}, {1.0, 0.25}, {0.1, 1.0}}) {
        // Side x = 0 has length b; the rectangle width across it is a.
        CHECK(rel(torsion_side_energy(b, a), side_energy_oracle(a, b)) < 1e-10);
    }
}

TEST_CASE("torsion side energies satisfy the Rellich identity") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.01, 1.0}, {3.0, 0.2}, {1e-3, 1.0}, {1.0, 50.0}}) {
        const double tau = torsion_rect({a, b});
        const double id = 0.25 * (a * torsion_side_energy(b, a) + b * torsion_side_energy(a, b));
        CHECK(rel(id, tau) < 1e-12);
    }
}

TEST_CASE("torsion side profile derivative") {
    for (double r : {1e-3, 0.05, 0.4, 1.0, 3.0, 10.0}) {
        const double h = 1e-5 * r;
        const double fd = (torsion_side_profile(r + h) - torsion_side_profile(r - h)) / (2 * h);
        CHECK(std::abs(torsion_side_profile_derivative(r) - fd) < 1e-8 * std::abs(fd) + 1e-12);
    }
    // All tanh factors saturate: sum of 1/m^4 over odd m is pi^4/96.
    CHECK(rel(torsion_side_profile(1e3), 1.0 / 12.0) < 1e-15);
}

TEST_CASE("torsion boundary energy scales as l^2") {
    const double e1 = boundary_energy_torsion_rect({1e-3, 1}), e2 = boundary_energy_torsion_rect({1e-1, 1});
    const double slope = std::log(e2 / e1) / std::log(100.0);
    CHECK(std::abs(slope - 2.0) < 0.05);
    // Long sides carry about l^2/4, short sides l^3/12.
    CHECK(rel(torsion_side_energy(1.0, 1e-4), 1e-8 / 4) < 1e-3);
    CHECK(rel(torsion_side_energy(1e-4, 1.0), 1e-12 / 12) < 1e-12);
}

TEST_CASE("equilateral triangle") {
    const TriangleValues t = lambda1_triangle_equilateral();
    CHECK(rel(t.lambda1, 16 * kPi * kPi / 3) < 1e-15);
    CHECK(rel(t.l2_norm_sq, 3 * std::sqrt(3.0) / 8) < 1e-12);
    CHECK(rel(t.raw_energy, 24 * kPi * kPi) < 1e-12);
    CHECK(rel(t.energy, 64 * kPi * kPi / std::sqrt(3.0)) < 1e-12);
    CHECK(rel(t.quotient, kPi / 3) < 1e-12);
    CHECK(rel(t.raw_quotient, 8 * kPi / (9 * std::sqrt(3.0))) < 1e-12);
    const TriangleValues coarse = lambda1_triangle_equilateral(4);
    CHECK(std::abs(coarse.quotient - t.quotient) < 1e-8);
}

TEST_CASE("capacity and surface area of prolate spheroids") {
    CHECK(rel(capacity_ball(2.0), 8 * kPi) < 1e-15);
    CHECK(rel(capacity_prolate_spheroid({1, 1}), 4 * kPi) < 1e-15);
    CHECK(rel(surface_area_prolate_spheroid({1, 1}), 4 * kPi) < 1e-15);
    CHECK(rel(capacity_prolate_spheroid({2, 1}), 4 * kPi * std::sqrt(3.0) / std::acosh(2.0)) < 1e-14);
    for (auto [a, b] : {std::pair{2.0, 1.0}, {10.0, 1.0}, {1.3, 1.2}})
        CHECK(rel(capacity_prolate_spheroid({a, b}), oracles::capacity(a, b)) < 1e-9);
    for (auto [a, b] : {std::pair{2.0, 1.0}, {100.0, 1.0}, {1.0001, 1.0}})
        CHECK(rel(surface_area_prolate_spheroid({a, b}), oracles::spheroid_surface(a, b)) < 1e-11);

    // Near the ball the capacity is that of the ball of radius (a + 2b)/3 up to O((a-b)^2).
    const double a = 1.0, b = a * (1 - 1e-8);
    CHECK(rel(capacity_prolate_spheroid({a, b}), capacity_ball((a + 2 * b) / 3)) < 1e-10);
    CHECK(rel(surface_area_prolate_spheroid({a, b}), 4 * kPi * a * a) < 1e-7);

    for (double t : {0.5, 2.0}) {
        CHECK(rel(capacity_prolate_spheroid({3 * t, t}), t * capacity_prolate_spheroid({3, 1})) < 1e-12);
        CHECK(rel(surface_area_prolate_spheroid({3 * t, t}), t * t * surface_area_prolate_spheroid({3, 1})) < 1e-12);
    }
}

TEST_CASE("capacity quotient grows along thinning spheroids") {
    double prev = 0.0, first = 0.0;
    for (int k = 0; k <= 6; ++k) {
        const auto r = isoperimetric_quotient("capacity", Spheroid{std::pow(10.0, k), 1.0});
        if (k == 0) {
            CHECK(rel(r.value, 4 * kPi) < 1e-14);
            first = r.value;
        }
        CHECK(r.value > prev);
        prev = r.value;
    }
    CHECK(prev / first > 1e3);
}

TEST_CASE("quotients") {
    SUBCASE("lambda1 on thin rectangles tends to pi/4") {
        const auto r = isoperimetric_quotient("lambda1", Rect{1e-4, 1});
        CHECK(std::abs(r.value - kPi / 4) < 1e-6);
        CHECK(r.denominator_kind == "mu_mass");
    }
    SUBCASE("torsion quotient slope") {
        const double e1 = isoperimetric_quotient("torsion", Rect{1e-3, 1}).value;
        const double e2 = isoperimetric_quotient("torsion", Rect{1e-1, 1}).value;
        CHECK(std::abs(std::log(e2 / e1) / std::log(100.0) - 0.25) < 0.05);
    }
    SUBCASE("triangle") {
        CHECK(rel(isoperimetric_quotient("lambda1", Triangle{}).value, kPi / 3) < 1e-12);
    }
    SUBCASE("dilation invariance") {
        const double t = 2.7;
        CHECK(rel(isoperimetric_quotient("lambda1", Box{{t, 2 * t, 0.5 * t}}).value,
                  isoperimetric_quotient("lambda1", Box{{1, 2, 0.5}}).value) < 1e-10);
        CHECK(rel(isoperimetric_quotient("torsion", Rect{t * 0.3, t}).value,
                  isoperimetric_quotient("torsion", Rect{0.3, 1}).value) < 1e-10);
        CHECK(rel(isoperimetric_quotient("capacity", Spheroid{5 * t, t}).value,
                  isoperimetric_quotient("capacity", Spheroid{5, 1}).value) < 1e-10);
        const Polytope p = random_polytope(3, 11);
        CHECK(rel(isoperimetric_quotient("volume", dilate(p, t)).value, isoperimetric_quotient("volume", p).value) <
              1e-10);
    }
    SUBCASE("volume quotient of a polytope stays below the ball") {
        const double ball = std::pow(4 * kPi / 3, 2.0 / 3) / (4 * kPi);
        for (std::uint64_t s = 0; s < 10; ++s)
            CHECK(isoperimetric_quotient("volume", random_polytope(3, s)).value <= ball + 1e-9);
        CHECK(rel(isoperimetric_quotient("volume", Box{{1, 1, 1}}).value, 1.0 / 6) < 1e-15);
    }
    SUBCASE("domain mismatch") {
        CHECK_THROWS_AS(isoperimetric_quotient("torsion", Box{{1, 1, 1}}), Error);
        CHECK_THROWS_AS(isoperimetric_quotient("capacity", Rect{1, 1}), Error);
        CHECK_THROWS_AS(isoperimetric_quotient("entropy", Rect{1, 1}), Error);
    }
}
