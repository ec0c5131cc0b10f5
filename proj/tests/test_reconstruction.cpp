#include <doctest.h>

#include "concavlab/errors.hpp"
#include "concavlab/reconstruction.hpp"

#include <chrono>
#include <cmath>

using namespace concavlab;

namespace {

DirectionalMeasure axis_measure(double wx, double wy, double wz) {
    std::vector<Atom> atoms;
    const double w[3] = {wx, wy, wz};
    for (int k = 0; k < 3; ++k)
        for (double s : {1.0, -1.0}) {
            Vec d = Vec::Zero(3);
            d(k) = s;
            atoms.push_back({d, w[k]});
        }
    return DirectionalMeasure(3, atoms);
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::Parse;
}

} // namespace

TEST_CASE("cube measure round trip") {
    const Polytope cube = box_polytope({1, 1, 1});
    SolverDiagnostics diag;
    const auto t0 = std::chrono::steady_clock::now();
    const Polytope p = solve_minkowski(surface_area_measure(cube), {}, &diag);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(hausdorff_distance(p, cube) <= 1e-6);
    CHECK(diag.max_rel_area_err <= 1e-10);
    CHECK(secs < 1.0);
}

TEST_CASE("weights 2 on the axes give the cube of side sqrt 2") {
    // Face-area equations yz = xz = xy = 2.
    const Polytope p = solve_minkowski(axis_measure(2, 2, 2));
    CHECK(hausdorff_distance(p, box_polytope({std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0)})) <= 1e-9);
}

TEST_CASE("equal tetrahedral weights give a regular tetrahedron") {
    const double w = 3.0;
    std::vector<Atom> atoms;
    for (Eigen::Vector3d v : {Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, -1, -1), Eigen::Vector3d(-1, 1, -1),
                              Eigen::Vector3d(-1, -1, 1)})
        atoms.push_back({v.normalized(), w});
    const Polytope t = solve_minkowski(DirectionalMeasure(3, atoms));
    REQUIRE(t.num_vertices() == 4);
    // Equilateral face area sqrt(3)/4 e^2 = w.
    const double edge = std::sqrt(4.0 * w / std::sqrt(3.0));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK((t.vertex(i) - t.vertex(j)).norm() == doctest::Approx(edge).epsilon(1e-10));
    CHECK(is_indecomposable(surface_area_measure(t)));
}

TEST_CASE("random polytope round trips") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Polytope p = centered(random_polytope(3, seed));
        SolverDiagnostics diag;
        const Polytope q = solve_minkowski(surface_area_measure(p), {}, &diag);
        CHECK(hausdorff_distance(p, q) <= 1e-6);
        CHECK(diag.max_rel_area_err <= 1e-8);
        CHECK(max_relative_difference(surface_area_measure(q), surface_area_measure(p)) <= 1e-8);
    }
}

TEST_CASE("planar round trips") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Polytope p = centered(random_polytope(2, seed));
        const Polytope q = solve_minkowski(surface_area_measure(p));
        CHECK(hausdorff_distance(p, q) <= 1e-6);
    }
}

TEST_CASE("solver preconditions") {
    std::vector<Atom> lopsided = {{Eigen::Vector3d(1, 0, 0), 1.0}, {Eigen::Vector3d(-1, 0, 0), 1.0},
                                  {Eigen::Vector3d(0, 1, 0), 1.0}, {Eigen::Vector3d(0, -1, 0), 1.0},
                                  {Eigen::Vector3d(0, 0, 1), 2.0}, {Eigen::Vector3d(0, 0, -1), 1.0}};
    CHECK(kind_of([&] { solve_minkowski(DirectionalMeasure(3, lopsided)); }) == ErrorKind::NotAlexandrov);
    SolverConfig tight;
    tight.max_iter = 1;
    tight.area_tol = 1e-15;
    CHECK(kind_of([&] { solve_minkowski(surface_area_measure(random_polytope(3, 5)), tight); }) ==
          ErrorKind::NoConvergence);
}

TEST_CASE("Blaschke sum against the closed-form box sum") {
    const Box a{{1.0, 2.0, 0.5}}, b{{3.0, 0.7, 1.1}};
    const Box s = blaschke_sum_boxes(a, b);
    const double ax = 2.0 * 0.5 + 0.7 * 1.1, ay = 0.5 + 3.3, az = 2.0 + 2.1;
    CHECK(s.sides[1] * s.sides[2] == doctest::Approx(ax).epsilon(1e-14));
    CHECK(s.sides[0] * s.sides[2] == doctest::Approx(ay).epsilon(1e-14));
    CHECK(s.sides[0] * s.sides[1] == doctest::Approx(az).epsilon(1e-14));
    CHECK(s.sides[0] == doctest::Approx(std::sqrt(ay * az / ax)).epsilon(1e-14));
    const Polytope general = blaschke_sum(box_polytope(a.sides), box_polytope(b.sides));
    CHECK(hausdorff_distance(general, box_polytope(s.sides)) <= 1e-6);

    const Box same = blaschke_sum_boxes(a, a);
    for (int i = 0; i < 3; ++i) CHECK(same.sides[i] == doctest::Approx(a.sides[i] * std::sqrt(2.0)));
    const Box thin = blaschke_sum_boxes(Box{{1, 1e-9, 1}}, Box{{1, 1, 1}});
    for (double x : thin.sides) CHECK(std::isfinite(x));
}

TEST_CASE("Blaschke sum commutes and cube plus cube") {
    const Polytope k = random_polytope(3, 31), l = random_polytope(3, 32);
    CHECK(hausdorff_distance(blaschke_sum(k, l), blaschke_sum(l, k)) <= 1e-8);
    const Polytope c = box_polytope({1, 1, 1});
    CHECK(hausdorff_distance(blaschke_sum(c, c), box_polytope({std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0)})) <= 1e-8);
}

TEST_CASE("Blaschke scaling") {
    const Polytope k = random_polytope(3, 3);
    CHECK(hausdorff_distance(blaschke_scale(1.0, k), k) == 0.0);
    const Polytope c2 = blaschke_scale(2.0, box_polytope({1, 1, 1}));
    CHECK(hausdorff_distance(c2, box_polytope({std::sqrt(2.0), std::sqrt(2.0), std::sqrt(2.0)})) <= 1e-14);
    const auto mu = surface_area_measure(k);
    const auto mu3 = surface_area_measure(blaschke_scale(3.0, k));
    for (int i = 0; i < mu.size(); ++i) {
        const int j = mu3.find(mu.atoms()[i].dir);
        REQUIRE(j >= 0);
        CHECK(std::abs(mu3.atoms()[j].weight - 3.0 * mu.atoms()[i].weight) <= 1e-12 * mu3.atoms()[j].weight);
    }
}

TEST_CASE("Kneser-Suss for volume") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Polytope k = random_polytope(3, 100 + seed), l = random_polytope(3, 200 + seed);
        const Polytope s = blaschke_sum(k, l);
        const double lhs = std::pow(s.volume(), 2.0 / 3.0);
        const double rhs = std::pow(k.volume(), 2.0 / 3.0) + std::pow(l.volume(), 2.0 / 3.0);
        CHECK(lhs >= rhs - 1e-9);
    }
    const Polytope k = random_polytope(3, 7);
    const Polytope s = blaschke_sum(k, dilate(k, 1.7));
    const double lhs = std::pow(s.volume(), 2.0 / 3.0);
    const double rhs = std::pow(k.volume(), 2.0 / 3.0) * (1.0 + 1.7 * 1.7);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * lhs);
}

TEST_CASE("decomposition") {
    const auto cube = surface_area_measure(box_polytope({1, 1, 1}));
    CHECK_FALSE(is_indecomposable(cube));
    const auto [a, b] = decompose(cube);
    CHECK(a.is_alexandrov());
    CHECK(b.is_alexandrov());
    CHECK(max_relative_difference(a + b, cube) <= 1e-12);
    double lo = 1e9, hi = 0;
    for (int i = 0; i < cube.size(); ++i) {
        const double r = a.atoms()[a.find(cube.atoms()[i].dir)].weight / cube.atoms()[i].weight;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK(hi - lo > 1e-3);
    CHECK(lo >= 0.1 - 1e-12);
    CHECK(hi <= 0.9 + 1e-12);
    CHECK(solve_minkowski(a).volume() > 0);
    CHECK(solve_minkowski(b).volume() > 0);

    Mat simplex = Mat::Zero(3, 4);
    simplex(0, 1) = simplex(1, 2) = simplex(2, 3) = 1.0;
    const auto tet = surface_area_measure(convex_hull(simplex));
    CHECK(is_indecomposable(tet));
    CHECK(kind_of([&] { decompose(tet); }) == ErrorKind::Indecomposable);

    std::vector<Atom> few = {{Eigen::Vector3d(1, 0, 0), 1.0}, {Eigen::Vector3d(-1, 0, 0), 1.0}};
    CHECK(kind_of([&] { is_indecomposable(DirectionalMeasure(3, few)); }) == ErrorKind::NotAlexandrov);
}

TEST_CASE("decomposition check on random polytopes") {
    for (std::uint64_t seed : {3u, 17u, 40u}) {
        const auto m = surface_area_measure(random_polytope(3, seed));
        const DecompositionCheck c = check_decomposition(m);
        CHECK(c.atoms == m.size());
        CHECK(c.sum_error <= 1e-10 * m.total());
        CHECK(c.ratio_spread > 1e-3);
        CHECK(c.alexandrov);
        CHECK(c.area_error_a <= 1e-8);
        CHECK(c.area_error_b <= 1e-8);
        CHECK(c.volume_a > 0);
        CHECK(c.volume_b > 0);
    }
}
