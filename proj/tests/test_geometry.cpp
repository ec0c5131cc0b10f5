#include <doctest.h>

#include "concavlab/errors.hpp"
#include "concavlab/measure.hpp"
#include "concavlab/polytope.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace concavlab;

namespace {

Mat cube_corners(double lo, double hi) {
    Mat m(3, 8);
    for (int k = 0; k < 8; ++k)
        for (int d = 0; d < 3; ++d) m(d, k) = (k >> d) & 1 ? hi : lo;
    return m;
}

// Oracle: brute-force triangulation. Every point triple whose plane has all
// points on one side is a hull triangle; sum signed tetrahedra against the
// first point. Valid for points in general position.
double brute_force_volume(const Mat& pts) {
    const int n = static_cast<int>(pts.cols());
    const Eigen::Vector3d o = pts.col(0);
    double vol = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Eigen::Vector3d a = pts.col(i), b = pts.col(j), c = pts.col(k);
                const Eigen::Vector3d nrm = (b - a).cross(c - a);
                int pos = 0, neg = 0;
                for (int q = 0; q < n; ++q) {
                    const double s = nrm.dot(Eigen::Vector3d(pts.col(q)) - a);
                    if (s > 1e-12) ++pos;
                    if (s < -1e-12) ++neg;
                }
                if (pos > 0 && neg > 0) continue;
                vol += std::abs((a - o).dot((b - o).cross(c - o))) / 6.0;
            }
    return vol;
}

Mat sphere_points(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Mat m(3, count);
    for (int i = 0; i < count; ++i) {
        Eigen::Vector3d x(g(rng), g(rng), g(rng));
        m.col(i) = x.normalized();
    }
    return m;
}

Vec random_unit(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    Vec x(dim);
    for (int d = 0; d < dim; ++d) x(d) = g(rng);
    return x.normalized();
}

Mat random_rotation(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Mat a(3, 3);
    for (int i = 0; i < 9; ++i) a(i) = g(rng);
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1;
    return q;
}

void check_invariants(const Polytope& p) {
    const double tol = 1e-9 * p.diameter();
    for (const auto& f : p.facets()) {
        CHECK(std::abs(f.normal.norm() - 1.0) <= 1e-12);
        for (int v = 0; v < p.num_vertices(); ++v) CHECK(f.normal.dot(p.vertex(v)) <= f.offset + tol);
        CHECK(static_cast<int>(f.vertices.size()) >= p.dim());
    }
    CHECK(p.volume() > 0.0);
    Mat n(p.dim(), p.num_facets());
    Vec h(p.num_facets());
    for (int i = 0; i < p.num_facets(); ++i) {
        n.col(i) = p.facets()[i].normal;
        h(i) = p.facets()[i].offset;
    }
    const Polytope back = halfspace_intersection(n, h);
    CHECK(hausdorff_distance(back, p) <= 1e-9 * p.diameter());
}

} // namespace

TEST_CASE("hull of cube corners") {
    const Polytope c = convex_hull(cube_corners(0, 1));
    CHECK(c.num_facets() == 6);
    CHECK(c.num_vertices() == 8);
    CHECK(c.volume() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.centroid()(0) == doctest::Approx(0.5));
    check_invariants(c);
}

TEST_CASE("hull of standard simplex") {
    Mat m = Mat::Zero(3, 4);
    m(0, 1) = m(1, 2) = m(2, 3) = 1.0;
    const Polytope s = convex_hull(m);
    CHECK(s.num_facets() == 4);
    CHECK(s.volume() == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    check_invariants(s);
}

TEST_CASE("hull with interior and duplicate points") {
    Mat m(3, 12);
    m.leftCols(8) = cube_corners(-1, 1);
    m.col(8) = Vec::Zero(3);
    m.col(9) = m.col(0);
    m.col(10) = Eigen::Vector3d(1, 0, 0); // on a face
    m.col(11) = Eigen::Vector3d(1, 1, 0); // on an edge
    const Polytope c = convex_hull(m);
    CHECK(c.num_vertices() == 8);
    CHECK(c.num_facets() == 6);
    CHECK(c.volume() == doctest::Approx(8.0));
}

TEST_CASE("degenerate hulls raise DegenerateInput") {
    Mat flat(3, 4);
    flat << 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0;
    CHECK_THROWS_AS(convex_hull(flat), Error);
    try {
        convex_hull(flat);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateInput);
    }
    Mat line(2, 3);
    line << 0, 1, 2, 0, 1, 2;
    CHECK_THROWS_AS(convex_hull(line), Error);
}

TEST_CASE("sphere point hulls approach the ball") {
    const double ball = 4.0 * std::numbers::pi / 3.0;
    double prev = 0.0;
    for (int count : {50, 100, 400, 1600}) {
        const double v = convex_hull(sphere_points(count, 11)).volume();
        CHECK(v < ball);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 0.98 * ball);
}

TEST_CASE("volume agrees with brute-force triangulation") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Mat pts = sphere_points(8 + static_cast<int>(seed % 15), seed);
        const Polytope p = convex_hull(pts);
        const double oracle = brute_force_volume(pts);
        CHECK(std::abs(p.volume() - oracle) <= 1e-10 * oracle);
        check_invariants(p);
    }
}

TEST_CASE("halfspace intersection") {
    SUBCASE("cube") {
        Mat n(3, 6);
        n << 1, -1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 1, -1;
        Vec h = Vec::Constant(6, 0.5);
        const Polytope c = halfspace_intersection(n, h);
        CHECK(c.num_vertices() == 8);
        CHECK(c.volume() == doctest::Approx(1.0).epsilon(1e-13));
        check_invariants(c);

        Mat n2(3, 7);
        n2 << n, Eigen::Vector3d(1, 1, 1).normalized();
        Vec h2(7);
        h2 << h, 2.0;
        const Polytope c2 = halfspace_intersection(n2, h2);
        CHECK(c2.num_facets() == 6);
        CHECK(hausdorff_distance(c, c2) <= 1e-12);
    }
    SUBCASE("regular tetrahedron") {
        // Closed form: normals -v_k of the vertices v_k of the tetrahedron
        // inscribed in the unit sphere; equal offsets 1/3 give that tetrahedron.
        std::vector<Eigen::Vector3d> v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
        Mat n(3, 4);
        for (int k = 0; k < 4; ++k) n.col(k) = -v[k].normalized();
        const Polytope t = halfspace_intersection(n, Vec::Constant(4, 1.0 / 3.0));
        REQUIRE(t.num_vertices() == 4);
        for (int k = 0; k < 4; ++k) {
            const Vec expect = v[k].normalized();
            double best = 1e9;
            for (int q = 0; q < 4; ++q) best = std::min(best, (t.vertex(q) - expect).norm());
            CHECK(best <= 1e-12);
        }
        const double edge = std::sqrt(8.0 / 3.0);
        CHECK(t.volume() == doctest::Approx(edge * edge * edge / (6.0 * std::sqrt(2.0))).epsilon(1e-13));
    }
    SUBCASE("unbounded and empty") {
        Mat n(3, 5);
        n << 1, -1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 1;
        try {
            halfspace_intersection(n, Vec::Ones(5));
            FAIL("expected Unbounded");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Unbounded);
        }
        Mat m(3, 6);
        m << 1, -1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 1, -1;
        Vec h = Vec::Ones(6);
        h(0) = -2.0; // x <= -2 and x >= -1
        try {
            halfspace_intersection(m, h);
            FAIL("expected Empty");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Empty);
        }
    }
    SUBCASE("planar") {
        Mat n(2, 3);
        n << 0, 1, -1, -1, 1, 1;
        const Polytope tri = halfspace_intersection(n, Vec::Ones(3));
        CHECK(tri.num_vertices() == 3);
        check_invariants(tri);
    }
}

TEST_CASE("surface area measure") {
    const Polytope cube = box_polytope({1, 1, 1});
    const auto mu = surface_area_measure(cube);
    CHECK(mu.size() == 6);
    for (const auto& a : mu.atoms()) CHECK(a.weight == doctest::Approx(1.0));
    CHECK(mu.is_alexandrov());

    const auto box = surface_area_measure(box_polytope({2, 3, 5}));
    CHECK(box.atoms()[box.find(Eigen::Vector3d(1, 0, 0))].weight == doctest::Approx(15.0));
    CHECK(box.atoms()[box.find(Eigen::Vector3d(0, -1, 0))].weight == doctest::Approx(10.0));
    CHECK(box.atoms()[box.find(Eigen::Vector3d(0, 0, 1))].weight == doctest::Approx(6.0));

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto m = surface_area_measure(random_polytope(3, seed));
        CHECK(m.barycenter().norm() <= 1e-9 * m.total());
        CHECK(m.is_alexandrov());
    }
}

TEST_CASE("measure canonical form") {
    std::vector<Atom> atoms = {{Eigen::Vector3d(2, 0, 0), 1.0},
                               {Eigen::Vector3d(1, 1e-10, 0), 3.0},
                               {Eigen::Vector3d(0, 1, 0), 1.0}};
    DirectionalMeasure m(3, atoms);
    CHECK(m.size() == 2);
    CHECK(m.atoms()[0].weight == doctest::Approx(4.0));
    CHECK(m.atoms()[0].dir.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_FALSE(m.is_alexandrov());
    CHECK_THROWS_AS(DirectionalMeasure(3, {{Eigen::Vector3d(1, 0, 0), 0.0}}), Error);
}

TEST_CASE("support function") {
    const Polytope c = box_polytope({1, 1, 1});
    CHECK(support_function(c, Eigen::Vector3d(1, 0, 0)) == doctest::Approx(0.5));
    std::mt19937_64 rng(5);
    const Polytope p = random_polytope(3, 77);
    const Eigen::Vector3d t(0.3, -1.2, 2.0);
    const Polytope q = translate(p, t);
    for (int k = 0; k < 50; ++k) {
        const Vec u = random_unit(rng, 3);
        CHECK(support_function(q, u) == doctest::Approx(support_function(p, u) + t.dot(u)).epsilon(1e-13));
    }
    const Polytope ball = convex_hull(sphere_points(2000, 3));
    for (int k = 0; k < 20; ++k) {
        const double h = support_function(ball, random_unit(rng, 3));
        CHECK(h <= 1.0 + 1e-15);
        CHECK(h >= 0.95);
    }
}

TEST_CASE("mean width") {
    const Polytope cube = box_polytope({1, 1, 1});
    CHECK(std::abs(mean_width(cube) - 1.5) <= 1e-12);
    CHECK(std::abs(mean_width_edges(cube) - 1.5) <= 1e-14);

    Mat sq(2, 4);
    sq << 0, 1, 1, 0, 0, 0, 1, 1;
    CHECK(mean_width(convex_hull(sq)) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-14));

    const Polytope ball = convex_hull(sphere_points(3000, 9));
    CHECK(mean_width(ball) == doctest::Approx(2.0).epsilon(5e-3));
    CHECK(mean_width(ball) < 2.0);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Polytope p = translate(random_polytope(3, seed), Eigen::Vector3d(0.5, -2.0, 1.0));
        CHECK(std::abs(mean_width(p) - mean_width_edges(p)) <= 1e-12 * mean_width_edges(p));
    }
}

TEST_CASE("minkowski sum") {
    const Polytope c = box_polytope({1, 1, 1});
    const Polytope cc = minkowski_sum(c, c);
    CHECK(hausdorff_distance(cc, box_polytope({2, 2, 2})) <= 1e-12);

    // A point summand (approximated by a simplex of diameter ~1e-7) translates.
    Mat pt = Mat::Zero(3, 4);
    pt(0, 1) = pt(1, 2) = pt(2, 3) = 1e-7;
    pt.colwise() += Eigen::Vector3d(0.1, 0.2, 0.3);
    const Polytope moved = minkowski_sum(c, convex_hull(pt));
    CHECK(hausdorff_distance(moved, translate(c, Eigen::Vector3d(0.1, 0.2, 0.3))) <= 2e-7);

    Mat tet(3, 4);
    tet << 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1;
    const Polytope a = convex_hull(tet);
    const Polytope b = convex_hull(Mat(random_rotation(4) * tet));
    const Polytope s = minkowski_sum(a, b);
    CHECK(s.num_facets() > a.num_facets());
    std::mt19937_64 rng(21);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Vec u = random_unit(rng, 3);
        worst = std::max(worst, std::abs(support_function(s, u) - support_function(a, u) - support_function(b, u)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("minkowski sum is commutative and associative") {
    const Polytope a = random_polytope(3, 1), b = random_polytope(3, 2), c = random_polytope(3, 3);
    CHECK(hausdorff_distance(minkowski_sum(a, b), minkowski_sum(b, a)) <= 1e-9);
    CHECK(hausdorff_distance(minkowski_sum(minkowski_sum(a, b), c), minkowski_sum(a, minkowski_sum(b, c))) <= 1e-9);
}

TEST_CASE("volume Brunn-Minkowski and mean width additivity") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Polytope p = random_polytope(3, 2 * seed), q = random_polytope(3, 2 * seed + 1);
        const Polytope s = minkowski_sum(p, q);
        CHECK(std::cbrt(s.volume()) >= std::cbrt(p.volume()) + std::cbrt(q.volume()) - 1e-9);
        const double mw = mean_width(p) + mean_width(q);
        CHECK(std::abs(mean_width(s) - mw) <= 1e-8 * mw);
    }
}

TEST_CASE("intersection and distances") {
    const Polytope c = translate(box_polytope({1, 1, 1}), Eigen::Vector3d(0.5, 0.5, 0.5));
    const Polytope shifted = translate(c, Eigen::Vector3d(0.5, 0, 0));
    CHECK(intersect(c, shifted).volume() == doctest::Approx(0.5).epsilon(1e-13));
    const Polytope far = translate(c, Eigen::Vector3d(3, 0, 0));
    CHECK(intersection_volume(c, far) == 0.0);
    try {
        intersect(c, far);
        FAIL("expected Empty");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Empty);
    }
    CHECK(hausdorff_distance(c, c) == 0.0);
    for (double t : {0.25, -1.5, 3.0})
        CHECK(hausdorff_distance(c, translate(c, Eigen::Vector3d(t, 0, 0))) == doctest::Approx(std::abs(t)));
    CHECK(distance_to(c, Eigen::Vector3d(2, 2, 0.5)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(distance_to(c, Eigen::Vector3d(0.5, 0.5, -3)) == doctest::Approx(3.0));
}

TEST_CASE("dilate and centered") {
    const Polytope p = random_polytope(3, 8);
    const Polytope d = dilate(p, 2.0);
    CHECK(d.volume() == doctest::Approx(8 * p.volume()).epsilon(1e-12));
    CHECK(d.surface_area() == doctest::Approx(4 * p.surface_area()).epsilon(1e-12));
    CHECK(mean_width(d) == doctest::Approx(2 * mean_width(p)).epsilon(1e-12));
    CHECK(centered(translate(p, Eigen::Vector3d(5, 5, 5))).centroid().norm() <= 1e-12);
}

TEST_CASE("random polytope generator is seeded") {
    const Polytope a = random_polytope(3, 123), b = random_polytope(3, 123);
    CHECK(a.num_vertices() == b.num_vertices());
    CHECK((a.vertices() - b.vertices()).norm() == 0.0);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Polytope p = random_polytope(3, s);
        CHECK(p.num_vertices() >= 5);
        CHECK(p.num_vertices() <= 30);
    }
    const Polytope q = random_polytope(2, 4);
    CHECK(q.dim() == 2);
    CHECK(q.volume() > 0);
}
