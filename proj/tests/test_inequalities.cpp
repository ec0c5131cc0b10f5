#include <doctest.h>

#include "concavlab/errors.hpp"
#include "concavlab/inequalities.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

using namespace concavlab;

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

TEST_CASE("Brunn-Minkowski deficits") {
    for (int i = 0; i < 8; ++i) {
        const auto [a, b] = sample_pair("volume", 5, i);
        CHECK(bm_deficit("volume", a, b).deficit >= -1e-9);
        const auto [p, q] = sample_pair("lambda1", 5, i);
        CHECK(bm_deficit("lambda1", p, q).deficit >= -1e-9);
    }
    const Polytope p = random_polytope(3, 9);
    const auto hom = bm_deficit("volume", p, dilate(p, 2.5));
    CHECK(std::abs(hom.deficit) <= 1e-6 * hom.lhs);
    CHECK(hom.exponent == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(bm_deficit("lambda2", Box{{1, 1, 1}}, Box{{1, 1, 1}}), Error);
}

TEST_CASE("Kneser-Suss deficits for volume") {
    for (int i = 0; i < 8; ++i) {
        const auto [a, b] = sample_pair("volume", 6, i);
        const auto r = ks_deficit("volume", a, b);
        CHECK(r.deficit >= -1e-9);
        CHECK(r.exponent == doctest::Approx(2.0 / 3));
    }
    const Polytope p = random_polytope(3, 12);
    const auto hom = ks_deficit("volume", p, dilate(p, 0.4));
    CHECK(std::abs(hom.deficit) <= 1e-6 * hom.lhs);
    const auto box = ks_deficit("volume", Box{{1, 2, 3}}, Box{{3, 1, 0.5}});
    const auto gen = ks_deficit("volume", Polytope(box_polytope({1, 2, 3})), Polytope(box_polytope({3, 1, 0.5})));
    CHECK(std::abs(box.lhs - gen.lhs) < 1e-8);
}

TEST_CASE("lambda1 Kneser-Suss violation on plates") {
    const auto t0 = std::chrono::steady_clock::now();
    const DeficitReport r = reproduce_rem3();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(r.deficit < 0);
    CHECK(secs < 1.0);
    CHECK(r.exponent == -1.0);
    CHECK(std::abs(r.deficit - oracles::plate_deficit({0.01, 1, 1}, {0.005, 2, 2})) < 1e-18);
    CHECK(std::abs(r.extra["ratio"].get<double>() - 0.64) < 0.01);
    CHECK(r.witness["bodies"][0]["sides"][0].get<double>() == 0.01);
    CHECK(r.witness["bodies"][1]["sides"][2].get<double>() == 2.0);
    // The corner y1 -> inf, y2 -> 0 stays on the positive side.
    for (const auto& row : r.extra["corner_scan"]) CHECK(row["deficit"].get<double>() > 0);
    CHECK(r.extra["family_scan"]["negative_points"].get<int>() > 0);

    const std::vector<double> a{2, 1, 1}, b{1, 1, 1};
    CHECK(std::abs(lambda1_ks_boxes(Box{a}, Box{b}).deficit - oracles::plate_deficit(a, b)) < 1e-15);
    const auto hom = lambda1_ks_boxes(Box{{1, 2, 3}}, Box{{2, 4, 6}});
    CHECK(std::abs(hom.deficit) < 1e-12 * std::abs(hom.rhs));
}

TEST_CASE("seeded rem3 search") {
    const auto r = search_rem3(9, 3, 200);
    CHECK(r.deficit < 0);
    CHECK(r.extra["violation_found"].get<bool>());
    const auto again = search_rem3(9, 3, 200);
    CHECK(to_json(r, false).dump() == to_json(again, false).dump());
}

TEST_CASE("capacity quotient along thinning spheroids") {
    const Rem1Result r = reproduce_rem1();
    REQUIRE(r.rows.size() == 7);
    CHECK(std::abs(r.rows[0].quotient - 4 * kPi) < 1e-13);
    CHECK(r.strictly_increasing);
    CHECK(r.growth > 1e3);
    CHECK(r.rows[6].quotient / r.rows[1].quotient > 1e3);
    // Growth like a / log^2 a.
    const double pred = (1e6 / std::pow(std::log(2e6), 2)) / (1e5 / std::pow(std::log(2e5), 2));
    CHECK(std::abs(r.rows[6].quotient / r.rows[5].quotient / pred - 1) < 0.05);
}

TEST_CASE("lambda2 Brunn-Minkowski search") {
    const auto sq = bm_deficit("lambda2", Rect{1, 1}, Rect{1, 1});
    CHECK(std::abs(sq.deficit) < 1e-15);
    const auto r = lambda2_bm_search(5, 1, 100);
    CHECK(r.extra["violation_found"].get<bool>());
    const double witness = (3 / std::sqrt(5.0) - std::sqrt(2.0)) / kPi;
    const auto w = bm_deficit("lambda2", Rect{2, 1}, Rect{1, 2});
    CHECK(std::abs(w.deficit - witness) < 1e-15);
    CHECK(r.normalized_deficit <= w.normalized_deficit + 1e-15);
}

TEST_CASE("Fraenkel asymmetry") {
    const Polytope k = random_polytope(3, 31);
    const auto self = fraenkel_asymmetry(k, k);
    CHECK(self.asymmetry <= 1e-8);
    Vec t(3);
    t << 0.3, -1.2, 2.0;
    CHECK(fraenkel_asymmetry(k, translate(k, t)).asymmetry <= 1e-8);

    const Polytope cube = box_polytope({1, 1, 1}), box = box_polytope({2, 1, 1});
    const auto a = fraenkel_asymmetry(cube, box);
    // λ = 2^{-1/3}; the centred overlap is 2^{-2/3}.
    CHECK(std::abs(a.asymmetry - 2 * (1 - std::pow(2.0, -2.0 / 3))) < 1e-8);
    CHECK(std::abs(a.asymmetry - oracles::grid_asymmetry(cube, box)) < 1e-4);
    CHECK(a.sigma == doctest::Approx(2.0));

    const Polytope l = random_polytope(3, 32);
    const double base = fraenkel_asymmetry(k, l).asymmetry;
    CHECK(std::abs(base - oracles::grid_asymmetry(k, l)) < 1e-4);
    CHECK(std::abs(fraenkel_asymmetry(dilate(k, 2.0), dilate(l, 0.3)).asymmetry - base) < 1e-8);
    CHECK(std::abs(fraenkel_asymmetry(l, k).asymmetry - base) < 1e-6);
    CHECK(base > 0);
    CHECK(base <= 2);
}

TEST_CASE("quantitative Kneser-Suss") {
    const Polytope cube = box_polytope({1, 1, 1});
    const auto hom = quantitative_ks_report(cube, dilate(cube, 2.0));
    CHECK(hom.extra["asymmetry"].get<double>() < 1e-6);
    CHECK(std::abs(hom.deficit) < 1e-6 * hom.lhs);

    const auto r = quantitative_ks_report(cube, box_polytope({4, 1, 1}));
    CHECK(r.deficit > 0);
    const double c = r.extra["c_implied"].get<double>();
    CHECK(std::isfinite(c));
    CHECK(c > 0);
    const double expect = r.rhs * r.extra["asymmetry_sq"].get<double>() / (r.extra["sigma_pow"].get<double>() * r.deficit);
    CHECK(std::abs(c - expect) < 1e-12 * c);
}

TEST_CASE("sweeps are deterministic and backend independent") {
    const auto par = check_sweep("ks", "volume", 6, 42, 3, Backend::Parallel);
    const auto ser = check_sweep("ks", "volume", 6, 42, 3, Backend::Serial);
    CHECK(to_json(par, false).dump() == to_json(ser, false).dump());
    CHECK(par.violations == 0);
    CHECK(par.min_deficit >= -1e-9);
    const std::string csv = to_csv(par);
    CHECK(csv.rfind("seed,index,body_k,body_l,lhs,rhs,deficit\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);

    const auto mu = check_sweep("mu-concavity", "torsion", 10, 1);
    CHECK(mu.violations == 0);
    const auto q = check_sweep("quant-ks", "volume", 2, 8);
    CHECK(to_json(q)["min_c_implied"].get<double>() > 0);
    CHECK_THROWS_AS(check_sweep("sharp", "volume", 1, 1), Error);
}

TEST_CASE("quotient limit reports") {
    const auto t = torsion_limit_report();
    CHECK(t["slope_ok"].get<bool>());
    CHECK(t["ratio_ok"].get<bool>());
    const auto l = lambda1_limit_report();
    CHECK(l["agrees"].get<bool>());
    CHECK(std::abs(l["limit"].get<double>() - kPi / 4) < 1e-15);
    const auto tri = triangle_report();
    CHECK(tri["agrees"].get<bool>());
    CHECK(std::abs(tri["raw_quotient"].get<double>() - 1.61) < 0.01);
    const auto all = quotient_suites();
    CHECK(all["volume_vs_ball"]["all_below"].get<bool>());
}
