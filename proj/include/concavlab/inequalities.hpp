#pragma once

#include "concavlab/functionals.hpp"
#include "concavlab/kernels.hpp"
#include "concavlab/mu_structures.hpp"
#include "concavlab/reconstruction.hpp"
#include "concavlab/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace concavlab {

/// Functionals known to the engine: volume (polytopes, boxes, rectangles),
/// lambda1 (boxes, rectangles), lambda2 (rectangles), torsion (rectangles).
double functional_value(const std::string& functional, const Body& body);
double homogeneity(const std::string& functional, int dim);
int body_dimension(const Body& body);

/// Minkowski and Blaschke sums on every family that has them in closed form
/// (boxes, rectangles) or through the solver (polytopes).
Body minkowski_sum(const Body& k, const Body& l);
Body blaschke_sum(const Body& k, const Body& l, const SolverConfig& cfg = {});

/// F^{1/α}(K + L) against F^{1/α}(K) + F^{1/α}(L).
DeficitReport bm_deficit(const std::string& functional, const Body& k, const Body& l);

/// F^{(n-1)/α}(K ∔ L) against F^{(n-1)/α}(K) + F^{(n-1)/α}(L).
DeficitReport ks_deficit(const std::string& functional, const Body& k, const Body& l, const SolverConfig& cfg = {});

// Counterexamples ------------------------------------------------------------

/// Box pair (x1, y1, z1), (x2, y2, z2) with the λ1 Blaschke deficit.
DeficitReport lambda1_ks_boxes(const Box& a, const Box& b);

/// λ1 Kneser-Süss violation on the plate pair (0.01,1,1), (0.005,2,2). The
/// report also carries a scan of the family x1 = z1 = z2 = 1, x2 = 4 over a
/// log grid in (y1, y2) with its sign table, and the corner y1 -> ∞, y2 -> 0.
/// Throws NoViolationFound if the plate pair does not violate.
DeficitReport reproduce_rem3(int grid = 25);

/// Seeded search for λ1 Kneser-Süss violations: the family grid plus random
/// box pairs. Returns the most negative normalised deficit found.
DeficitReport search_rem3(int grid, std::uint64_t seed, int samples = 2000);

struct Rem1Row {
    int k = 0;
    double a = 0.0;
    double capacity = 0.0;
    double surface_area = 0.0;
    double quotient = 0.0; // Cap^2 / S
};

struct Rem1Result {
    std::vector<Rem1Row> rows;
    bool strictly_increasing = false;
    double growth = 0.0; // last / first quotient
};

/// Cap^2/S along the spheroids a = 10^k, b = 1, k = 0..kmax.
Rem1Result reproduce_rem1(int kmax = 6);
nlohmann::json to_json(const Rem1Result& r);

/// Minimal BM deficit of λ2^{-1/2} over Minkowski sums of rectangles with
/// sides on a log grid in [1/4, 4] plus random pairs. A violation is not
/// guaranteed; extra["violation_found"] says whether one turned up.
DeficitReport lambda2_bm_search(int grid, std::uint64_t seed, int samples = 2000);

// Fraenkel asymmetry and quantitative Kneser-Süss ---------------------------

struct AsymmetryResult {
    double asymmetry = 0.0;   // A(K, L) in [0, 2]
    Vec translation;          // optimal x0
    double scale = 1.0;       // (Vol K / Vol L)^{1/n}
    double sigma = 1.0;       // max(Vol K / Vol L, Vol L / Vol K)
    int evaluations = 0;
};

/// inf over x0 of Vol(K Δ (x0 + λL)) / Vol K. Overlap maximised from the
/// centroid alignment: a 3^n stencil picks the start, then compass search
/// refines x0 to 1e-8.
AsymmetryResult fraenkel_asymmetry(const Polytope& k, const Polytope& l);

/// Volume KS deficit with A(K,L)^2, σ^{1-1/n} and the implied constant
/// c = rhs A^2 / (σ^{1-1/n} deficit). Throws DegenerateDeficit when the
/// deficit vanishes while A > 1e-6.
DeficitReport quantitative_ks_report(const Polytope& k, const Polytope& l, const SolverConfig& cfg = {});

// Sweeps ---------------------------------------------------------------------

/// Pair of random bodies for sample i of a seeded sweep, drawn from the
/// family the functional lives on.
std::pair<Body, Body> sample_pair(const std::string& functional, std::uint64_t seed, int index, int dim = 3);

struct SweepResult {
    std::string inequality;
    std::string functional;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<DeficitReport> reports; // in sample order
    double min_deficit = 0.0;
    int argmin = -1;
    int violations = 0; // deficits below -1e-9
};

/// inequality in {bm, ks, mu-concavity, quant-ks}. Samples run in parallel;
/// results are ordered by sample index.
SweepResult check_sweep(const std::string& inequality, const std::string& functional, int samples,
                        std::uint64_t seed, int dim = 3, Backend backend = Backend::Parallel);

nlohmann::json to_json(const SweepResult& r, bool with_time = true);
std::string to_csv(const SweepResult& r);

// Quotient suites ------------------------------------------------------------

/// Torsion and λ1 rectangle limits, the triangle value, the spheroid capacity
/// sweep and the volume quotient of sampled polytopes against the ball.
nlohmann::json quotient_suites();

/// Log-log slope of the torsion quotient on R_l over l in [1e-3, 1e-1], with
/// τ(R_l)/l^3 at l = 1e-3.
nlohmann::json torsion_limit_report();

/// λ1 quotient on R_l as l -> 0 against π/4, with the stated 4π and π²/4
/// variants for comparison.
nlohmann::json lambda1_limit_report();

/// Equilateral triangle values against their closed forms.
nlohmann::json triangle_report();

} // namespace concavlab
