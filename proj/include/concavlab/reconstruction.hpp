#pragma once

#include "concavlab/bodies.hpp"
#include "concavlab/measure.hpp"
#include "concavlab/polytope.hpp"

#include <utility>

namespace concavlab {

struct SolverConfig {
    double area_tol = 1e-10;   // relative facet-area tolerance
    int max_iter = 500;
    double armijo = 1e-4;      // sufficient-decrease constant of the line search
    int max_halvings = 5;      // Newton halvings before the gradient fallback
};

struct SolverDiagnostics {
    int iters = 0;
    double max_rel_area_err = 0.0;
};

/// Discrete Minkowski problem: the polytope, centred at its centroid, whose
/// facet normals are the atom directions and whose facet areas are the
/// weights.
///
/// Minimises f.h - log V(h) over support vectors h (weights normalised to
/// unit mass); at the minimiser a(h) = V(h) f, so a final dilation matches the
/// areas. Damped Newton on the complement of the translation directions, with
/// a projected-gradient fallback.
///
/// Throws NotAlexandrov, NoConvergence (with the best error in the message)
/// or FacetVanished.
Polytope solve_minkowski(const DirectionalMeasure& m, const SolverConfig& cfg = {},
                         SolverDiagnostics* diag = nullptr);

Polytope blaschke_sum(const Polytope& k, const Polytope& l, const SolverConfig& cfg = {});

/// Closed-form Blaschke sum of two axis boxes: solves the face-area equations
/// prod_{j != i} x_j = A_i directly.
Box blaschke_sum_boxes(const Box& a, const Box& b);

/// t . K = t^{1/(n-1)} K.
Polytope blaschke_scale(double t, const Polytope& k);

/// True iff the measure has exactly n+1 atoms (a simplex). Throws NotAlexandrov.
bool is_indecomposable(const DirectionalMeasure& m);

/// Splits m into two Alexandrov measures, neither proportional to m, that sum
/// to m atomwise. Throws Indecomposable for n+1 atoms.
std::pair<DirectionalMeasure, DirectionalMeasure> decompose(const DirectionalMeasure& m);

struct DecompositionCheck {
    int atoms = 0;
    double sum_error = 0.0;     // max |w_a + w_b - w| over the atoms of m
    double ratio_spread = 0.0;  // max - min of w_a / w; zero means proportional
    bool alexandrov = false;    // both parts
    double area_error_a = 0.0;  // relative facet-area error after reconstruction
    double area_error_b = 0.0;
    double volume_a = 0.0;
    double volume_b = 0.0;
};

/// Decomposes m and reconstructs both parts.
DecompositionCheck check_decomposition(const DirectionalMeasure& m, const SolverConfig& cfg = {});

} // namespace concavlab
