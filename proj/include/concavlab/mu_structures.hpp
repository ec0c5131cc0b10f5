#pragma once

#include "concavlab/functionals.hpp"
#include "concavlab/measure.hpp"
#include "concavlab/reconstruction.hpp"
#include "concavlab/report.hpp"

#include <string>

namespace concavlab {

/// Parametrisations K -> µ(K) with an analytic µ:
///   volume       facet areas of polytopes (and boxes), F = Vol, α = n
///   lambda1_box  2π²/a_i³ on ±e_i for boxes, F = λ1, α = -2
///   torsion_rect side energies of the torsion function on rectangles, F = τ, α = 4
enum class Structure { Volume, Lambda1Box, TorsionRect };

Structure parse_structure(const std::string& name);
std::string to_string(Structure s);

/// Homogeneity degree of F for bodies of dimension `dim`.
double alpha(Structure s, int dim);

/// Dimension of a body in the structure's domain. Throws DomainMismatch.
int body_dim(Structure s, const Body& body);

double functional_value(Structure s, const Body& body);
DirectionalMeasure mu_measure(Structure s, const Body& body);

/// Inverse of mu_measure up to translation. Axis structures require atoms on
/// ±e_i with equal weights on opposite faces (UnsupportedSupport otherwise).
Body mu_reconstruct(Structure s, const DirectionalMeasure& m, const SolverConfig& cfg = {});

/// Rectangle whose side energies are w1 (sides normal to e1) and w2, by Newton
/// in log side lengths. Throws NoConvergence.
Rect torsion_rect_from_energies(double w1, double w2);

Body mu_sum(Structure s, const Body& k, const Body& l, const SolverConfig& cfg = {});

/// t^{1/(α-1)} K, so that µ(t·K) = t µ(K).
Body mu_scale(Structure s, double t, const Body& k);

/// F^{1-1/α}(K +_µ L) against F^{1-1/α}(K) + F^{1-1/α}(L).
DeficitReport mu_concavity_deficit(Structure s, const Body& k, const Body& l, const SolverConfig& cfg = {});

/// For atomwise ordered µ(K) <= µ(L) (either way round), whether F follows
/// the same order. Throws NotComparable for different supports or no order.
bool monotonicity_check(Structure s, const Body& k, const Body& l);

} // namespace concavlab
