#pragma once

#include "concavlab/bodies.hpp"
#include "concavlab/polytope.hpp"

#include <string>
#include <variant>

namespace concavlab {

/// Equilateral triangle with vertices (0,0), (1,0), (1/2, sqrt(3)/2).
struct Triangle {};

using Body = std::variant<Polytope, Box, Rect, Spheroid, Triangle>;

std::string describe(const Body& body);

// Dirichlet eigenvalues ------------------------------------------------------

double lambda1_box(const Box& box);
double lambda1_rect(const Rect& rect);
double lambda2_rect(const Rect& rect);

// Torsion (-Δu = 1, u = 0 on the boundary) on rectangles --------------------

/// τ of [0,a] x [0,b], from the Fourier series with its exponentially small
/// remainder summed in closed form.
double torsion_rect(const Rect& rect);

/// ∫ over one side of |∇u|^2. `length` is the side, `width` the other
/// dimension: (8 L^3/π^4) Σ_{m odd} tanh^2(mπW/2L)/m^4.
double torsion_side_energy(double length, double width);

/// Derivative of S(r) = (8/π^4) Σ tanh^2(mπr/2)/m^4, where the side energy is
/// L^3 S(W/L).
double torsion_side_profile(double r);
double torsion_side_profile_derivative(double r);

/// Total ∫_{∂R} |∇u|^2 (two sides of each kind).
double boundary_energy_torsion_rect(const Rect& rect);

// Boundary energies of the L2-normalised first eigenfunction ----------------

/// 2π^2 Σ_i 2/a_i^3: each face normal to e_i carries 2π^2/a_i^3.
double boundary_energy_lambda1_box(const Box& box);
double boundary_energy_lambda1_rect(const Rect& rect);

struct TriangleValues {
    double lambda1;            // 16π^2/3
    double l2_norm_sq;         // ∫ u_T^2 for the unnormalised eigenfunction
    double raw_energy;         // ∫_{∂T} |∇u_T|^2, unnormalised
    double energy;             // same for the L2-normalised eigenfunction
    double quotient;           // λ^{3/2} / energy
    double raw_quotient;       // λ^{3/2} / raw_energy
};

/// Composite 16-point Gauss-Legendre with `panels` panels per direction.
TriangleValues lambda1_triangle_equilateral(int panels = 8);

// Capacity and spheroids ------------------------------------------------------

double capacity_ball(double radius);
double capacity_prolate_spheroid(const Spheroid& s);
double surface_area_prolate_spheroid(const Spheroid& s);

// Quotients -------------------------------------------------------------------

struct QuotientReport {
    std::string functional;
    std::string body;
    double exponent = 0.0;      // applied to F
    double numerator = 0.0;     // F^exponent
    std::string denominator_kind; // "mu_mass" or "surface_area"
    double denominator = 0.0;
    double value = 0.0;
};

/// volume: Vol^{(n-1)/n}/S; lambda1: λ^{3/2}/∫dµ; torsion: τ^{3/4}/∫dµ;
/// capacity: Cap^2/S. Throws DomainMismatch for unsupported bodies.
QuotientReport isoperimetric_quotient(const std::string& functional, const Body& body);

} // namespace concavlab
