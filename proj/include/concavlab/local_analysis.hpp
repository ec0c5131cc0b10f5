#pragma once

#include "concavlab/kernels.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace concavlab {

/// A function on S^2 with its tangential gradient (a vector tangent to the
/// sphere at the evaluation point).
struct SphericalField {
    std::string name;
    std::function<double(const Eigen::Vector3d&)> value;
    std::function<Eigen::Vector3d(const Eigen::Vector3d&)> gradient;
};

struct SphericalGrid {
    int n_theta = 128; // Gauss-Legendre nodes in cos(theta)
    int n_phi = 256;   // uniform nodes in phi
};

/// Real spherical harmonic of degree l and order m (-l <= m <= l), unit L2
/// norm: cos(mφ) for m > 0, sin(|m|φ) for m < 0.
SphericalField harmonic(int l, int m);

/// φ∘R^T with the matching gradient R ∇φ(R^T x).
SphericalField rotated(const SphericalField& f, const Eigen::Matrix3d& r);

double integrate(const std::function<double(const Eigen::Vector3d&)>& f, const SphericalGrid& grid = {},
                 Backend backend = Backend::Parallel);

/// ∫_{S^2} |∇_τ φ|^2 - 2 φ^2 (Gauss curvature 1). Evaluated on `grid` and on
/// the doubled grid; throws GridTooCoarse if they differ by more than 1e-6.
double second_variation_surface(const SphericalField& f, const SphericalGrid& grid = {},
                                Backend backend = Backend::Parallel);

/// Largest gap between the analytic gradient and central differences along
/// great circles through `points`, with step h.
double gradient_fd_error(const SphericalField& f, const std::vector<Eigen::Vector3d>& points, double h = 1e-5);

struct ProfileRow {
    int l = 0;
    double value = 0.0;    // second variation of Y_l0 divided by its squared norm
    double expected = 0.0; // l(l+1) - 2
};

std::vector<ProfileRow> coercivity_profile(int lmax, const SphericalGrid& grid = {},
                                           Backend backend = Backend::Parallel);

} // namespace concavlab
