#pragma once

#include "concavlab/polytope.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace concavlab {

enum class Backend { Serial, Parallel };

/// Worker count for Backend::Parallel: the OpenMP default, capped by the
/// CONCAVLAB_THREADS environment variable when it is set.
int worker_count();

/// Runs body(i) for i in [0, n). Exceptions are collected and the one from
/// the lowest index is rethrown, so failures are deterministic.
void parallel_for(int n, const std::function<void(int)>& body, Backend backend = Backend::Parallel);

/// Results stored by index; order never depends on scheduling.
template <class T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& fn, Backend backend = Backend::Parallel) {
    std::vector<T> out(n);
    parallel_for(n, [&](int i) { out[i] = fn(i); }, backend);
    return out;
}

/// Product rule on S^2: Gauss-Legendre in cos(theta) times a uniform grid in
/// phi. Row sums are formed independently and added serially, so both
/// backends return bit-identical values.
double integrate_sphere(const std::function<double(const Eigen::Vector3d&)>& f, int n_theta, int n_phi,
                        Backend backend = Backend::Parallel);

/// Mean width of a 3D polytope from the product grid. Accuracy is limited by
/// the kinks of the support function (about 1e-4 at 64 x 128); mean_width is
/// the exact route.
double mean_width_grid(const Polytope& p, int n_theta = 64, int n_phi = 128, Backend backend = Backend::Parallel);

} // namespace concavlab
