#pragma once

#include <functional>
#include <vector>

namespace concavlab {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

/// Adaptive Gauss-Legendre on [a, b]: bisect until the 20-point and 10-point
/// estimates on each panel differ by less than the panel's share of tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                          int max_depth = 40);

} // namespace concavlab
