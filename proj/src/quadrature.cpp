#include "concavlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace concavlab {

GaussRule gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, rule);
    return rule;
}

namespace {

double panel(const std::function<double(double)>& f, double a, double b, const GaussRule& g) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) s += g.weights[k] * f(c + h * g.nodes[k]);
    return s * h;
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
             const GaussRule& hi, const GaussRule& lo) {
    const double fine = panel(f, a, b, hi);
    const double coarse = panel(f, a, b, lo);
    if (std::abs(fine - coarse) <= tol || depth <= 0) return fine;
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth - 1, hi, lo) + adapt(f, m, b, 0.5 * tol, depth - 1, hi, lo);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
    const GaussRule hi = gauss_legendre(20);
    const GaussRule lo = gauss_legendre(10);
    return adapt(f, a, b, tol, max_depth, hi, lo);
}

} // namespace concavlab
