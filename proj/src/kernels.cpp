#include "concavlab/kernels.hpp"

#include "concavlab/errors.hpp"
#include "concavlab/quadrature.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string>

namespace concavlab {

int worker_count() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("CONCAVLAB_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) n = std::min(n, cap);
        } catch (const std::exception&) {
        }
    }
    return std::max(n, 1);
}

void parallel_for(int n, const std::function<void(int)>& body, Backend backend) {
    if (n <= 0) return;
    std::vector<std::exception_ptr> errors(n);
    if (backend == Backend::Serial || n == 1) {
        for (int i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (int i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

double integrate_sphere(const std::function<double(const Eigen::Vector3d&)>& f, int n_theta, int n_phi,
                        Backend backend) {
    if (n_theta < 1 || n_phi < 1) throw Error(ErrorKind::DegenerateInput, "grid must be nonempty");
    const GaussRule g = gauss_legendre(n_theta);
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    std::vector<double> rows(n_theta, 0.0);
    parallel_for(
        n_theta,
        [&](int i) {
            const double z = g.nodes[i];
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double s = 0.0;
            for (int j = 0; j < n_phi; ++j) {
                const double phi = (j + 0.5) * dphi;
                s += f(Eigen::Vector3d(r * std::cos(phi), r * std::sin(phi), z));
            }
            rows[i] = g.weights[i] * s * dphi;
        },
        backend);
    double total = 0.0;
    for (double r : rows) total += r;
    return total;
}

double mean_width_grid(const Polytope& p, int n_theta, int n_phi, Backend backend) {
    if (p.dim() != 3) throw Error(ErrorKind::DegenerateInput, "grid mean width needs n = 3");
    const Mat& v = p.vertices();
    const double integral = integrate_sphere(
        [&](const Eigen::Vector3d& u) { return (u.transpose() * v).maxCoeff(); }, n_theta, n_phi, backend);
    return integral / (2.0 * std::numbers::pi);
}

} // namespace concavlab
