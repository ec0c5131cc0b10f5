#include "concavlab/local_analysis.hpp"

#include "concavlab/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace concavlab {

namespace {

using Eigen::Vector3d;

constexpr double kPi = std::numbers::pi;

struct Spherical {
    double theta, phi;
    Vector3d e_theta, e_phi;
};

Spherical spherical(const Vector3d& p) {
    Spherical s;
    s.theta = std::atan2(std::hypot(p.x(), p.y()), p.z());
    s.phi = std::atan2(p.y(), p.x());
    const double ct = std::cos(s.theta), st = std::sin(s.theta), cp = std::cos(s.phi), sp = std::sin(s.phi);
    s.e_theta = Vector3d(ct * cp, ct * sp, -st);
    s.e_phi = Vector3d(-sp, cp, 0.0);
    return s;
}

double legendre(int l, int m, double x) { return m > l ? 0.0 : std::assoc_legendre(l, m, x); }

} // namespace

SphericalField harmonic(int l, int m) {
    if (l < 0 || std::abs(m) > l) throw Error(ErrorKind::DegenerateInput, "harmonic needs |m| <= l");
    const int am = std::abs(m);
    double c = std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) * std::exp(std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0)));
    if (m != 0) c *= std::sqrt(2.0);
    auto angular = [m, am](double phi) { return m > 0 ? std::cos(am * phi) : m < 0 ? std::sin(am * phi) : 1.0; };
    auto angular_d = [m, am](double phi) {
        return m > 0 ? -am * std::sin(am * phi) : m < 0 ? am * std::cos(am * phi) : 0.0;
    };

    SphericalField f;
    std::ostringstream name;
    name << "Y(" << l << "," << m << ")";
    f.name = name.str();
    f.value = [=](const Vector3d& p) {
        const Spherical s = spherical(p);
        return c * legendre(l, am, std::cos(s.theta)) * angular(s.phi);
    };
    f.gradient = [=](const Vector3d& p) -> Vector3d {
        if (l == 0) return Vector3d::Zero();
        const Spherical s = spherical(p);
        const double x = std::cos(s.theta), st = std::sin(s.theta);
        if (st <= 0.0) return Vector3d::Zero();
        const double pl = legendre(l, am, x);
        // dP/dθ = (l x P_l^m - (l+m) P_{l-1}^m) / sin θ.
        const double dtheta = (l * x * pl - (l + am) * legendre(l - 1, am, x)) / st;
        return c * (dtheta * angular(s.phi) * s.e_theta + pl * angular_d(s.phi) / st * s.e_phi);
    };
    return f;
}

SphericalField rotated(const SphericalField& f, const Eigen::Matrix3d& r) {
    SphericalField g;
    g.name = f.name + " rotated";
    g.value = [f, r](const Vector3d& p) { return f.value(r.transpose() * p); };
    g.gradient = [f, r](const Vector3d& p) -> Vector3d { return r * f.gradient(r.transpose() * p); };
    return g;
}

double integrate(const std::function<double(const Vector3d&)>& f, const SphericalGrid& grid, Backend backend) {
    return integrate_sphere(f, grid.n_theta, grid.n_phi, backend);
}

double second_variation_surface(const SphericalField& f, const SphericalGrid& grid, Backend backend) {
    auto integrand = [&](const Vector3d& p) {
        const double v = f.value(p);
        return f.gradient(p).squaredNorm() - 2.0 * v * v;
    };
    const double coarse = integrate(integrand, grid, backend);
    const double fine = integrate(integrand, {2 * grid.n_theta, 2 * grid.n_phi}, backend);
    if (std::abs(fine - coarse) > 1e-6) {
        std::ostringstream os;
        os << "grid " << grid.n_theta << "x" << grid.n_phi << " changes by " << std::abs(fine - coarse)
           << " on refinement";
        throw Error(ErrorKind::GridTooCoarse, os.str());
    }
    return fine;
}

double gradient_fd_error(const SphericalField& f, const std::vector<Vector3d>& points, double h) {
    double worst = 0.0;
    for (const Vector3d& q : points) {
        const Vector3d p = q.normalized();
        const Spherical s = spherical(p);
        const Vector3d g = f.gradient(p);
        for (const Vector3d& t : {s.e_theta, s.e_phi}) {
            const Vector3d plus = std::cos(h) * p + std::sin(h) * t, minus = std::cos(h) * p - std::sin(h) * t;
            const double fd = (f.value(plus) - f.value(minus)) / (2.0 * h);
            worst = std::max(worst, std::abs(fd - g.dot(t)));
        }
        worst = std::max(worst, std::abs(g.dot(p)));
    }
    return worst;
}

std::vector<ProfileRow> coercivity_profile(int lmax, const SphericalGrid& grid, Backend backend) {
    if (lmax < 0) throw Error(ErrorKind::DegenerateInput, "lmax must be nonnegative");
    std::vector<ProfileRow> rows;
    for (int l = 0; l <= lmax; ++l) {
        const SphericalField y = harmonic(l, 0);
        const double norm = integrate([&](const Vector3d& p) { return std::pow(y.value(p), 2); }, grid, backend);
        rows.push_back({l, second_variation_surface(y, grid, backend) / norm, l * (l + 1.0) - 2.0});
    }
    return rows;
}

} // namespace concavlab
