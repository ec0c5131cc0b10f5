#include "concavlab/functionals.hpp"

#include "concavlab/errors.hpp"
#include "concavlab/quadrature.hpp"

#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace concavlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// Terms with tanh argument above this are 1 to double precision.
constexpr double kTanhCut = 20.0;

struct Overload {
    template <class... F>
    struct Set : F... {
        using F::operator()...;
    };
};

template <class... F>
Overload::Set<F...> overload(F... f) {
    return {f...};
}

double sq(double x) { return x * x; }

// Sum over odd m >= M + 2 of 1/m^4, via psi'''((M+2)/2) / 96.
double odd_quartic_tail(int last_odd) {
    return boost::math::polygamma(3, 0.5 * (last_odd + 2)) / 96.0;
}

struct TriangleField {
    double u(double x, double y) const {
        return std::sin(4.0 * kPi * y / kSqrt3) - std::sin(2.0 * kPi * (x + y / kSqrt3)) +
               std::sin(2.0 * kPi * (x - y / kSqrt3));
    }
    double grad_sq(double x, double y) const {
        const double cp = std::cos(2.0 * kPi * (x + y / kSqrt3));
        const double cm = std::cos(2.0 * kPi * (x - y / kSqrt3));
        const double ux = -2.0 * kPi * cp + 2.0 * kPi * cm;
        const double uy = 4.0 * kPi / kSqrt3 * std::cos(4.0 * kPi * y / kSqrt3) - 2.0 * kPi / kSqrt3 * cp -
                          2.0 * kPi / kSqrt3 * cm;
        return ux * ux + uy * uy;
    }
};

// Composite Gauss-Legendre on [0,1] with `panels` equal panels.
template <class F>
double composite(const GaussRule& g, int panels, F&& f) {
    const double h = 1.0 / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p)
        for (std::size_t k = 0; k < g.nodes.size(); ++k) {
            const double t = h * (p + 0.5 * (g.nodes[k] + 1.0));
            sum += 0.5 * h * g.weights[k] * f(t);
        }
    return sum;
}

} // namespace

std::string describe(const Body& body) {
    return std::visit(overload([](const Polytope& p) {
                                   std::ostringstream os;
                                   os << "polytope:dim=" << p.dim() << ",vertices=" << p.num_vertices();
                                   return os.str();
                               },
                               [](const Triangle&) { return std::string("triangle"); },
                               [](const auto& b) { return describe(b); }),
                      body);
}

double lambda1_box(const Box& box) {
    validate(box);
    double s = 0.0;
    for (double a : box.sides) s += 1.0 / (a * a);
    return kPi * kPi * s;
}

double lambda1_rect(const Rect& rect) {
    validate(rect);
    return kPi * kPi * (1.0 / sq(rect.a) + 1.0 / sq(rect.b));
}

double lambda2_rect(const Rect& rect) {
    validate(rect);
    const double ia = 1.0 / sq(rect.a), ib = 1.0 / sq(rect.b);
    return kPi * kPi * std::min(4.0 * ia + ib, ia + 4.0 * ib);
}

double torsion_rect(const Rect& rect) {
    validate(rect);
    const double a = std::min(rect.a, rect.b), b = std::max(rect.a, rect.b);
    const double r = b / a;
    // tanh(x) = 1 - 2/(e^{2x}+1); the constant part sums to (31/32) zeta(5).
    double corr = 0.0;
    for (int m = 1;; m += 2) {
        const double term = 1.0 / (std::pow(m, 5) * (std::exp(m * kPi * r) + 1.0));
        corr += term;
        if (term < 1e-18 * corr || m * kPi * r > 800.0) break;
    }
    const double odd5 = 31.0 / 32.0 * boost::math::zeta(5.0);
    return a * a * a * b / 12.0 - 16.0 * std::pow(a, 4) / std::pow(kPi, 5) * (odd5 - 2.0 * corr);
}

double torsion_side_profile(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::DegenerateInput, "profile argument must be positive");
    double sum = 0.0;
    int m = 1;
    for (; m * kPi * r / 2.0 <= kTanhCut; m += 2) sum += sq(std::tanh(m * kPi * r / 2.0)) / std::pow(m, 4);
    sum += odd_quartic_tail(m - 2);
    return 8.0 / std::pow(kPi, 4) * sum;
}

double torsion_side_profile_derivative(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error(ErrorKind::DegenerateInput, "profile argument must be positive");
    double sum = 0.0;
    for (int m = 1; m * kPi * r / 2.0 <= kTanhCut; m += 2) {
        const double z = m * kPi * r / 2.0;
        const double ch = std::cosh(z);
        sum += m * kPi * std::tanh(z) / (ch * ch) / std::pow(m, 4);
    }
    return 8.0 / std::pow(kPi, 4) * sum;
}

double torsion_side_energy(double length, double width) {
    if (!(length > 0.0) || !(width > 0.0)) throw Error(ErrorKind::DegenerateInput, "side lengths must be positive");
    return std::pow(length, 3) * torsion_side_profile(width / length);
}

double boundary_energy_torsion_rect(const Rect& rect) {
    validate(rect);
    return 2.0 * torsion_side_energy(rect.b, rect.a) + 2.0 * torsion_side_energy(rect.a, rect.b);
}

double boundary_energy_lambda1_box(const Box& box) {
    validate(box);
    double s = 0.0;
    for (double a : box.sides) s += 2.0 * 2.0 * kPi * kPi / std::pow(a, 3);
    return s;
}

double boundary_energy_lambda1_rect(const Rect& rect) {
    return boundary_energy_lambda1_box(Box{{rect.a, rect.b}});
}

TriangleValues lambda1_triangle_equilateral(int panels) {
    if (panels < 1) throw Error(ErrorKind::DegenerateInput, "panel count must be positive");
    const GaussRule g = gauss_legendre(16);
    const TriangleField field;

    // Rows y = (sqrt3/2) s carry x in [y/sqrt3, 1 - y/sqrt3].
    const double norm = composite(g, panels, [&](double s) {
        const double y = 0.5 * kSqrt3 * s, width = 1.0 - s;
        const double inner = composite(g, panels, [&](double t) { return sq(field.u(0.5 * s + width * t, y)); });
        return 0.5 * kSqrt3 * width * inner;
    });

    const double bottom = composite(g, panels, [&](double t) { return field.grad_sq(t, 0.0); });
    const double right = composite(g, panels, [&](double t) { return field.grad_sq(1.0 - 0.5 * t, 0.5 * kSqrt3 * t); });
    const double left = composite(g, panels, [&](double t) { return field.grad_sq(0.5 * t, 0.5 * kSqrt3 * t); });

    TriangleValues v;
    v.lambda1 = 16.0 * kPi * kPi / 3.0;
    v.l2_norm_sq = norm;
    v.raw_energy = bottom + right + left;
    v.energy = v.raw_energy / norm;
    v.quotient = std::pow(v.lambda1, 1.5) / v.energy;
    v.raw_quotient = std::pow(v.lambda1, 1.5) / v.raw_energy;
    return v;
}

double capacity_ball(double radius) {
    if (!(radius > 0.0)) throw Error(ErrorKind::DegenerateInput, "radius must be positive");
    return 4.0 * kPi * radius;
}

double capacity_prolate_spheroid(const Spheroid& s) {
    validate(s);
    if (s.a == s.b) return capacity_ball(s.a);
    // arccosh(1 + eps) = log1p(eps + sqrt(eps (2 + eps))) keeps b -> a accurate.
    const double eps = (s.a - s.b) / s.b;
    const double acosh = std::log1p(eps + std::sqrt(eps * (2.0 + eps)));
    return 4.0 * kPi * std::sqrt((s.a - s.b) * (s.a + s.b)) / acosh;
}

double surface_area_prolate_spheroid(const Spheroid& s) {
    validate(s);
    const double e = std::sqrt((s.a - s.b) * (s.a + s.b)) / s.a;
    double asin_ratio;
    if (e < 1e-3) {
        const double e2 = e * e;
        asin_ratio = 1.0 + e2 * (1.0 / 6.0 + e2 * (3.0 / 40.0 + e2 * (5.0 / 112.0 + e2 * 35.0 / 1152.0)));
    } else {
        asin_ratio = std::asin(e) / e;
    }
    return 2.0 * kPi * s.b * s.b * (1.0 + s.a / s.b * asin_ratio);
}

QuotientReport isoperimetric_quotient(const std::string& functional, const Body& body) {
    QuotientReport r;
    r.functional = functional;
    r.body = describe(body);
    auto mismatch = [&]() -> QuotientReport {
        throw Error(ErrorKind::DomainMismatch, "functional '" + functional + "' is not available on " + r.body);
    };
    auto finish = [&](double f, double exponent, const char* kind, double denom) {
        r.exponent = exponent;
        r.numerator = std::pow(f, exponent);
        r.denominator_kind = kind;
        r.denominator = denom;
        r.value = r.numerator / denom;
        return r;
    };

    if (functional == "volume") {
        return std::visit(
            overload(
                [&](const Polytope& p) {
                    const int n = p.dim();
                    return finish(p.volume(), (n - 1.0) / n, "surface_area", p.surface_area());
                },
                [&](const Box& b) {
                    validate(b);
                    const std::size_t n = b.sides.size();
                    double vol = 1.0, area = 0.0;
                    for (double s : b.sides) vol *= s;
                    for (double s : b.sides) area += 2.0 * vol / s;
                    return finish(vol, (n - 1.0) / n, "surface_area", area);
                },
                [&](const Rect& q) {
                    validate(q);
                    return finish(q.a * q.b, 0.5, "surface_area", 2.0 * (q.a + q.b));
                },
                [&](const Spheroid& s) {
                    return finish(4.0 / 3.0 * kPi * s.a * s.b * s.b, 2.0 / 3.0, "surface_area",
                                  surface_area_prolate_spheroid(s));
                },
                [&](const Triangle&) { return finish(kSqrt3 / 4.0, 0.5, "surface_area", 3.0); }),
            body);
    }
    if (functional == "lambda1") {
        return std::visit(overload([&](const Box& b) {
                                       return finish(lambda1_box(b), 1.5, "mu_mass", boundary_energy_lambda1_box(b));
                                   },
                                   [&](const Rect& q) {
                                       return finish(lambda1_rect(q), 1.5, "mu_mass", boundary_energy_lambda1_rect(q));
                                   },
                                   [&](const Triangle&) {
                                       const TriangleValues t = lambda1_triangle_equilateral();
                                       return finish(t.lambda1, 1.5, "mu_mass", t.energy);
                                   },
                                   [&](const auto&) { return mismatch(); }),
                          body);
    }
    if (functional == "torsion") {
        if (const Rect* q = std::get_if<Rect>(&body))
            return finish(torsion_rect(*q), 0.75, "mu_mass", boundary_energy_torsion_rect(*q));
        return mismatch();
    }
    if (functional == "capacity") {
        if (const Spheroid* s = std::get_if<Spheroid>(&body))
            return finish(capacity_prolate_spheroid(*s), 2.0, "surface_area", surface_area_prolate_spheroid(*s));
        return mismatch();
    }
    throw Error(ErrorKind::DomainMismatch, "unknown functional '" + functional + "'");
}

} // namespace concavlab
