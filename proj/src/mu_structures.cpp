#include "concavlab/mu_structures.hpp"

#include "concavlab/errors.hpp"
#include "concavlab/io.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

namespace concavlab {

namespace {

constexpr double kPi = std::numbers::pi;

DirectionalMeasure axis_measure(const std::vector<double>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<Atom> atoms;
    for (int i = 0; i < n; ++i)
        for (double sign : {1.0, -1.0}) {
            Vec d = Vec::Zero(n);
            d(i) = sign;
            atoms.push_back({d, w[i]});
        }
    return DirectionalMeasure(n, std::move(atoms));
}

// Weight per axis of a measure carried by ±e_i with symmetric weights.
std::vector<double> axis_weights(const DirectionalMeasure& m) {
    const int n = m.dim();
    if (m.size() != 2 * n) throw Error(ErrorKind::UnsupportedSupport, "expected one atom on each of ±e_i");
    std::vector<double> plus(n, -1.0), minus(n, -1.0);
    for (const auto& a : m.atoms()) {
        Eigen::Index k;
        a.dir.cwiseAbs().maxCoeff(&k);
        Vec e = Vec::Zero(n);
        e(k) = a.dir(k) > 0 ? 1.0 : -1.0;
        if ((a.dir - e).norm() > kFacetMergeAngle) throw Error(ErrorKind::UnsupportedSupport, "atom off the coordinate axes");
        (a.dir(k) > 0 ? plus : minus)[k] = a.weight;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        if (plus[i] < 0 || minus[i] < 0) throw Error(ErrorKind::UnsupportedSupport, "missing opposite atom");
        if (std::abs(plus[i] - minus[i]) > 1e-10 * std::max(plus[i], minus[i]))
            throw Error(ErrorKind::UnsupportedSupport, "opposite atoms carry different weights");
        w[i] = 0.5 * (plus[i] + minus[i]);
    }
    return w;
}

std::vector<double> box_face_areas(const Box& b) {
    validate(b);
    std::vector<double> w(b.sides.size());
    double vol = 1.0;
    for (double s : b.sides) vol *= s;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = vol / b.sides[i];
    return w;
}

const Box& as_box(const Body& body) {
    if (const auto* b = std::get_if<Box>(&body)) return *b;
    throw Error(ErrorKind::DomainMismatch, "structure lambda1_box needs a box, got " + describe(body));
}

const Rect& as_rect(const Body& body) {
    if (const auto* r = std::get_if<Rect>(&body)) return *r;
    throw Error(ErrorKind::DomainMismatch, "structure torsion_rect needs a rectangle, got " + describe(body));
}

Box scaled_box(const Box& b, double f) {
    Box out = b;
    for (double& s : out.sides) s *= f;
    return out;
}

// Residual of log side energies at (x, y) = (log a, log b).
Eigen::Vector2d torsion_residual(double x, double y, double lw1, double lw2) {
    const double rho = std::exp(x - y);
    return {3.0 * y + std::log(torsion_side_profile(rho)) - lw1, 3.0 * x + std::log(torsion_side_profile(1.0 / rho)) - lw2};
}

double log_slope(double r) { return r * torsion_side_profile_derivative(r) / torsion_side_profile(r); }

} // namespace

Structure parse_structure(const std::string& name) {
    if (name == "volume") return Structure::Volume;
    if (name == "lambda1_box") return Structure::Lambda1Box;
    if (name == "torsion_rect") return Structure::TorsionRect;
    throw Error(ErrorKind::Parse, "unknown structure '" + name + "'");
}

std::string to_string(Structure s) {
    switch (s) {
    case Structure::Volume: return "volume";
    case Structure::Lambda1Box: return "lambda1_box";
    case Structure::TorsionRect: return "torsion_rect";
    }
    return "?";
}

double alpha(Structure s, int dim) {
    switch (s) {
    case Structure::Volume: return dim;
    case Structure::Lambda1Box: return -2.0;
    case Structure::TorsionRect: return dim + 2.0;
    }
    return 0.0;
}

int body_dim(Structure s, const Body& body) {
    switch (s) {
    case Structure::Volume:
        if (const auto* p = std::get_if<Polytope>(&body)) return p->dim();
        if (const auto* b = std::get_if<Box>(&body)) return static_cast<int>(b->sides.size());
        throw Error(ErrorKind::DomainMismatch, "structure volume needs a polytope or box, got " + describe(body));
    case Structure::Lambda1Box: return static_cast<int>(as_box(body).sides.size());
    case Structure::TorsionRect: as_rect(body); return 2;
    }
    return 0;
}

double functional_value(Structure s, const Body& body) {
    switch (s) {
    case Structure::Volume:
        if (const auto* p = std::get_if<Polytope>(&body)) return p->volume();
        {
            body_dim(s, body);
            double v = 1.0;
            for (double x : std::get<Box>(body).sides) v *= x;
            return v;
        }
    case Structure::Lambda1Box: return lambda1_box(as_box(body));
    case Structure::TorsionRect: return torsion_rect(as_rect(body));
    }
    return 0.0;
}

DirectionalMeasure mu_measure(Structure s, const Body& body) {
    switch (s) {
    case Structure::Volume:
        if (const auto* p = std::get_if<Polytope>(&body)) return surface_area_measure(*p);
        body_dim(s, body);
        return axis_measure(box_face_areas(std::get<Box>(body)));
    case Structure::Lambda1Box: {
        const Box& b = as_box(body);
        validate(b);
        std::vector<double> w;
        for (double a : b.sides) w.push_back(2.0 * kPi * kPi / (a * a * a));
        return axis_measure(w);
    }
    case Structure::TorsionRect: {
        const Rect& r = as_rect(body);
        validate(r);
        return axis_measure({torsion_side_energy(r.b, r.a), torsion_side_energy(r.a, r.b)});
    }
    }
    throw Error(ErrorKind::DomainMismatch, "unknown structure");
}

Rect torsion_rect_from_energies(double w1, double w2) {
    if (!(w1 > 0.0) || !(w2 > 0.0)) throw Error(ErrorKind::DegenerateInput, "side energies must be positive");
    const double lw1 = std::log(w1), lw2 = std::log(w2);
    // Start from the square with the geometric-mean energy.
    double x = (0.5 * (lw1 + lw2) - std::log(torsion_side_profile(1.0))) / 3.0, y = x;
    Eigen::Vector2d f = torsion_residual(x, y, lw1, lw2);
    for (int it = 0; it < 200 && f.cwiseAbs().maxCoeff() > 1e-14; ++it) {
        const double rho = std::exp(x - y);
        const double s1 = log_slope(rho), s2 = log_slope(1.0 / rho);
        Eigen::Matrix2d j;
        j << s1, 3.0 - s1, 3.0 - s2, s2;
        Eigen::Vector2d d = j.partialPivLu().solve(-f);
        const double big = d.cwiseAbs().maxCoeff();
        if (big > 2.0) d *= 2.0 / big;
        double t = 1.0;
        bool moved = false;
        for (int k = 0; k < 40; ++k, t *= 0.5) {
            const Eigen::Vector2d g = torsion_residual(x + t * d(0), y + t * d(1), lw1, lw2);
            if (g.norm() < f.norm()) {
                x += t * d(0);
                y += t * d(1);
                f = g;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (f.cwiseAbs().maxCoeff() > 1e-11)
        throw Error(ErrorKind::NoConvergence, "no rectangle matches the side energies (log residual " +
                                                  std::to_string(f.cwiseAbs().maxCoeff()) + ")");
    return Rect{std::exp(x), std::exp(y)};
}

Body mu_reconstruct(Structure s, const DirectionalMeasure& m, const SolverConfig& cfg) {
    switch (s) {
    case Structure::Volume: return solve_minkowski(m, cfg);
    case Structure::Lambda1Box: {
        Box b;
        for (double w : axis_weights(m)) b.sides.push_back(std::cbrt(2.0 * kPi * kPi / w));
        return b;
    }
    case Structure::TorsionRect: {
        if (m.dim() != 2) throw Error(ErrorKind::UnsupportedSupport, "torsion_rect measures live in the plane");
        const auto w = axis_weights(m);
        return torsion_rect_from_energies(w[0], w[1]);
    }
    }
    throw Error(ErrorKind::DomainMismatch, "unknown structure");
}

Body mu_sum(Structure s, const Body& k, const Body& l, const SolverConfig& cfg) {
    if (body_dim(s, k) != body_dim(s, l)) throw Error(ErrorKind::DomainMismatch, "bodies have different dimensions");
    return mu_reconstruct(s, mu_measure(s, k) + mu_measure(s, l), cfg);
}

Body mu_scale(Structure s, double t, const Body& k) {
    if (!(t > 0.0)) throw Error(ErrorKind::DegenerateInput, "scale must be positive");
    const int n = body_dim(s, k);
    const double f = std::pow(t, 1.0 / (alpha(s, n) - 1.0));
    if (const auto* p = std::get_if<Polytope>(&k)) return dilate(*p, f);
    if (const auto* b = std::get_if<Box>(&k)) return scaled_box(*b, f);
    const Rect& r = std::get<Rect>(k);
    return Rect{r.a * f, r.b * f};
}

DeficitReport mu_concavity_deficit(Structure s, const Body& k, const Body& l, const SolverConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = body_dim(s, k);
    const double e = 1.0 - 1.0 / alpha(s, n);
    const Body sum = mu_sum(s, k, l, cfg);
    const double lhs = std::pow(functional_value(s, sum), e);
    const double rhs = std::pow(functional_value(s, k), e) + std::pow(functional_value(s, l), e);
    DeficitReport r = make_report("mu-concavity", to_string(s), {describe(k), describe(l)}, e, lhs, rhs);
    r.witness = {{"structure", to_string(s)},
                 {"bodies", {body_to_json(k), body_to_json(l)}},
                 {"sum", body_to_json(sum)}};
    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

bool monotonicity_check(Structure s, const Body& k, const Body& l) {
    const DirectionalMeasure mk = mu_measure(s, k), ml = mu_measure(s, l);
    if (mk.dim() != ml.dim() || mk.size() != ml.size())
        throw Error(ErrorKind::NotComparable, "measures have different supports");
    bool k_below = true, l_below = true;
    for (const auto& a : mk.atoms()) {
        const int j = ml.find(a.dir);
        if (j < 0) throw Error(ErrorKind::NotComparable, "measures have different supports");
        const double b = ml.atoms()[j].weight;
        k_below = k_below && a.weight <= b;
        l_below = l_below && b <= a.weight;
    }
    const double fk = functional_value(s, k), fl = functional_value(s, l);
    if (k_below) return fk <= fl + 1e-12 * std::abs(fl);
    if (l_below) return fl <= fk + 1e-12 * std::abs(fk);
    throw Error(ErrorKind::NotComparable, "measures are not ordered atomwise");
}

} // namespace concavlab
