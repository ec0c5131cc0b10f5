#include "concavlab/reconstruction.hpp"

#include "concavlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

namespace concavlab {

namespace {

constexpr double kPhiNoise = 1e-10;

struct State {
    Vec h;
    HalfspaceCell cell;
    double volume = 0.0;
    double phi = 0.0;
};

class MinkowskiSolver {
public:
    MinkowskiSolver(const Mat& normals, const Vec& f, const SolverConfig& cfg)
        : xi_(normals), f_(f), cfg_(cfg), dim_(static_cast<int>(normals.rows())), m_(static_cast<int>(f.size())) {
        // Orthonormal basis of the translation directions h -> h + xi^T t.
        Eigen::HouseholderQR<Mat> qr(xi_.transpose());
        q_ = qr.householderQ() * Mat::Identity(m_, dim_);
    }

    Vec solve(SolverDiagnostics& diag) {
        auto cur = evaluate(Vec::Ones(m_));
        if (!cur) throw Error(ErrorKind::NoConvergence, "initial cell is degenerate");
        State s = recenter(*cur);
        double err = area_error(s);
        int it = 0;
        for (; it < cfg_.max_iter && err > cfg_.area_tol; ++it) {
            const Vec g = gradient(s);
            const Vec pg = g - q_ * (q_.transpose() * g);
            std::optional<State> next = newton_step(s, pg, g);
            if (!next) next = gradient_step(s, pg, g);
            if (!next) break;
            s = recenter(*next);
            err = area_error(s);
        }
        diag.iters = it;
        diag.max_rel_area_err = err;
        if (err > cfg_.area_tol) {
            std::ostringstream os;
            os << "relative area error " << err << " after " << it << " iterations";
            throw Error(ErrorKind::NoConvergence, os.str());
        }
        best_ = s;
        return s.h;
    }

    const State& best() const { return best_; }

private:
    std::optional<State> evaluate(const Vec& h) const {
        if ((h.array() <= 0.0).any()) return std::nullopt;
        State s;
        s.h = h;
        try {
            s.cell = halfspace_cell(xi_, h, Vec::Zero(dim_));
        } catch (const Error&) {
            return std::nullopt;
        }
        s.volume = s.cell.body.volume();
        if (!(s.volume > 0.0)) return std::nullopt;
        double total = 0.0;
        for (double a : s.cell.input_area) total += a;
        for (double a : s.cell.input_area)
            if (a < 1e-14 * total) return std::nullopt;
        s.phi = f_.dot(h) - std::log(s.volume);
        return s;
    }

    State recenter(const State& s) const {
        const Vec c = s.cell.body.centroid();
        const Vec h = s.h - xi_.transpose() * c;
        auto moved = evaluate(h);
        return moved ? *moved : s;
    }

    Vec areas(const State& s) const { return Eigen::Map<const Vec>(s.cell.input_area.data(), m_); }

    Vec gradient(const State& s) const { return f_ - areas(s) / s.volume; }

    double reduced_norm(const State& s) const {
        const Vec g = gradient(s);
        return (g - q_ * (q_.transpose() * g)).norm();
    }

    double area_error(const State& s) const {
        const Vec a = areas(s) / s.volume;
        return ((a - f_).array().abs() / f_.array()).maxCoeff();
    }

    Mat hessian(const State& s) const {
        Mat hv = Mat::Zero(m_, m_);
        for (const auto& r : s.cell.ridges) {
            const double c = xi_.col(r.i).dot(xi_.col(r.j));
            const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
            if (sn <= 0.0) continue;
            hv(r.i, r.j) += r.measure / sn;
            hv(r.j, r.i) += r.measure / sn;
            hv(r.i, r.i) -= r.measure * c / sn;
            hv(r.j, r.j) -= r.measure * c / sn;
        }
        const Vec a = areas(s);
        return -hv / s.volume + a * a.transpose() / (s.volume * s.volume);
    }

    std::optional<State> line_search(const State& s, const Vec& d, const Vec& g, int halvings) const {
        const double slope = g.dot(d);
        if (!(slope < 0.0)) return std::nullopt;
        double t = 1.0;
        for (int k = 0; k <= halvings; ++k, t *= 0.5) {
            auto trial = evaluate(s.h + t * d);
            if (!trial) continue;
            if (trial->phi <= s.phi + cfg_.armijo * t * slope) return trial;
            // Below the rounding floor of phi, fall back to the reduced
            // gradient norm as the merit function.
            if (-t * slope <= kPhiNoise * (1.0 + std::abs(s.phi)) && reduced_norm(*trial) < reduced_norm(s))
                return trial;
        }
        return std::nullopt;
    }

    std::optional<State> newton_step(const State& s, const Vec& pg, const Vec& g) const {
        Mat h = hessian(s);
        const double scale = std::max(h.diagonal().cwiseAbs().maxCoeff(), 1e-300);
        h += scale * q_ * q_.transpose();
        double shift = 0.0;
        for (int attempt = 0; attempt < 8; ++attempt) {
            Eigen::LLT<Mat> llt(h + shift * Mat::Identity(m_, m_));
            if (llt.info() == Eigen::Success) {
                Vec d = llt.solve(-pg);
                d -= q_ * (q_.transpose() * d);
                return line_search(s, d, g, cfg_.max_halvings);
            }
            shift = shift == 0.0 ? 1e-10 * scale : 100.0 * shift;
        }
        return std::nullopt;
    }

    std::optional<State> gradient_step(const State& s, const Vec& pg, const Vec& g) const {
        // Scale the step so the largest offset change is a tenth of the
        // smallest offset.
        const double norm = pg.cwiseAbs().maxCoeff();
        if (!(norm > 0.0)) return std::nullopt;
        const Vec d = -pg * (0.1 * s.h.minCoeff() / norm);
        return line_search(s, d, g, 60);
    }

    Mat xi_;
    Vec f_;
    SolverConfig cfg_;
    int dim_, m_;
    Mat q_;
    State best_;
};

} // namespace

Polytope solve_minkowski(const DirectionalMeasure& m, const SolverConfig& cfg, SolverDiagnostics* diag) {
    if (!(cfg.area_tol > 0.0) || cfg.max_iter < 1) throw Error(ErrorKind::DegenerateInput, "invalid solver configuration");
    if (!m.is_alexandrov()) throw Error(ErrorKind::NotAlexandrov, "measure is not an Alexandrov measure");
    const int dim = m.dim();
    if (dim != 2 && dim != 3) throw Error(ErrorKind::DegenerateInput, "only dimensions 2 and 3 are supported");

    const double total = m.total();
    std::vector<int> keep;
    for (int i = 0; i < m.size(); ++i)
        if (m.atoms()[i].weight >= 1e-12 * total) keep.push_back(i);
    const int k = static_cast<int>(keep.size());
    Mat xi(dim, k);
    Vec f(k);
    for (int i = 0; i < k; ++i) {
        xi.col(i) = m.atoms()[keep[i]].dir;
        f(i) = m.atoms()[keep[i]].weight;
    }
    // Enforce the closure condition exactly with a minimum-norm correction.
    const Vec bary = xi * f;
    const Vec corr = xi.transpose() * (xi * xi.transpose()).ldlt().solve(bary);
    Vec fc = f - corr;
    if ((fc.array() <= 0.0).any()) throw Error(ErrorKind::NotAlexandrov, "closure correction made a weight negative");
    const double mass = fc.sum();
    fc /= mass;

    SolverDiagnostics local;
    MinkowskiSolver solver(xi, fc, cfg);
    solver.solve(local);
    const State& s = solver.best();

    for (int i = 0; i < k; ++i)
        if (s.cell.input_area[i] < cfg.area_tol * s.cell.body.surface_area())
            throw Error(ErrorKind::FacetVanished, "facet area underflow at the solution");

    const double scale = std::pow(mass / s.volume, 1.0 / (dim - 1));
    Polytope out = centered(dilate(s.cell.body, scale));

    double err = 0.0;
    for (int i = 0; i < k; ++i) {
        const double a = s.cell.input_area[i] * std::pow(scale, dim - 1);
        err = std::max(err, std::abs(a - f(i)) / f(i));
    }
    local.max_rel_area_err = err;
    if (diag) *diag = local;
    return out;
}

Polytope blaschke_sum(const Polytope& k, const Polytope& l, const SolverConfig& cfg) {
    if (k.dim() != l.dim()) throw Error(ErrorKind::DegenerateInput, "dimension mismatch");
    return solve_minkowski(surface_area_measure(k) + surface_area_measure(l), cfg);
}

Box blaschke_sum_boxes(const Box& a, const Box& b) {
    validate(a);
    validate(b);
    const std::size_t n = a.sides.size();
    if (b.sides.size() != n || n < 2) throw Error(ErrorKind::DegenerateInput, "box dimension mismatch");
    auto face = [&](const Box& box, std::size_t i) {
        double p = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) p *= box.sides[j];
        return p;
    };
    // A_i = P / x_i with P = prod x_j, so prod A_i = P^{n-1}. Work in logs.
    std::vector<double> log_area(n);
    double log_prod = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        log_area[i] = std::log(face(a, i) + face(b, i));
        log_prod += log_area[i];
    }
    log_prod /= static_cast<double>(n - 1);
    Box out;
    for (std::size_t i = 0; i < n; ++i) out.sides.push_back(std::exp(log_prod - log_area[i]));
    return out;
}

Polytope blaschke_scale(double t, const Polytope& k) {
    if (!(t > 0.0)) throw Error(ErrorKind::DegenerateInput, "scale must be positive");
    return dilate(k, std::pow(t, 1.0 / (k.dim() - 1)));
}

bool is_indecomposable(const DirectionalMeasure& m) {
    if (!m.is_alexandrov()) throw Error(ErrorKind::NotAlexandrov, "measure is not an Alexandrov measure");
    return m.size() == m.dim() + 1;
}

std::pair<DirectionalMeasure, DirectionalMeasure> decompose(const DirectionalMeasure& m) {
    if (is_indecomposable(m)) throw Error(ErrorKind::Indecomposable, "a simplex measure has no nontrivial splitting");
    const int n = m.dim();
    const int k = n + 2;

    // Use the n+2 heaviest atoms; any n+2 columns of an n-row matrix leave a
    // kernel of dimension at least 2, so a direction orthogonal to 1 exists.
    std::vector<int> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m.atoms()[a].weight > m.atoms()[b].weight; });
    order.resize(k);

    Mat a(n + 1, k);
    for (int j = 0; j < k; ++j) {
        a.block(0, j, n, 1) = m.atoms()[order[j]].weight * m.atoms()[order[j]].dir;
        a(n, j) = 1.0;
    }
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
    const Vec kernel = svd.matrixV().col(k - 1);
    const double peak = kernel.cwiseAbs().maxCoeff();
    const Vec gamma_sel = Vec::Constant(k, 0.5) + (0.4 / peak) * kernel;

    Vec gamma = Vec::Constant(m.size(), 0.5);
    for (int j = 0; j < k; ++j) gamma(order[j]) = gamma_sel(j);

    std::vector<Atom> first, second;
    for (int i = 0; i < m.size(); ++i) {
        const auto& at = m.atoms()[i];
        first.push_back({at.dir, gamma(i) * at.weight});
        second.push_back({at.dir, at.weight - gamma(i) * at.weight});
    }
    return {DirectionalMeasure(n, std::move(first)), DirectionalMeasure(n, std::move(second))};
}

DecompositionCheck check_decomposition(const DirectionalMeasure& m, const SolverConfig& cfg) {
    const auto [a, b] = decompose(m);
    DecompositionCheck out;
    out.atoms = m.size();
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Atom& at : m.atoms()) {
        const int ia = a.find(at.dir), ib = b.find(at.dir);
        const double wa = ia < 0 ? 0.0 : a.atoms()[ia].weight, wb = ib < 0 ? 0.0 : b.atoms()[ib].weight;
        out.sum_error = std::max(out.sum_error, std::abs(wa + wb - at.weight));
        lo = std::min(lo, wa / at.weight);
        hi = std::max(hi, wa / at.weight);
    }
    out.ratio_spread = hi - lo;
    out.alexandrov = a.is_alexandrov() && b.is_alexandrov();
    SolverDiagnostics da, db;
    out.volume_a = solve_minkowski(a, cfg, &da).volume();
    out.volume_b = solve_minkowski(b, cfg, &db).volume();
    out.area_error_a = da.max_rel_area_err;
    out.area_error_b = db.max_rel_area_err;
    return out;
}

} // namespace concavlab
