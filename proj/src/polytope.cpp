#include "concavlab/polytope.hpp"

#include "concavlab/errors.hpp"
#include "concavlab/quadrature.hpp"
#include "hull.hpp"
#include "lp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

namespace concavlab {

using Eigen::Vector2d;
using Eigen::Vector3d;

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 3) throw Error(ErrorKind::DegenerateInput, "only dimensions 2 and 3 are supported");
}

double point_scale(const Mat& pts) {
    if (pts.cols() == 0) return 1.0;
    const Vec lo = pts.rowwise().minCoeff();
    const Vec hi = pts.rowwise().maxCoeff();
    return std::max((hi - lo).norm(), 1e-300);
}

Vector3d lift(const Vec& v) {
    Vector3d out = Vector3d::Zero();
    out.head(v.size()) = v;
    return out;
}

// Integral of <v, u> over the spherical triangle spanned by unit vectors
// a, b, c, subdividing until every edge is shorter than max_edge radians.
double cone_integral(const Vector3d& v, const Vector3d& a, const Vector3d& b, const Vector3d& c,
                     const GaussRule& g, double max_edge) {
    const double eab = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
    const double ebc = std::acos(std::clamp(b.dot(c), -1.0, 1.0));
    const double eca = std::acos(std::clamp(c.dot(a), -1.0, 1.0));
    if (std::max({eab, ebc, eca}) > max_edge) {
        const Vector3d ab = (a + b).normalized(), bc = (b + c).normalized(), ca = (c + a).normalized();
        return cone_integral(v, a, ab, ca, g, max_edge) + cone_integral(v, ab, b, bc, g, max_edge) +
               cone_integral(v, ca, bc, c, g, max_edge) + cone_integral(v, ab, bc, ca, g, max_edge);
    }
    // Radial projection of the flat triangle: dsigma = (p.w)/|p|^3 ds dt.
    const Vector3d w = (b - a).cross(c - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double s = 0.5 * (g.nodes[i] + 1.0);
        for (std::size_t j = 0; j < g.nodes.size(); ++j) {
            const double t = 0.5 * (g.nodes[j] + 1.0) * (1.0 - s);
            const Vector3d p = a + s * (b - a) + t * (c - a);
            const double r2 = p.squaredNorm();
            sum += 0.25 * g.weights[i] * g.weights[j] * (1.0 - s) * v.dot(p) * p.dot(w) / (r2 * r2);
        }
    }
    return (a + b + c).dot(w) < 0 ? -sum : sum;
}

double segment_distance(const Vector3d& x, const Vector3d& a, const Vector3d& b) {
    const Vector3d d = b - a;
    const double len2 = d.squaredNorm();
    const double t = len2 > 0 ? std::clamp((x - a).dot(d) / len2, 0.0, 1.0) : 0.0;
    return (x - a - t * d).norm();
}

} // namespace

double Polytope::surface_area() const {
    double s = 0.0;
    for (const auto& f : facets_) s += f.area;
    return s;
}

Polytope Polytope::assemble(int dim, Mat vertices, std::vector<Facet> facets) {
    Polytope p;
    p.dim_ = dim;
    p.vertices_ = std::move(vertices);
    p.facets_ = std::move(facets);

    double vol = 0.0;
    for (const auto& f : p.facets_) vol += f.offset * f.area;
    p.volume_ = vol / dim;

    // Centroid by cone decomposition from the first vertex.
    const Vec o = p.vertices_.col(0);
    Vec acc = Vec::Zero(dim);
    double wsum = 0.0;
    for (const auto& f : p.facets_) {
        const auto& lp = f.vertices;
        if (dim == 2) {
            const Vec a = p.vertices_.col(lp[0]) - o, b = p.vertices_.col(lp[1]) - o;
            const double w = 0.5 * std::abs(a.x() * b.y() - a.y() * b.x());
            acc += w * (o + (a + o) + (b + o)) / 3.0;
            wsum += w;
        } else {
            const Vector3d a = p.vertices_.col(lp[0]) - o;
            for (std::size_t k = 1; k + 1 < lp.size(); ++k) {
                const Vector3d b = p.vertices_.col(lp[k]) - o;
                const Vector3d c = p.vertices_.col(lp[k + 1]) - o;
                const double w = std::abs(a.dot(b.cross(c))) / 6.0;
                acc += w * (4.0 * o + a + b + c) / 4.0;
                wsum += w;
            }
        }
    }
    p.centroid_ = wsum > 0 ? Vec(acc / wsum) : o;

    double diam = 0.0;
    for (int i = 0; i < p.vertices_.cols(); ++i)
        for (int j = i + 1; j < p.vertices_.cols(); ++j)
            diam = std::max(diam, (p.vertices_.col(i) - p.vertices_.col(j)).squaredNorm());
    p.diameter_ = std::sqrt(diam);
    return p;
}

Polytope convex_hull(const Mat& points) {
    const int dim = static_cast<int>(points.rows());
    require_dim(dim);
    const double eps = kGeomTol * point_scale(points);
    const int np = static_cast<int>(points.cols());

    std::vector<detail::HullFacet> hf;
    if (dim == 3) {
        std::vector<Vector3d> pts(np);
        for (int i = 0; i < np; ++i) pts[i] = points.col(i);
        hf = detail::hull_facets_3d(pts, eps);
    } else {
        std::vector<Vector2d> pts(np);
        for (int i = 0; i < np; ++i) pts[i] = points.col(i);
        hf = detail::hull_facets_2d(pts, eps);
    }
    if (static_cast<int>(hf.size()) < dim + 1) throw Error(ErrorKind::DegenerateInput, "hull is not full-dimensional");

    std::map<int, int> remap;
    for (const auto& f : hf)
        for (int c : f.corners) remap.emplace(c, 0);
    Mat verts(dim, static_cast<int>(remap.size()));
    int next = 0;
    for (auto& [src, dst] : remap) {
        dst = next;
        verts.col(next++) = points.col(src);
    }
    std::vector<Facet> facets;
    facets.reserve(hf.size());
    for (const auto& f : hf) {
        Facet out;
        out.normal = f.normal.head(dim);
        out.area = f.area;
        double h = -std::numeric_limits<double>::infinity();
        for (int c : f.corners) {
            out.vertices.push_back(remap.at(c));
            h = std::max(h, out.normal.dot(points.col(c)));
        }
        out.offset = h;
        facets.push_back(std::move(out));
    }
    return Polytope::assemble(dim, std::move(verts), std::move(facets));
}

Polytope convex_hull(const std::vector<Vec>& points) {
    if (points.empty()) throw Error(ErrorKind::DegenerateInput, "no points");
    Mat m(points.front().size(), static_cast<int>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) m.col(static_cast<int>(i)) = points[i];
    return convex_hull(m);
}

std::pair<Vec, double> chebyshev_center(const Mat& normals, const Vec& offsets) {
    const int dim = static_cast<int>(normals.rows());
    const int m = static_cast<int>(normals.cols());
    double hmax = 0.0;
    for (int i = 0; i < m; ++i) hmax = std::max(hmax, std::abs(offsets(i)) / normals.col(i).norm());
    const double cap = 1e6 * (1.0 + hmax);

    // Variables (x+, x-, t); maximize t subject to u.x + t <= h and t <= cap.
    Mat A = Mat::Zero(m + 1, 2 * dim + 1);
    Vec b(m + 1);
    for (int i = 0; i < m; ++i) {
        const double len = normals.col(i).norm();
        A.block(i, 0, 1, dim) = normals.col(i).transpose() / len;
        A.block(i, dim, 1, dim) = -normals.col(i).transpose() / len;
        A(i, 2 * dim) = 1.0;
        b(i) = offsets(i) / len;
    }
    A(m, 2 * dim) = 1.0;
    b(m) = cap;
    Vec c = Vec::Zero(2 * dim + 1);
    c(2 * dim) = 1.0;

    const auto res = detail::solve_lp(A, b, c);
    if (res.status == detail::LpStatus::Infeasible) return {Vec::Zero(dim), -1.0};
    if (res.status == detail::LpStatus::Unbounded) throw Error(ErrorKind::Unbounded, "halfspaces do not bound a region");
    const double r = res.x(2 * dim);
    if (r >= 0.5 * cap) throw Error(ErrorKind::Unbounded, "inscribed radius is unbounded");
    return {Vec(res.x.head(dim) - res.x.segment(dim, dim)), r};
}

namespace {

struct ClipVertex {
    Vector3d p;
    int label; // plane carrying the edge that starts here; -1 for the seed square
};

// Polygon of plane i inside all other halfspaces (local coordinates with the
// interior point at the origin). Returns false if the seed square was too small.
bool clip_facet(const Mat& u, const Vec& h, const std::vector<char>& active, int i, double reach,
                std::vector<ClipVertex>& poly) {
    const Vector3d n = u.col(i);
    Vector3d e1 = std::abs(n.x()) < 0.9 ? Vector3d::UnitX() : Vector3d::UnitY();
    e1 = (e1 - e1.dot(n) * n).normalized();
    const Vector3d e2 = n.cross(e1);
    const Vector3d o = h(i) * n;
    poly = {{o + reach * (e1 + e2), -1}, {o + reach * (-e1 + e2), -1}, {o + reach * (-e1 - e2), -1},
            {o + reach * (e1 - e2), -1}};
    std::vector<ClipVertex> out;
    std::vector<double> dist;
    for (int j = 0; j < u.cols() && !poly.empty(); ++j) {
        if (j == i || !active[j]) continue;
        const Vector3d uj = u.col(j);
        dist.resize(poly.size());
        bool any_out = false;
        for (std::size_t k = 0; k < poly.size(); ++k) {
            dist[k] = uj.dot(poly[k].p) - h(j);
            any_out |= dist[k] > 0.0;
        }
        if (!any_out) continue;
        out.clear();
        for (std::size_t k = 0; k < poly.size(); ++k) {
            const std::size_t k1 = (k + 1) % poly.size();
            const double da = dist[k], db = dist[k1];
            if (da <= 0.0) {
                out.push_back(poly[k]);
                if (db > 0.0) out.push_back({poly[k].p + (poly[k1].p - poly[k].p) * (da / (da - db)), j});
            } else if (db < 0.0) {
                out.push_back({poly[k].p + (poly[k1].p - poly[k].p) * (da / (da - db)), poly[k].label});
            }
        }
        poly.swap(out);
        if (poly.size() < 3) poly.clear();
    }
    for (const auto& v : poly)
        if (v.label < 0) return false;
    return true;
}

// Vertex where planes a, b, c meet; falls back to the clipped estimate when
// the system is ill-conditioned.
Vector3d refine_vertex(const Mat& u, const Vec& h, int a, int b, int c, const Vector3d& estimate) {
    Eigen::Matrix3d m;
    m.row(0) = u.col(a).transpose();
    m.row(1) = u.col(b).transpose();
    m.row(2) = u.col(c).transpose();
    const double det = m.determinant();
    if (std::abs(det) < 1e-6) return estimate;
    const Vector3d x = m.partialPivLu().solve(Vector3d(h(a), h(b), h(c)));
    return x.allFinite() ? x : estimate;
}

} // namespace

HalfspaceCell halfspace_cell(const Mat& normals, const Vec& offsets, const Vec& interior) {
    const int dim = static_cast<int>(normals.rows());
    require_dim(dim);
    const int m = static_cast<int>(normals.cols());
    if (m < dim + 1) throw Error(ErrorKind::Unbounded, "fewer than n+1 halfspaces");

    // Unit normals and offsets relative to the interior point.
    Mat u(dim, m);
    Vec h(m);
    for (int i = 0; i < m; ++i) {
        const double len = normals.col(i).norm();
        if (len == 0.0) throw Error(ErrorKind::DegenerateInput, "zero normal");
        u.col(i) = normals.col(i) / len;
        h(i) = offsets(i) / len - u.col(i).dot(interior);
        if (!(h(i) > 0.0)) throw Error(ErrorKind::Empty, "reference point is not interior");
    }
    const double hmax = h.maxCoeff();

    // Parallel duplicates: only the tightest copy can carry a facet.
    std::vector<char> active(m, 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (active[j] && (u.col(i) - u.col(j)).norm() <= kFacetMergeAngle) {
                if (h(i) < h(j)) active[j] = 0;
                else active[i] = 0;
            }

    HalfspaceCell cell;
    cell.input_area.assign(m, 0.0);
    std::vector<Vec> points;      // deduplicated vertices, local coordinates
    std::vector<Facet> facets;
    std::map<std::pair<int, int>, double> ridge_len;
    double merge_tol = 0.0;

    auto vertex_id = [&](const Vec& x) {
        for (std::size_t k = 0; k < points.size(); ++k)
            if ((points[k] - x).norm() <= merge_tol) return static_cast<int>(k);
        points.push_back(x);
        return static_cast<int>(points.size() - 1);
    };

    if (dim == 2) {
        // Each facet is an interval along its line; track the limiting lines.
        std::vector<std::array<double, 2>> range(m);
        std::vector<std::array<int, 2>> limit(m);
        for (int i = 0; i < m; ++i) {
            if (!active[i]) continue;
            const Vector2d ui = u.col(i);
            const Vector2d t(-ui.y(), ui.x());
            double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
            int jlo = -1, jhi = -1;
            for (int j = 0; j < m; ++j) {
                if (j == i || !active[j]) continue;
                const Vector2d uj = u.col(j);
                const double a = uj.dot(t), b = h(j) - h(i) * uj.dot(ui);
                if (a > 0.0 && b / a < hi) {
                    hi = b / a;
                    jhi = j;
                } else if (a < 0.0 && b / a > lo) {
                    lo = b / a;
                    jlo = j;
                } else if (a == 0.0 && b < 0.0) {
                    lo = 1.0;
                    hi = 0.0;
                }
            }
            if (!(hi > lo)) continue;
            if (jlo < 0 || jhi < 0) throw Error(ErrorKind::Unbounded, "halfspaces do not bound a region");
            range[i] = {lo, hi};
            limit[i] = {jlo, jhi};
        }
        merge_tol = 1e-13 * hmax;
        for (int i = 0; i < m; ++i) {
            if (!(range[i][1] > range[i][0])) continue;
            const Vector2d ui = u.col(i);
            const Vector2d t(-ui.y(), ui.x());
            Facet f;
            f.normal = ui;
            f.offset = h(i);
            f.area = range[i][1] - range[i][0];
            if (!(f.area > 0.0)) continue;
            f.vertices = {vertex_id(Vec(h(i) * ui + range[i][0] * t)), vertex_id(Vec(h(i) * ui + range[i][1] * t))};
            for (int s = 0; s < 2; ++s) ridge_len[std::minmax(i, limit[i][s])] = 1.0;
            cell.input_area[i] = f.area;
            cell.facet_source.push_back(i);
            facets.push_back(std::move(f));
        }
    } else {
        std::vector<std::vector<ClipVertex>> polys(m);
        double reach = 10.0 * hmax;
        for (int i = 0; i < m; ++i) {
            while (active[i] && !clip_facet(u, h, active, i, reach, polys[i])) {
                reach *= 100.0;
                if (reach > 1e12 * hmax) throw Error(ErrorKind::Unbounded, "halfspaces do not bound a region");
            }
        }
        double extent = 0.0;
        for (const auto& poly : polys)
            for (const auto& v : poly) extent = std::max(extent, v.p.norm());
        merge_tol = 1e-13 * extent;
        for (int i = 0; i < m; ++i) {
            const auto& poly = polys[i];
            if (poly.size() < 3) continue;
            std::vector<Vector3d> loop;
            for (std::size_t k = 0; k < poly.size(); ++k) {
                const int prev = poly[(k + poly.size() - 1) % poly.size()].label;
                loop.push_back(refine_vertex(u, h, i, prev, poly[k].label, poly[k].p));
            }
            Facet f;
            f.normal = u.col(i);
            f.offset = h(i);
            f.area = detail::polygon_area(loop, f.normal);
            if (!(f.area > 0.0)) continue;
            for (std::size_t k = 0; k < loop.size(); ++k) {
                const int id = vertex_id(loop[k]);
                if (f.vertices.empty() || f.vertices.back() != id) f.vertices.push_back(id);
                const double len = (loop[(k + 1) % loop.size()] - loop[k]).norm();
                auto& r = ridge_len[std::minmax(i, poly[k].label)];
                r = std::max(r, len);
            }
            while (f.vertices.size() > 1 && f.vertices.front() == f.vertices.back()) f.vertices.pop_back();
            if (f.vertices.size() < 3) continue;
            cell.input_area[i] = f.area;
            cell.facet_source.push_back(i);
            facets.push_back(std::move(f));
        }
    }
    if (static_cast<int>(facets.size()) < dim + 1) throw Error(ErrorKind::Empty, "intersection has empty interior");

    for (const auto& [key, len] : ridge_len)
        if (cell.input_area[key.first] > 0.0 && cell.input_area[key.second] > 0.0)
            cell.ridges.push_back({key.first, key.second, len});

    Mat verts(dim, static_cast<int>(points.size()));
    for (std::size_t k = 0; k < points.size(); ++k) verts.col(static_cast<int>(k)) = points[k] + interior;
    for (auto& f : facets) f.offset += f.normal.dot(interior);
    cell.body = Polytope::assemble(dim, std::move(verts), std::move(facets));
    return cell;
}

Polytope halfspace_intersection(const Mat& normals, const Vec& offsets) {
    const auto [center, radius] = chebyshev_center(normals, offsets);
    double scale = 0.0;
    for (int i = 0; i < offsets.size(); ++i)
        scale = std::max(scale, std::abs(offsets(i)) / normals.col(i).norm());
    if (radius <= kGeomTol * std::max(scale, radius)) throw Error(ErrorKind::Empty, "intersection has empty interior");
    return halfspace_cell(normals, offsets, center).body;
}

double volume(const Polytope& p) { return p.volume(); }

double support_function(const Polytope& p, const Vec& direction) {
    return (direction.transpose() * p.vertices()).maxCoeff();
}

double mean_width(const Polytope& p) {
    const int dim = p.dim();
    const int nv = p.num_vertices();
    std::vector<std::vector<int>> incident(nv);
    for (int f = 0; f < p.num_facets(); ++f)
        for (int v : p.facets()[f].vertices) incident[v].push_back(f);

    if (dim == 2) {
        double total = 0.0;
        for (int v = 0; v < nv; ++v) {
            if (incident[v].size() != 2) continue;
            const Vec& n1 = p.facets()[incident[v][0]].normal;
            const Vec& n2 = p.facets()[incident[v][1]].normal;
            const double a1 = std::atan2(n1(1), n1(0));
            double d = std::atan2(n2(1), n2(0)) - a1;
            while (d <= -std::numbers::pi) d += 2 * std::numbers::pi;
            while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
            const double lo = d < 0 ? a1 + d : a1;
            const double hi = lo + std::abs(d);
            const Vec x = p.vertex(v);
            total += x(0) * (std::sin(hi) - std::sin(lo)) + x(1) * (std::cos(lo) - std::cos(hi));
        }
        return total / std::numbers::pi;
    }

    const GaussRule g = gauss_legendre(10);
    constexpr double kMaxEdge = 0.15;
    double total = 0.0;
    for (int v = 0; v < nv; ++v) {
        const auto& inc = incident[v];
        if (inc.size() < 3) continue;
        Vector3d c = Vector3d::Zero();
        for (int f : inc) c += Vector3d(p.facets()[f].normal);
        c.normalize();
        Vector3d e1 = std::abs(c.x()) < 0.9 ? Vector3d::UnitX() : Vector3d::UnitY();
        e1 = (e1 - e1.dot(c) * c).normalized();
        const Vector3d e2 = c.cross(e1);
        std::vector<std::pair<double, Vector3d>> ring;
        for (int f : inc) {
            const Vector3d n = p.facets()[f].normal;
            ring.emplace_back(std::atan2(n.dot(e2), n.dot(e1)), n);
        }
        std::sort(ring.begin(), ring.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        const Vector3d x = p.vertex(v);
        for (std::size_t k = 0; k < ring.size(); ++k)
            total += cone_integral(x, c, ring[k].second, ring[(k + 1) % ring.size()].second, g, kMaxEdge);
    }
    return total / (2.0 * std::numbers::pi);
}

double mean_width_edges(const Polytope& p) {
    if (p.dim() != 3) throw Error(ErrorKind::DegenerateInput, "edge formula needs n = 3");
    std::map<std::pair<int, int>, std::vector<int>> owners;
    for (int f = 0; f < p.num_facets(); ++f) {
        const auto& loop = p.facets()[f].vertices;
        for (std::size_t k = 0; k < loop.size(); ++k)
            owners[std::minmax(loop[k], loop[(k + 1) % loop.size()])].push_back(f);
    }
    double total = 0.0;
    for (const auto& [edge, fs] : owners) {
        if (fs.size() != 2) continue;
        const Vector3d a = p.facets()[fs[0]].normal, b = p.facets()[fs[1]].normal;
        const double theta = std::atan2(a.cross(b).norm(), a.dot(b));
        total += (p.vertex(edge.first) - p.vertex(edge.second)).norm() * theta;
    }
    return total / (4.0 * std::numbers::pi);
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DegenerateInput, "dimension mismatch");
    Mat pts(a.dim(), a.num_vertices() * b.num_vertices());
    int k = 0;
    for (int i = 0; i < a.num_vertices(); ++i)
        for (int j = 0; j < b.num_vertices(); ++j) pts.col(k++) = a.vertices().col(i) + b.vertices().col(j);
    return convex_hull(pts);
}

Polytope intersect(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DegenerateInput, "dimension mismatch");
    const int m = a.num_facets() + b.num_facets();
    Mat n(a.dim(), m);
    Vec h(m);
    int k = 0;
    for (const auto* p : {&a, &b})
        for (const auto& f : p->facets()) {
            n.col(k) = f.normal;
            h(k++) = f.offset;
        }
    return halfspace_intersection(n, h);
}

double intersection_volume(const Polytope& a, const Polytope& b) {
    try {
        return intersect(a, b).volume();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Empty) return 0.0;
        throw;
    }
}

double distance_to(const Polytope& p, const Vec& x) {
    bool inside = true;
    for (const auto& f : p.facets())
        if (f.normal.dot(x) > f.offset) inside = false;
    if (inside) return 0.0;

    const Vector3d q = lift(x);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : p.facets()) {
        const double s = f.normal.dot(x) - f.offset;
        if (s <= 0.0) continue;
        const auto& loop = f.vertices;
        if (p.dim() == 2) {
            best = std::min(best, segment_distance(q, lift(p.vertex(loop[0])), lift(p.vertex(loop[1]))));
            continue;
        }
        const Vector3d n = f.normal;
        const Vector3d proj = q - s * n;
        bool in_poly = true;
        for (std::size_t k = 0; k < loop.size(); ++k) {
            const Vector3d a = p.vertex(loop[k]), b = p.vertex(loop[(k + 1) % loop.size()]);
            if ((b - a).cross(proj - a).dot(n) < 0.0) {
                in_poly = false;
                break;
            }
        }
        if (in_poly) {
            best = std::min(best, s);
            continue;
        }
        for (std::size_t k = 0; k < loop.size(); ++k)
            best = std::min(best, segment_distance(q, p.vertex(loop[k]), p.vertex(loop[(k + 1) % loop.size()])));
    }
    return best;
}

double hausdorff_distance(const Polytope& a, const Polytope& b) {
    double d = 0.0;
    for (int i = 0; i < a.num_vertices(); ++i) d = std::max(d, distance_to(b, a.vertex(i)));
    for (int i = 0; i < b.num_vertices(); ++i) d = std::max(d, distance_to(a, b.vertex(i)));
    return d;
}

Polytope translate(const Polytope& p, const Vec& t) {
    Mat v = p.vertices().colwise() + t;
    auto facets = p.facets();
    for (auto& f : facets) f.offset += f.normal.dot(t);
    return Polytope::assemble(p.dim(), std::move(v), std::move(facets));
}

Polytope dilate(const Polytope& p, double s) {
    if (!(s > 0.0)) throw Error(ErrorKind::DegenerateInput, "dilation factor must be positive");
    Mat v = p.vertices() * s;
    auto facets = p.facets();
    const double area_scale = std::pow(s, p.dim() - 1);
    for (auto& f : facets) {
        f.offset *= s;
        f.area *= area_scale;
    }
    return Polytope::assemble(p.dim(), std::move(v), std::move(facets));
}

Polytope centered(const Polytope& p) { return translate(p, -p.centroid()); }

Polytope box_polytope(const std::vector<double>& sides) {
    const int dim = static_cast<int>(sides.size());
    require_dim(dim);
    for (double s : sides)
        if (!(s > 0.0)) throw Error(ErrorKind::DegenerateInput, "box sides must be positive");
    Mat pts(dim, 1 << dim);
    for (int mask = 0; mask < (1 << dim); ++mask)
        for (int k = 0; k < dim; ++k) pts(k, mask) = ((mask >> k) & 1 ? 0.5 : -0.5) * sides[k];
    return convex_hull(pts);
}

Polytope random_polytope(int dim, int points, std::uint64_t seed) {
    require_dim(dim);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat pts(dim, points);
    for (int i = 0; i < points; ++i) {
        Vec x(dim);
        do {
            for (int k = 0; k < dim; ++k) x(k) = normal(rng);
        } while (x.norm() < 1e-8);
        pts.col(i) = x.normalized();
    }
    return convex_hull(pts);
}

Polytope random_polytope(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> count(dim + 2, 30);
    return random_polytope(dim, count(rng), seed);
}

} // namespace concavlab
