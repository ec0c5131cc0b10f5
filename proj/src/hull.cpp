#include "hull.hpp"

#include "concavlab/errors.hpp"
#include "concavlab/polytope.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace concavlab::detail {

namespace {

using Eigen::Vector2d;
using Eigen::Vector3d;

// Ties in the farthest-point rule are broken along this direction so that the
// chosen eye point is a vertex of the tied set rather than an edge midpoint.
const Vector3d kTieBreak(1.0, 0.41421356237309515, 0.14159265358979312);

std::uint64_t edge_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}

struct Face {
    std::array<int, 3> v;
    Vector3d n;
    double d = 0.0;
    std::vector<int> outside;
    bool alive = true;
};

class QuickHull {
public:
    QuickHull(const std::vector<Vector3d>& pts, double eps) : p_(pts), eps_(eps) {}

    std::vector<std::array<int, 3>> run() {
        seed();
        std::vector<char> visible;
        std::vector<int> stack;
        for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
            // faces_ grows while we iterate; new faces are revisited in order.
            if (!faces_[fi].alive || faces_[fi].outside.empty()) continue;
            const int eye = pick_eye(faces_[fi]);

            visible.assign(faces_.size(), 0);
            std::vector<int> vis_faces;
            std::vector<std::pair<int, int>> horizon;
            stack.clear();
            stack.push_back(static_cast<int>(fi));
            visible[fi] = 1;
            while (!stack.empty()) {
                const int f = stack.back();
                stack.pop_back();
                vis_faces.push_back(f);
                for (int k = 0; k < 3; ++k) {
                    const int a = faces_[f].v[k], b = faces_[f].v[(k + 1) % 3];
                    const int g = edges_.at(edge_key(b, a));
                    if (visible[g] == 1) continue;
                    if (visible[g] == 0 && dist(faces_[g], p_[eye]) > eps_) {
                        visible[g] = 1;
                        stack.push_back(g);
                    } else {
                        visible[g] = 2;
                    }
                }
            }
            // Horizon edges: edges of visible faces whose twin face is not visible.
            for (int f : vis_faces) {
                for (int k = 0; k < 3; ++k) {
                    const int a = faces_[f].v[k], b = faces_[f].v[(k + 1) % 3];
                    const int g = edges_.at(edge_key(b, a));
                    if (visible[g] != 1) horizon.emplace_back(a, b);
                }
            }

            std::vector<int> orphans;
            for (int f : vis_faces) {
                for (int q : faces_[f].outside)
                    if (q != eye) orphans.push_back(q);
                faces_[f].outside.clear();
                faces_[f].alive = false;
                for (int k = 0; k < 3; ++k) edges_.erase(edge_key(faces_[f].v[k], faces_[f].v[(k + 1) % 3]));
            }

            const std::size_t first_new = faces_.size();
            for (auto [a, b] : horizon) add_face(a, b, eye);
            for (int q : orphans) {
                int best = -1;
                double best_d = eps_;
                for (std::size_t g = first_new; g < faces_.size(); ++g) {
                    const double dq = dist(faces_[g], p_[q]);
                    if (dq > best_d) {
                        best_d = dq;
                        best = static_cast<int>(g);
                    }
                }
                if (best >= 0) faces_[best].outside.push_back(q);
            }
        }

        std::vector<std::array<int, 3>> tris;
        for (const auto& f : faces_)
            if (f.alive) tris.push_back(f.v);
        return tris;
    }

    const std::vector<Face>& faces() const { return faces_; }

private:
    double dist(const Face& f, const Vector3d& x) const { return f.n.dot(x) - f.d; }

    void add_face(int a, int b, int c) {
        Face f;
        f.v = {a, b, c};
        Vector3d n = (p_[b] - p_[a]).cross(p_[c] - p_[a]);
        const double len = n.norm();
        f.n = len > 0 ? Vector3d(n / len) : Vector3d::Zero();
        f.d = f.n.dot(p_[a]);
        const int id = static_cast<int>(faces_.size());
        edges_[edge_key(a, b)] = id;
        edges_[edge_key(b, c)] = id;
        edges_[edge_key(c, a)] = id;
        faces_.push_back(std::move(f));
    }

    int pick_eye(const Face& f) const {
        double best = -1.0;
        for (int q : f.outside) best = std::max(best, dist(f, p_[q]));
        int eye = -1;
        double tie = -std::numeric_limits<double>::infinity();
        for (int q : f.outside) {
            if (dist(f, p_[q]) < best - eps_) continue;
            const double t = kTieBreak.dot(p_[q]);
            if (t > tie) {
                tie = t;
                eye = q;
            }
        }
        return eye;
    }

    void seed() {
        const int n = static_cast<int>(p_.size());
        if (n < 4) throw Error(ErrorKind::DegenerateInput, "need at least 4 points in R^3");
        std::array<int, 6> ext{};
        for (int k = 0; k < 3; ++k) {
            int lo = 0, hi = 0;
            for (int i = 1; i < n; ++i) {
                if (p_[i][k] < p_[lo][k]) lo = i;
                if (p_[i][k] > p_[hi][k]) hi = i;
            }
            ext[2 * k] = lo;
            ext[2 * k + 1] = hi;
        }
        int i0 = ext[0], i1 = ext[1];
        double best = -1;
        for (int a : ext)
            for (int b : ext) {
                const double d = (p_[a] - p_[b]).squaredNorm();
                if (d > best) {
                    best = d;
                    i0 = a;
                    i1 = b;
                }
            }
        if (std::sqrt(best) <= eps_) throw Error(ErrorKind::DegenerateInput, "points coincide");

        const Vector3d dir = (p_[i1] - p_[i0]).normalized();
        int i2 = -1;
        best = eps_;
        for (int i = 0; i < n; ++i) {
            const Vector3d r = p_[i] - p_[i0];
            const double d = (r - r.dot(dir) * dir).norm();
            if (d > best) {
                best = d;
                i2 = i;
            }
        }
        if (i2 < 0) throw Error(ErrorKind::DegenerateInput, "points are collinear");

        const Vector3d pn = (p_[i1] - p_[i0]).cross(p_[i2] - p_[i0]).normalized();
        int i3 = -1;
        best = eps_;
        for (int i = 0; i < n; ++i) {
            const double d = std::abs(pn.dot(p_[i] - p_[i0]));
            if (d > best) {
                best = d;
                i3 = i;
            }
        }
        if (i3 < 0) throw Error(ErrorKind::DegenerateInput, "points are coplanar");

        if (pn.dot(p_[i3] - p_[i0]) > 0) std::swap(i1, i2);
        // Now (i0,i1,i2) is oriented with i3 below it.
        add_face(i0, i1, i2);
        add_face(i0, i3, i1);
        add_face(i1, i3, i2);
        add_face(i2, i3, i0);

        for (int i = 0; i < n; ++i) {
            if (i == i0 || i == i1 || i == i2 || i == i3) continue;
            int bf = -1;
            double bd = eps_;
            for (int f = 0; f < 4; ++f) {
                const double d = dist(faces_[f], p_[i]);
                if (d > bd) {
                    bd = d;
                    bf = f;
                }
            }
            if (bf >= 0) faces_[bf].outside.push_back(i);
        }
    }

    const std::vector<Vector3d>& p_;
    double eps_;
    std::vector<Face> faces_;
    std::unordered_map<std::uint64_t, int> edges_;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

double cross2(const Vector2d& o, const Vector2d& a, const Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Andrew's monotone chain; drops points within eps of a hull edge line.
std::vector<int> monotone_chain(const std::vector<Vector2d>& q, double eps) {
    std::vector<int> idx(q.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return q[a].x() < q[b].x() || (q[a].x() == q[b].x() && q[a].y() < q[b].y());
    });
    if (idx.size() < 3) return idx;
    std::vector<int> h(2 * idx.size());
    std::size_t k = 0;
    auto keep = [&](int i) {
        while (k >= 2) {
            const Vector2d& o = q[h[k - 2]];
            const Vector2d& a = q[h[k - 1]];
            const double base = (a - o).norm();
            // signed distance of q[i] from line (o,a) times base
            const double c = cross2(o, a, q[i]);
            if (c <= eps * std::max(base, (q[i] - o).norm())) --k;
            else break;
        }
        h[k++] = i;
    };
    for (int i : idx) keep(i);
    const std::size_t lower = k + 1;
    for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
        const int i = *it;
        while (k >= lower) {
            const Vector2d& o = q[h[k - 2]];
            const Vector2d& a = q[h[k - 1]];
            const double c = cross2(o, a, q[i]);
            if (c <= eps * std::max((a - o).norm(), (q[i] - o).norm())) --k;
            else break;
        }
        h[k++] = i;
    }
    h.resize(k - 1);
    return h;
}

} // namespace

double polygon_area(const std::vector<Vector3d>& loop, const Vector3d& normal) {
    Vector3d acc = Vector3d::Zero();
    const std::size_t m = loop.size();
    for (std::size_t k = 0; k < m; ++k) acc += loop[k].cross(loop[(k + 1) % m]);
    return 0.5 * acc.dot(normal);
}

std::vector<int> planar_polygon(const std::vector<Vector3d>& pts, const Vector3d& normal, double eps) {
    Vector3d e1 = std::abs(normal.x()) < 0.9 ? Vector3d::UnitX() : Vector3d::UnitY();
    e1 = (e1 - e1.dot(normal) * normal).normalized();
    const Vector3d e2 = normal.cross(e1);
    std::vector<Vector2d> q;
    q.reserve(pts.size());
    for (const auto& p : pts) q.emplace_back(p.dot(e1), p.dot(e2));
    return monotone_chain(q, eps);
}

std::vector<HullFacet> hull_facets_3d(const std::vector<Vector3d>& pts, double eps) {
    QuickHull qh(pts, eps);
    const auto tris = qh.run();
    const int nt = static_cast<int>(tris.size());

    std::unordered_map<std::uint64_t, int> owner;
    std::vector<Vector3d> area_vec(nt);
    std::vector<Vector3d> unit(nt);
    for (int t = 0; t < nt; ++t) {
        const auto& v = tris[t];
        area_vec[t] = (pts[v[1]] - pts[v[0]]).cross(pts[v[2]] - pts[v[0]]);
        const double len = area_vec[t].norm();
        unit[t] = len > 0 ? Vector3d(area_vec[t] / len) : Vector3d::Zero();
        for (int k = 0; k < 3; ++k) owner[edge_key(v[k], v[(k + 1) % 3])] = t;
    }

    // Merge adjacent triangles that are coplanar: normals within the merge
    // angle, or each apex within eps of the other's plane (thin triangles).
    std::vector<int> parent(nt);
    std::iota(parent.begin(), parent.end(), 0);
    const double cos_merge = std::cos(kFacetMergeAngle);
    for (int t = 0; t < nt; ++t) {
        const auto& v = tris[t];
        for (int k = 0; k < 3; ++k) {
            const int a = v[k], b = v[(k + 1) % 3];
            auto it = owner.find(edge_key(b, a));
            if (it == owner.end()) continue;
            const int s = it->second;
            if (s < t) continue;
            bool same = unit[t].dot(unit[s]) >= cos_merge;
            if (!same) {
                const int apex_t = v[(k + 2) % 3];
                int apex_s = -1;
                for (int r = 0; r < 3; ++r)
                    if (tris[s][r] != a && tris[s][r] != b) apex_s = tris[s][r];
                const double ds = std::abs(unit[t].dot(pts[apex_s] - pts[a]));
                const double dt = std::abs(unit[s].dot(pts[apex_t] - pts[a]));
                same = unit[t].dot(unit[s]) > 0 && ds <= eps && dt <= eps;
            }
            if (same) parent[find_root(parent, t)] = find_root(parent, s);
        }
    }

    std::unordered_map<int, std::vector<int>> groups;
    for (int t = 0; t < nt; ++t) groups[find_root(parent, t)].push_back(t);

    std::vector<HullFacet> out;
    out.reserve(groups.size());
    std::vector<int> roots;
    for (auto& [r, _] : groups) roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    for (int r : roots) {
        const auto& members = groups[r];
        Vector3d nsum = Vector3d::Zero();
        std::vector<int> verts;
        for (int t : members) {
            nsum += area_vec[t];
            for (int v : tris[t]) verts.push_back(v);
        }
        if (nsum.norm() == 0.0) continue;
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        const Vector3d n = nsum.normalized();

        std::vector<Vector3d> local;
        local.reserve(verts.size());
        for (int v : verts) local.push_back(pts[v]);
        const auto poly = planar_polygon(local, n, eps);
        if (poly.size() < 3) continue;

        HullFacet f;
        f.normal = n;
        std::vector<Vector3d> loop;
        double off = 0.0;
        for (int k : poly) {
            f.corners.push_back(verts[k]);
            loop.push_back(pts[verts[k]]);
            off += n.dot(pts[verts[k]]);
        }
        f.offset = off / static_cast<double>(poly.size());
        f.area = polygon_area(loop, n);
        if (f.area <= 0.0) continue;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<HullFacet> hull_facets_2d(const std::vector<Vector2d>& pts, double eps) {
    if (pts.size() < 3) throw Error(ErrorKind::DegenerateInput, "need at least 3 points in R^2");
    const auto h = monotone_chain(pts, eps);
    if (h.size() < 3) throw Error(ErrorKind::DegenerateInput, "points are collinear");
    double area2 = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
        const auto& a = pts[h[k]];
        const auto& b = pts[h[(k + 1) % h.size()]];
        area2 += a.x() * b.y() - a.y() * b.x();
    }
    double diam = 0.0;
    for (int i : h)
        for (int j : h) diam = std::max(diam, (pts[i] - pts[j]).norm());
    if (area2 <= 2.0 * eps * diam) throw Error(ErrorKind::DegenerateInput, "points are collinear");

    std::vector<HullFacet> out;
    for (std::size_t k = 0; k < h.size(); ++k) {
        const int a = h[k], b = h[(k + 1) % h.size()];
        const Vector2d d = pts[b] - pts[a];
        HullFacet f;
        f.area = d.norm();
        f.normal = Vector3d(d.y(), -d.x(), 0.0) / f.area;
        f.offset = f.normal.head<2>().dot(pts[a]);
        f.corners = {a, b};
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace concavlab::detail
