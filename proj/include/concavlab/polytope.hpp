#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace concavlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Relative tolerance on geometric predicates; absolute thresholds are this
// times the diameter of the body in question.
inline constexpr double kGeomTol = 1e-9;
// Facet normals closer than this (radians) describe the same facet.
inline constexpr double kFacetMergeAngle = 1e-8;

struct Facet {
    Vec normal;               // unit outward normal
    double offset = 0.0;      // support value h(P)(normal)
    double area = 0.0;        // (n-1)-dimensional measure
    std::vector<int> vertices; // n=3: polygon loop, counter-clockwise seen from outside; n=2: two endpoints
};

/// Bounded convex polytope with nonempty interior, n = 2 or 3.
///
/// Holds both descriptions: the vertex set (one column per vertex) and the
/// facet list. Instances are immutable; every constructor path goes through
/// the hull or halfspace routines below, which keep the two descriptions
/// consistent.
class Polytope {
public:
    Polytope() = default;

    int dim() const { return dim_; }
    const Mat& vertices() const { return vertices_; }
    Vec vertex(int i) const { return vertices_.col(i); }
    int num_vertices() const { return static_cast<int>(vertices_.cols()); }
    const std::vector<Facet>& facets() const { return facets_; }
    int num_facets() const { return static_cast<int>(facets_.size()); }
    const Vec& centroid() const { return centroid_; }
    double volume() const { return volume_; }
    double diameter() const { return diameter_; }
    double surface_area() const;

    // Assembles a polytope from vertices and facets that are already
    // consistent; computes volume, centroid and diameter.
    static Polytope assemble(int dim, Mat vertices, std::vector<Facet> facets);

private:
    int dim_ = 0;
    Mat vertices_;
    std::vector<Facet> facets_;
    Vec centroid_;
    double volume_ = 0.0;
    double diameter_ = 0.0;
};

/// Result of a halfspace intersection that remembers which input halfspace
/// produced each facet. Used by the Minkowski solver.
struct HalfspaceCell {
    Polytope body;
    std::vector<int> facet_source;       // body facet -> input halfspace index
    std::vector<double> input_area;      // input halfspace -> facet area (0 if redundant)
    struct Ridge {
        int i, j;                        // input halfspace indices
        double measure;                  // edge length (n=3) or 1 (n=2)
    };
    std::vector<Ridge> ridges;
};

Polytope convex_hull(const std::vector<Vec>& points);
Polytope convex_hull(const Mat& points); // columns are points

/// Vertex enumeration of {x : normals.col(i) . x <= offsets(i)}.
/// Throws Error{Unbounded} or Error{Empty}.
Polytope halfspace_intersection(const Mat& normals, const Vec& offsets);

/// Same, with a known strictly interior point; skips the Chebyshev LP.
HalfspaceCell halfspace_cell(const Mat& normals, const Vec& offsets, const Vec& interior);

/// Chebyshev center of {x : u_i . x <= h_i} for unit u_i. Returns the center
/// and inscribed radius; radius <= 0 means the set has empty interior.
/// Throws Error{Unbounded} when the inscribed radius is unbounded.
std::pair<Vec, double> chebyshev_center(const Mat& normals, const Vec& offsets);

double volume(const Polytope& p);
double support_function(const Polytope& p, const Vec& direction);

/// Mean width (2/|S^{n-1}|) * integral of h over the sphere.
/// n=2: exact integration over vertex normal cones (equals perimeter/pi).
/// n=3: each vertex normal cone is split into spherical triangles and the
/// linear support function is integrated with a mapped Gauss rule.
double mean_width(const Polytope& p);
/// n=3 only: (1/4pi) * sum over edges of length * exterior dihedral angle.
double mean_width_edges(const Polytope& p);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope intersect(const Polytope& a, const Polytope& b);
/// Volume of a ∩ b, zero when the interiors are disjoint.
double intersection_volume(const Polytope& a, const Polytope& b);
double hausdorff_distance(const Polytope& a, const Polytope& b);
/// Euclidean distance from a point to the body (0 inside).
double distance_to(const Polytope& p, const Vec& x);

Polytope translate(const Polytope& p, const Vec& t);
Polytope dilate(const Polytope& p, double s);
/// Translate so the centroid sits at the origin.
Polytope centered(const Polytope& p);

/// Axis-aligned box [-a_i/2, a_i/2] in dimension sides.size().
Polytope box_polytope(const std::vector<double>& sides);

/// Hull of N uniform points on S^{n-1}, N uniform in [n+2, 30].
Polytope random_polytope(int dim, std::uint64_t seed);
/// Same generator with a fixed point count.
Polytope random_polytope(int dim, int points, std::uint64_t seed);

} // namespace concavlab
