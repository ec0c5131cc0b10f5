#pragma once

// Internal hull machinery shared by the vertex and halfspace constructors.

#include <Eigen/Dense>

#include <vector>

namespace concavlab::detail {

struct HullFacet {
    Eigen::Vector3d normal;  // unit outward (z = 0 in the planar case)
    double offset = 0.0;
    std::vector<int> corners; // input indices, ordered counter-clockwise about normal
    double area = 0.0;
};

/// Facets of the hull of 3D points. Coplanar triangles are merged and each
/// facet lists only its corner points. Throws Error{DegenerateInput} when the
/// points do not span R^3 within eps.
std::vector<HullFacet> hull_facets_3d(const std::vector<Eigen::Vector3d>& pts, double eps);

/// Edges of the hull of planar points (counter-clockwise), corners only.
std::vector<HullFacet> hull_facets_2d(const std::vector<Eigen::Vector2d>& pts, double eps);

/// Counter-clockwise convex polygon (about normal) through the given points,
/// dropping points that are not corners. Returns indices into pts.
std::vector<int> planar_polygon(const std::vector<Eigen::Vector3d>& pts, const Eigen::Vector3d& normal,
                                double eps);

/// Signed area of a planar polygon loop, measured along normal.
double polygon_area(const std::vector<Eigen::Vector3d>& loop, const Eigen::Vector3d& normal);

} // namespace concavlab::detail
