#pragma once

#include "concavlab/polytope.hpp"

#include <vector>

namespace concavlab {

struct Atom {
    Vec dir;       // unit direction on S^{n-1}
    double weight; // strictly positive
};

/// Finite atomic measure on the unit sphere.
///
/// Always held in canonical form: directions normalised, atoms closer than
/// kFacetMergeAngle merged (weights add, direction is the renormalised
/// weighted mean), zero/negative weights rejected.
class DirectionalMeasure {
public:
    DirectionalMeasure() = default;
    DirectionalMeasure(int dim, std::vector<Atom> atoms);

    int dim() const { return dim_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    int size() const { return static_cast<int>(atoms_.size()); }
    double total() const;
    Vec barycenter() const;

    /// Null barycenter and not concentrated on an equator, both at 1e-9 of
    /// the total mass.
    bool is_alexandrov() const;

    /// Index of the atom whose direction is within kFacetMergeAngle of d, or -1.
    int find(const Vec& d) const;

    DirectionalMeasure operator+(const DirectionalMeasure& other) const;
    DirectionalMeasure scaled(double t) const;

private:
    int dim_ = 0;
    std::vector<Atom> atoms_;
};

/// One atom per facet: (normal, facet area).
DirectionalMeasure surface_area_measure(const Polytope& p);

/// Largest relative weight mismatch over the union of supports; an atom present
/// in only one measure counts as relative error 1.
double max_relative_difference(const DirectionalMeasure& a, const DirectionalMeasure& b);

} // namespace concavlab
