#include "concavlab/measure.hpp"

#include "concavlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace concavlab {

namespace {

double angle_between(const Vec& a, const Vec& b) {
    // atan2 form stays accurate for nearly parallel unit vectors.
    const double s = (a - b).norm(), c = (a + b).norm();
    return 2.0 * std::atan2(s, c);
}

} // namespace

DirectionalMeasure::DirectionalMeasure(int dim, std::vector<Atom> atoms) : dim_(dim) {
    if (dim < 1) throw Error(ErrorKind::DegenerateInput, "measure dimension must be positive");
    for (auto& a : atoms) {
        if (a.dir.size() != dim) throw Error(ErrorKind::DegenerateInput, "atom direction has wrong dimension");
        if (!(a.weight > 0.0) || !std::isfinite(a.weight))
            throw Error(ErrorKind::DegenerateInput, "atom weights must be positive and finite");
        const double len = a.dir.norm();
        if (!(len > 0.0)) throw Error(ErrorKind::DegenerateInput, "atom direction is zero");
        a.dir /= len;
    }
    // Greedy merge: each incoming atom joins the first existing atom within
    // the merge angle.
    std::vector<Vec> sums;
    for (auto& a : atoms) {
        int hit = -1;
        for (std::size_t k = 0; k < atoms_.size(); ++k)
            if (angle_between(atoms_[k].dir, a.dir) <= kFacetMergeAngle) {
                hit = static_cast<int>(k);
                break;
            }
        if (hit < 0) {
            atoms_.push_back(a);
            sums.push_back(a.weight * a.dir);
        } else {
            atoms_[hit].weight += a.weight;
            sums[hit] += a.weight * a.dir;
            atoms_[hit].dir = sums[hit].normalized();
        }
    }
}

double DirectionalMeasure::total() const {
    double t = 0.0;
    for (const auto& a : atoms_) t += a.weight;
    return t;
}

Vec DirectionalMeasure::barycenter() const {
    Vec b = Vec::Zero(dim_);
    for (const auto& a : atoms_) b += a.weight * a.dir;
    return b;
}

bool DirectionalMeasure::is_alexandrov() const {
    if (atoms_.size() < static_cast<std::size_t>(dim_ + 1)) return false;
    const double t = total();
    if (barycenter().norm() > 1e-9 * t) return false;
    Mat m(dim_, size());
    for (int i = 0; i < size(); ++i) m.col(i) = atoms_[i].weight * atoms_[i].dir;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(dim_ - 1) > 1e-9 * t;
}

int DirectionalMeasure::find(const Vec& d) const {
    const Vec u = d.normalized();
    for (int i = 0; i < size(); ++i)
        if (angle_between(atoms_[i].dir, u) <= kFacetMergeAngle) return i;
    return -1;
}

DirectionalMeasure DirectionalMeasure::operator+(const DirectionalMeasure& other) const {
    if (dim_ != other.dim_) throw Error(ErrorKind::DegenerateInput, "measure dimension mismatch");
    std::vector<Atom> all = atoms_;
    all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
    return DirectionalMeasure(dim_, std::move(all));
}

DirectionalMeasure DirectionalMeasure::scaled(double t) const {
    if (!(t > 0.0)) throw Error(ErrorKind::DegenerateInput, "scale must be positive");
    DirectionalMeasure out = *this;
    for (auto& a : out.atoms_) a.weight *= t;
    return out;
}

DirectionalMeasure surface_area_measure(const Polytope& p) {
    std::vector<Atom> atoms;
    atoms.reserve(p.facets().size());
    for (const auto& f : p.facets())
        if (f.area > 0.0) atoms.push_back({f.normal, f.area});
    return DirectionalMeasure(p.dim(), std::move(atoms));
}

double max_relative_difference(const DirectionalMeasure& a, const DirectionalMeasure& b) {
    double worst = 0.0;
    std::vector<char> matched(b.size(), 0);
    for (const auto& x : a.atoms()) {
        const int k = b.find(x.dir);
        if (k < 0) {
            worst = std::max(worst, 1.0);
            continue;
        }
        matched[k] = 1;
        const double y = b.atoms()[k].weight;
        worst = std::max(worst, std::abs(x.weight - y) / std::max(x.weight, y));
    }
    for (int k = 0; k < b.size(); ++k)
        if (!matched[k]) worst = std::max(worst, 1.0);
    return worst;
}

} // namespace concavlab
