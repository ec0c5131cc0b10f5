#include "concavlab/bodies.hpp"

#include "concavlab/errors.hpp"

#include <cmath>
#include <sstream>

namespace concavlab {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

} // namespace

void validate(const Box& box) {
    if (box.sides.empty()) throw Error(ErrorKind::DegenerateInput, "box has no sides");
    for (double s : box.sides)
        if (!positive(s)) throw Error(ErrorKind::DegenerateInput, "box sides must be positive");
}

void validate(const Rect& rect) {
    if (!positive(rect.a) || !positive(rect.b)) throw Error(ErrorKind::DegenerateInput, "rectangle sides must be positive");
}

void validate(const Spheroid& s) {
    if (!positive(s.b) || !(s.a >= s.b) || !std::isfinite(s.a))
        throw Error(ErrorKind::DegenerateInput, "spheroid needs a >= b > 0");
}

std::string describe(const Box& box) {
    std::string out = "box:";
    for (std::size_t i = 0; i < box.sides.size(); ++i) out += (i ? "," : "") + fmt(box.sides[i]);
    return out;
}

std::string describe(const Rect& rect) { return "rect:" + fmt(rect.a) + "," + fmt(rect.b); }

std::string describe(const Spheroid& s) { return "spheroid:" + fmt(s.a) + "," + fmt(s.b); }

} // namespace concavlab
