#pragma once

#include <string>
#include <vector>

namespace concavlab {

/// Axis-aligned box with the given side lengths, any dimension.
struct Box {
    std::vector<double> sides;
};

/// Axis-aligned rectangle [0,a] x [0,b].
struct Rect {
    double a = 1.0;
    double b = 1.0;
};

/// Prolate spheroid with semi-axes a >= b > 0 (a along the symmetry axis).
struct Spheroid {
    double a = 1.0;
    double b = 1.0;
};

void validate(const Box& box);
void validate(const Rect& rect);
void validate(const Spheroid& s);

std::string describe(const Box& box);
std::string describe(const Rect& rect);
std::string describe(const Spheroid& s);

} // namespace concavlab
