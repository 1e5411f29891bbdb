#pragma once

#include <vector>

#include "polyforge/sphere/words.hpp"

namespace polyforge::sphere {

// A primitive integer vector spanning the kernel of g(w) - I, with its
// first nonzero coordinate positive. DegenerateKernel unless the kernel is
// a line (which fails exactly for the identity).
IntVec3 fixed_axis(const GroupWord& w);
Vec3 to_rational(const IntVec3& v);

// Same line through the origin (cross product zero).
bool same_axis(const Vec3& a, const Vec3& b);

struct AxisEntry {
  mpz_class index;  // first n with f(n) having this axis
  GroupWord word;
  IntVec3 axis;
};

// The first count distinct axes of f(1), f(2), ..., antipodes merged.
std::vector<AxisEntry> distinct_axes(std::size_t count);

}  // namespace polyforge::sphere
