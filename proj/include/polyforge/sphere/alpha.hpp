#pragma once

#include <array>
#include <vector>

#include "polyforge/evaluate/interval.hpp"
#include "polyforge/sphere/axis.hpp"

namespace polyforge::sphere {

using evaluate::Interval;
using IVec3 = std::array<Interval, 3>;
using IMatrix3 = std::array<IVec3, 3>;

IMatrix3 imul(const IMatrix3& a, const IMatrix3& b);
IVec3 imul(const IMatrix3& a, const IVec3& v);
IMatrix3 itranspose(const IMatrix3& a);
Interval idet(const IMatrix3& a);
Interval idot(const IVec3& a, const IVec3& b);
IMatrix3 to_interval(const RatMatrix3& m, mpfr_prec_t prec);
IVec3 to_interval(const Vec3& v, mpfr_prec_t prec);
// widest entry, as a rational
mpq_class max_width(const IMatrix3& m);

// (1, 2^(1/3), 2^(1/5))
IVec3 alpha_axis(mpfr_prec_t prec);
// Rotation of the quaternion (1 + i + j 2^(1/3) + k 2^(1/5)), normalized;
// entry widths at most 2^-prec.
IMatrix3 alpha_matrix(mpfr_prec_t prec);

// v / |v| for a nonzero rational direction
IVec3 normalize(const IntVec3& v, mpfr_prec_t prec);

struct SeparationCertificate {
  std::size_t count = 0;
  mpfr_prec_t precision = 0;       // the precision that separated them
  std::vector<AxisEntry> axes;
  std::vector<Interval> products;  // <axis/|axis|, alpha axis>, in axis order
  bool separated = false;
};

// Inner products of the first K distinct unit fixed points with the
// alpha axis have pairwise disjoint enclosures. Precision doubles from
// prec until they do; RefinementExhausted past max_prec.
SeparationCertificate separation_check(std::size_t K, mpfr_prec_t prec = 128,
                                       mpfr_prec_t max_prec = 512);

}  // namespace polyforge::sphere
