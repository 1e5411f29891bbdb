#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace polyforge::sphere {

using Vec3 = std::array<mpq_class, 3>;
using IntVec3 = std::array<mpz_class, 3>;

struct RatMatrix3 {
  std::array<std::array<mpq_class, 3>, 3> m{};

  static RatMatrix3 identity();
  RatMatrix3 transpose() const;
  mpq_class det() const;
  bool is_identity() const;
  // exact M M^T = I and det M = 1
  bool is_rotation() const;
  std::string to_string() const;

  friend RatMatrix3 operator*(const RatMatrix3& a, const RatMatrix3& b);
  friend Vec3 operator*(const RatMatrix3& a, const Vec3& v);
  friend bool operator==(const RatMatrix3& a, const RatMatrix3& b) { return a.m == b.m; }
};

// Integer matrices; the generators scaled by 5 stay integral under products.
struct IntMatrix3 {
  std::array<std::array<mpz_class, 3>, 3> m{};

  static IntMatrix3 scalar(const mpz_class& c);
  friend IntMatrix3 operator*(const IntMatrix3& a, const IntMatrix3& b);
  friend bool operator==(const IntMatrix3& a, const IntMatrix3& b) { return a.m == b.m; }
};

const RatMatrix3& rho();
const RatMatrix3& phi();

Vec3 cross(const Vec3& a, const Vec3& b);
mpq_class dot(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

}  // namespace polyforge::sphere
