#include "polyforge/sphere/matrix.hpp"

#include <sstream>

namespace polyforge::sphere {

RatMatrix3 RatMatrix3::identity() {
  RatMatrix3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

RatMatrix3 RatMatrix3::transpose() const {
  RatMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

mpq_class RatMatrix3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool RatMatrix3::is_identity() const { return *this == identity(); }

bool RatMatrix3::is_rotation() const { return (*this * transpose()).is_identity() && det() == 1; }

std::string RatMatrix3::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < 3; ++j) os << (j ? " " : "") << m[i][j].get_str();
  }
  os << "]";
  return os.str();
}

RatMatrix3 operator*(const RatMatrix3& a, const RatMatrix3& b) {
  RatMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mpq_class s = 0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

Vec3 operator*(const RatMatrix3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = a.m[i][0] * v[0] + a.m[i][1] * v[1] + a.m[i][2] * v[2];
  return r;
}

IntMatrix3 IntMatrix3::scalar(const mpz_class& c) {
  IntMatrix3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = c;
  return r;
}

IntMatrix3 operator*(const IntMatrix3& a, const IntMatrix3& b) {
  IntMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
  return r;
}

namespace {

RatMatrix3 fifths(const int (&e)[3][3]) {
  RatMatrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = mpq_class(e[i][j], 5);
      r.m[i][j].canonicalize();
    }
  return r;
}

}  // namespace

const RatMatrix3& rho() {
  static const int e[3][3] = {{3, 4, 0}, {-4, 3, 0}, {0, 0, 5}};
  static const RatMatrix3 r = fifths(e);
  return r;
}

const RatMatrix3& phi() {
  static const int e[3][3] = {{5, 0, 0}, {0, 3, 4}, {0, -4, 3}};
  static const RatMatrix3 r = fifths(e);
  return r;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

mpq_class dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace polyforge::sphere
