#include "polyforge/sphere/axis.hpp"

#include "polyforge/error.hpp"

namespace polyforge::sphere {

Vec3 to_rational(const IntVec3& v) { return {mpq_class(v[0]), mpq_class(v[1]), mpq_class(v[2])}; }

bool same_axis(const Vec3& a, const Vec3& b) { return is_zero(cross(a, b)); }

IntVec3 fixed_axis(const GroupWord& w) {
  RatMatrix3 m = word_to_matrix(w);
  RatMatrix3 a = m;
  for (int i = 0; i < 3; ++i) a.m[i][i] -= 1;
  std::array<Vec3, 3> rows;
  for (int i = 0; i < 3; ++i) rows[i] = {a.m[i][0], a.m[i][1], a.m[i][2]};
  Vec3 v{0, 0, 0};
  for (int i = 0; i < 3 && is_zero(v); ++i)
    for (int j = i + 1; j < 3 && is_zero(v); ++j) v = cross(rows[i], rows[j]);
  if (is_zero(v)) throw DegenerateKernel("g(" + w.to_string() + ") - I has rank below 2");
  if (!is_zero(a * v)) throw DegenerateKernel("g(" + w.to_string() + ") - I has full rank");

  // clear denominators, divide by the content, fix the sign
  mpz_class l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntVec3 out;
  mpz_class g = 0;
  for (int i = 0; i < 3; ++i) {
    mpq_class s = v[i] * l;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& c : out) c /= g;
  for (const auto& c : out) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& d : out) d = -d;
    break;
  }
  if (!(m * to_rational(out) == to_rational(out))) throw std::logic_error("fixed axis check failed");
  return out;
}

std::vector<AxisEntry> distinct_axes(std::size_t count) {
  std::vector<AxisEntry> out;
  for (mpz_class n = 1; out.size() < count; ++n) {
    GroupWord w = enum_word(n);
    if (w.is_identity()) continue;
    IntVec3 ax = fixed_axis(w);
    bool seen = false;
    for (const auto& e : out)
      if (same_axis(to_rational(e.axis), to_rational(ax))) {
        seen = true;
        break;
      }
    if (!seen) out.push_back({n, w, ax});
  }
  return out;
}

}  // namespace polyforge::sphere
