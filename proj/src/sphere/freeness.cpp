#include "polyforge/sphere/freeness.hpp"

#include <functional>
#include <stdexcept>

namespace polyforge::sphere {

namespace {

using Mod5 = std::array<std::array<int, 3>, 3>;

Mod5 mul5(const Mod5& a, const Mod5& b) {
  Mod5 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = ((s % 5) + 5) % 5;
    }
  return r;
}

bool zero5(const Mod5& a) {
  for (const auto& row : a)
    for (int v : row)
      if (v) return false;
  return true;
}

}  // namespace

FreenessCertificate freeness_check(std::size_t L) {
  if (L < 1) throw std::invalid_argument("max length must be at least 1");
  FreenessCertificate c;
  c.max_len = L;
  std::array<IntMatrix3, 4> gens;
  std::array<Mod5, 4> gens5;
  for (int d = 0; d < 4; ++d) {
    gens[d] = word_to_int_matrix(GroupWord({static_cast<Letter>(d)}));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        mpz_class r = gens[d].m[i][j] % 5;
        gens5[d][i][j] = static_cast<int>((r.get_si() + 5) % 5);
      }
  }
  bool agree = true;
  std::function<void(const IntMatrix3&, const Mod5&, int, std::size_t, const mpz_class&)> walk =
      [&](const IntMatrix3& m, const Mod5& m5, int last, std::size_t len, const mpz_class& scale) {
        for (int d = 0; d < 4; ++d) {
          if (last >= 0 && d == (last ^ 1)) continue;
          IntMatrix3 next = m * gens[d];
          Mod5 next5 = mul5(m5, gens5[d]);
          mpz_class s = scale * 5;
          ++c.words_checked;
          if (len + 1 == L) ++c.words_at_max_len;
          bool identity = next == IntMatrix3::scalar(s);
          bool vanishes = zero5(next5);
          if (identity) ++c.identity_collisions;
          if (vanishes) ++c.mod5_zero;
          if (identity == !vanishes) agree = false;
          // M M^T = 25^len I and det M = 125^len
          IntMatrix3 t;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.m[i][j] = next.m[j][i];
          const auto& a = next.m;
          mpz_class det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                          a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                          a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
          if (!(next * t == IntMatrix3::scalar(s * s)) || det != s * s * s) ++c.non_rotations;
          if (len + 1 < L) walk(next, next5, d, len + 1, s);
        }
      };
  Mod5 id5{};
  for (int i = 0; i < 3; ++i) id5[i][i] = 1;
  walk(IntMatrix3::scalar(1), id5, -1, 0, 1);
  c.agree = agree;
  return c;
}

DecompositionReport decomposition_check(std::size_t L) {
  if (L < 2) throw std::invalid_argument("max length must be at least 2");
  DecompositionReport r;
  r.max_len = L;
  const GroupWord tau({Letter::Tau}), sigma({Letter::Sigma});
  auto in = [](const GroupWord& w, int i) { return classify_piece(w) == i; };
  // membership tests written independently of classify_piece
  auto first = [](const GroupWord& w, Letter l) { return !w.is_identity() && w.letters().front() == l; };
  auto sigma_inv_power = [](const GroupWord& w) {
    for (Letter l : w.letters())
      if (l != Letter::SigmaInv) return false;
    return true;
  };
  for (std::size_t len = 0; len <= L; ++len) {
    for (const auto& w : reduced_words(len)) {
      ++r.words;
      bool a1 = first(w, Letter::Tau);
      bool a2 = first(w, Letter::TauInv);
      bool a3 = first(w, Letter::Sigma) || sigma_inv_power(w);
      bool a4 = first(w, Letter::SigmaInv) && !sigma_inv_power(w);
      int hits = a1 + a2 + a3 + a4;
      if (hits != 1) ++r.partition_failures;
      ++r.piece_counts[classify_piece(w) - 1];
      if (!((a1 && in(w, 1)) || (a2 && in(w, 2)) || (a3 && in(w, 3)) || (a4 && in(w, 4))))
        ++r.partition_failures;
      // w in tau A2 iff tau^-1 w in A2
      if (!(in(w, 1) || in(tau.inverse() * w, 2))) ++r.law1_failures;
      if (!(in(w, 3) || in(sigma.inverse() * w, 4))) ++r.law2_failures;
    }
  }
  return r;
}

}  // namespace polyforge::sphere
