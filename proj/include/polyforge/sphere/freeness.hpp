#pragma once

#include <cstddef>

#include "polyforge/sphere/words.hpp"

namespace polyforge::sphere {

struct FreenessCertificate {
  std::size_t max_len = 0;
  std::size_t words_checked = 0;     // nontrivial reduced words of length <= max_len
  std::size_t words_at_max_len = 0;  // of length exactly max_len
  std::size_t identity_collisions = 0;   // exact: 5^len g(w) = 5^len I
  std::size_t mod5_zero = 0;             // 5^len g(w) vanishes mod 5
  std::size_t non_rotations = 0;         // exact orthogonality or det = 1 fails
  // the mod-5 route reaches the same verdict as the exact one on every word
  bool agree = false;
  bool free() const { return identity_collisions == 0 && agree; }
};

// Every nontrivial reduced word of length <= L maps to a matrix other
// than I, checked on 5^len-scaled integer matrices and again through
// nonvanishing mod 5.
FreenessCertificate freeness_check(std::size_t L);

struct DecompositionReport {
  std::size_t max_len = 0;
  std::size_t words = 0;  // including e
  std::array<std::size_t, 4> piece_counts{};
  std::size_t partition_failures = 0;  // words in zero or several pieces
  std::size_t law1_failures = 0;       // w not in A1 u tau A2
  std::size_t law2_failures = 0;       // w not in A3 u sigma A4
  bool ok() const { return partition_failures == 0 && law1_failures == 0 && law2_failures == 0; }
};

// Partition and paradox laws on all reduced words of length <= L.
DecompositionReport decomposition_check(std::size_t L);

}  // namespace polyforge::sphere
