#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyforge/sphere/matrix.hpp"

namespace polyforge::sphere {

// tau, tau^-1, sigma, sigma^-1, in digit order
enum class Letter { Tau = 0, TauInv = 1, Sigma = 2, SigmaInv = 3 };

Letter inverse(Letter l);

// A reduced word in the free group on tau and sigma.
class GroupWord {
 public:
  GroupWord() = default;
  // reduces the given letters
  explicit GroupWord(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  GroupWord inverse() const;
  // "e" or letters t, T, s, S (capital = inverse)
  std::string to_string() const;
  static GroupWord parse(const std::string& s);

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// f(0) = e; for n > 0 the bijective base-4 digits of n, most significant
// first, read as letters and reduced.
GroupWord enum_word(const mpz_class& n);

// Reduced words of length exactly len, in lexicographic letter order.
std::vector<GroupWord> reduced_words(std::size_t len);
// 4 * 3^(len-1) for len >= 1
mpz_class reduced_word_count(std::size_t len);

// The homomorphism tau -> rho, sigma -> phi.
RatMatrix3 word_to_matrix(const GroupWord& w);
// 5^|w| times word_to_matrix(w).
IntMatrix3 word_to_int_matrix(const GroupWord& w);

// The paradoxical decomposition of the free group: 1 if w starts with tau,
// 2 with tau^-1, 3 with sigma or w = sigma^-n (n >= 0), 4 otherwise.
int classify_piece(const GroupWord& w);

}  // namespace polyforge::sphere
