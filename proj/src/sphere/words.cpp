#include "polyforge/sphere/words.hpp"

#include <stdexcept>

namespace polyforge::sphere {

Letter inverse(Letter l) { return static_cast<Letter>(static_cast<int>(l) ^ 1); }

GroupWord::GroupWord(const std::vector<Letter>& letters) {
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == sphere::inverse(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = sphere::inverse(l);
  GroupWord w;
  w.letters_ = std::move(out);
  return w;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "e";
  static const char names[] = {'t', 'T', 's', 'S'};
  std::string s;
  for (Letter l : letters_) s += names[static_cast<int>(l)];
  return s;
}

GroupWord GroupWord::parse(const std::string& s) {
  if (s == "e" || s.empty()) return {};
  std::vector<Letter> ls;
  for (char c : s) {
    switch (c) {
      case 't': ls.push_back(Letter::Tau); break;
      case 'T': ls.push_back(Letter::TauInv); break;
      case 's': ls.push_back(Letter::Sigma); break;
      case 'S': ls.push_back(Letter::SigmaInv); break;
      default: throw std::invalid_argument(std::string("bad letter: ") + c);
    }
  }
  return GroupWord(ls);
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Letter> ls = a.letters_;
  ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(ls);
}

GroupWord enum_word(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::vector<Letter> digits;
  mpz_class m = n;
  while (m > 0) {
    m -= 1;
    mpz_class d = m % 4;
    digits.push_back(static_cast<Letter>(d.get_ui()));
    m /= 4;
  }
  return GroupWord(std::vector<Letter>(digits.rbegin(), digits.rend()));
}

std::vector<GroupWord> reduced_words(std::size_t len) {
  std::vector<std::vector<Letter>> cur{{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : cur)
      for (int d = 0; d < 4; ++d) {
        Letter l = static_cast<Letter>(d);
        if (!w.empty() && w.back() == inverse(l)) continue;
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    cur = std::move(next);
  }
  std::vector<GroupWord> out;
  out.reserve(cur.size());
  for (const auto& w : cur) out.emplace_back(w);
  return out;
}

mpz_class reduced_word_count(std::size_t len) {
  if (len == 0) return 1;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, len - 1);
  return 4 * p;
}

namespace {

const RatMatrix3& generator(Letter l) {
  static const RatMatrix3 gens[4] = {rho(), rho().transpose(), phi(), phi().transpose()};
  return gens[static_cast<int>(l)];
}

const IntMatrix3& int_generator(Letter l) {
  static const std::array<IntMatrix3, 4> gens = [] {
    std::array<IntMatrix3, 4> g;
    for (int d = 0; d < 4; ++d)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          mpq_class v = generator(static_cast<Letter>(d)).m[i][j] * 5;
          g[d].m[i][j] = v.get_num();
        }
    return g;
  }();
  return gens[static_cast<int>(l)];
}

}  // namespace

RatMatrix3 word_to_matrix(const GroupWord& w) {
  RatMatrix3 r = RatMatrix3::identity();
  for (Letter l : w.letters()) r = r * generator(l);
  return r;
}

IntMatrix3 word_to_int_matrix(const GroupWord& w) {
  IntMatrix3 r = IntMatrix3::scalar(1);
  for (Letter l : w.letters()) r = r * int_generator(l);
  return r;
}

int classify_piece(const GroupWord& w) {
  const auto& ls = w.letters();
  if (ls.empty()) return 3;
  switch (ls.front()) {
    case Letter::Tau: return 1;
    case Letter::TauInv: return 2;
    case Letter::Sigma: return 3;
    case Letter::SigmaInv:
      for (Letter l : ls)
        if (l != Letter::SigmaInv) return 4;
      return 3;
  }
  return 3;
}

}  // namespace polyforge::sphere
