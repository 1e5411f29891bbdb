#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace polyforge::coding {

enum class Factor { Nat, Baire, Real, ExtReal };

struct SpaceCode {
  std::vector<Factor> factors;

  static SpaceCode reals_times_nat(std::size_t a);  // R^a x N
  static SpaceCode reals(std::size_t a);
  std::size_t size() const { return factors.size(); }
  std::string to_string() const;
  friend bool operator==(const SpaceCode&, const SpaceCode&) = default;
};

// A neighborhood index. Products are coded as 2^l * 3^r - 1, which grows
// doubly exponentially under nesting, so the pair form is kept unevaluated
// until an integer is asked for.
class CodeIndex {
 public:
  CodeIndex() = default;  // 0
  CodeIndex(const mpz_class& literal);  // NOLINT
  CodeIndex(long literal) : CodeIndex(mpz_class(literal)) {}  // NOLINT
  static CodeIndex pair(CodeIndex left, CodeIndex right);

  bool is_pair() const { return left_ != nullptr; }
  const CodeIndex& left() const { return *left_; }
  const CodeIndex& right() const { return *right_; }
  const mpz_class& literal() const { return literal_; }

  // The pair's (left, right) components; for literals, the valuations
  // nu_2(i+1) and nu_3(i+1).
  std::pair<CodeIndex, CodeIndex> split() const;
  // The integer value, or nullopt when it has more than max_bits bits.
  std::optional<mpz_class> materialize(std::size_t max_bits = 1u << 20) const;
  std::string to_string() const;

 private:
  mpz_class literal_ = 0;
  std::shared_ptr<const CodeIndex> left_, right_;
};

struct NbhdCode {
  SpaceCode space;
  CodeIndex index;
};

struct NatPoint {
  mpz_class m;
};
struct BaireCylinder {
  std::vector<mpz_class> prefix;
};
struct OpenInterval {
  mpq_class a, b;
};
// (n, +inf]
struct UpperTail {
  mpz_class n;
};
// [-inf, -n)
struct LowerTail {
  mpz_class n;
};
using FactorRegion = std::variant<NatPoint, BaireCylinder, OpenInterval, UpperTail, LowerTail>;

struct Region {
  std::vector<FactorRegion> factors;
  std::string to_json() const;
};

// A point of a basic space, one coordinate per factor.
struct Infinity {
  int sign;  // +1 or -1
};
struct Sequence {
  std::vector<mpz_class> values;  // finitely supported, zeros beyond
};
using Coord = std::variant<mpq_class, Infinity, Sequence>;
using Point = std::vector<Coord>;

FactorRegion decode_factor(Factor f, const mpz_class& index);
Region decode_nbhd(const NbhdCode& c);

// Index of the real interval (a, b); requires a < b.
mpz_class encode_interval(const mpq_class& a, const mpq_class& b);
// Left-folded product code of per-factor indices.
CodeIndex product_index(const std::vector<CodeIndex>& per_factor);

bool region_subset(const Region& r1, const Region& r2);
bool region_member(const Point& x, const Region& r);
// Closed ball with the given center and squared radius over the real
// factors, with Nat factors held at the center's coordinate.
bool ball_in_region(const Point& center, const mpq_class& radius2, const Region& r);

bool nbhd_subset(const NbhdCode& c1, const NbhdCode& c2);
bool nbhd_member(const Point& x, const NbhdCode& c);
bool ball_in_box(const Point& center, const mpq_class& radius2, const NbhdCode& c);

Point real_point(const std::vector<mpq_class>& xs);

}  // namespace polyforge::coding
