#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyforge/ce/semi_open.hpp"

namespace polyforge::ce {

using Interval = std::pair<mpq_class, mpq_class>;
using Box = std::vector<Interval>;  // one open interval per real coordinate

// Semi-open subsets of R^a x N used as fixtures. Each documents the set it
// denotes exactly through contains_exact.
class PresetSet : public SemiOpenSet {
 public:
  PresetSet(std::string name, std::size_t a);
  std::string name() const override { return name_; }
  const coding::SpaceCode& space() const override { return space_; }
  std::size_t ambient() const { return a_; }

 protected:
  coding::NbhdCode code_of(const Box& box, const mpz_class& section) const;
  // splits a point into real coordinates and a section; nullopt when the
  // last coordinate is not a natural
  std::optional<std::pair<std::vector<mpq_class>, mpz_class>> split(const coding::Point& x) const;

  std::string name_;
  std::size_t a_;
  coding::SpaceCode space_;
};

// Nothing.
class EmptySet : public PresetSet {
 public:
  explicit EmptySet(std::size_t a) : PresetSet("empty", a) {}
  std::optional<coding::NbhdCode> emit(const mpz_class&) const override { return std::nullopt; }
  std::optional<bool> contains_exact(const coding::Point& x) const override;
};

// R^a x N: step s = cantor(j, m) emits (-j-1, j+1)^a x {m}.
class FullSet : public PresetSet {
 public:
  explicit FullSet(std::size_t a) : PresetSet("full", a) {}
  std::optional<coding::NbhdCode> emit(const mpz_class& step) const override;
  std::optional<bool> contains_exact(const coding::Point& x) const override;
};

// (B_1 u ... u B_K) x N: step s emits B_{s mod K} x {s div K}.
class BoxUnionSet : public PresetSet {
 public:
  BoxUnionSet(std::string name, std::size_t a, std::vector<Box> boxes);
  std::optional<coding::NbhdCode> emit(const mpz_class& step) const override;
  std::optional<bool> contains_exact(const coding::Point& x) const override;
  const std::vector<Box>& boxes() const { return boxes_; }

 private:
  std::vector<Box> boxes_;
};

// Section m is the open cube of half-width 1/(m+1) around c, so the
// corresponding intersection over sections is {c}.
class ShrinkingBoxSet : public PresetSet {
 public:
  ShrinkingBoxSet(std::size_t a, std::vector<mpq_class> c);
  std::optional<coding::NbhdCode> emit(const mpz_class& step) const override;
  std::optional<bool> contains_exact(const coding::Point& x) const override;

 private:
  std::vector<mpq_class> c_;
};

// (R^a \ {c}) x N as a union of boxes touching c from one side in one
// coordinate.
class PuncturedSet : public PresetSet {
 public:
  PuncturedSet(std::size_t a, std::vector<mpq_class> c);
  std::optional<coding::NbhdCode> emit(const mpz_class& step) const override;
  std::optional<bool> contains_exact(const coding::Point& x) const override;

 private:
  std::vector<mpq_class> c_;
};

// empty | full | box:<lo>,<hi> | boxes:<lo>,<hi>;<lo>,<hi>... |
// point:<c1>,...,<ca> | punctured:<c1>,...,<ca>
std::shared_ptr<const PresetSet> make_preset(const std::string& spec, std::size_t a);
std::vector<std::string> preset_names();

mpq_class parse_rational(const std::string& s);

}  // namespace polyforge::ce
