#include "polyforge/ce/presets.hpp"

#include <sstream>

#include "polyforge/coding/pairing.hpp"
#include "polyforge/error.hpp"

namespace polyforge::ce {

using coding::CodeIndex;
using coding::NbhdCode;
using coding::Point;

PresetSet::PresetSet(std::string name, std::size_t a)
    : name_(std::move(name)), a_(a), space_(coding::SpaceCode::reals_times_nat(a)) {
  if (a == 0) throw std::invalid_argument("ambient dimension must be positive");
}

NbhdCode PresetSet::code_of(const Box& box, const mpz_class& section) const {
  std::vector<CodeIndex> idx;
  for (const auto& [lo, hi] : box) idx.emplace_back(coding::encode_interval(lo, hi));
  idx.emplace_back(section);
  return NbhdCode{space_, coding::product_index(idx)};
}

std::optional<std::pair<std::vector<mpq_class>, mpz_class>> PresetSet::split(const Point& x) const {
  if (x.size() != a_ + 1) throw DimensionMismatch("point dimension differs from preset space");
  std::vector<mpq_class> xs;
  for (std::size_t i = 0; i < a_; ++i) {
    auto v = std::get_if<mpq_class>(&x[i]);
    if (!v) throw IncompatibleSpaces("real coordinate expected");
    xs.push_back(*v);
  }
  auto m = std::get_if<mpq_class>(&x[a_]);
  if (!m || m->get_den() != 1 || *m < 0) return std::nullopt;
  return std::make_pair(xs, mpz_class(m->get_num()));
}

std::optional<bool> EmptySet::contains_exact(const Point& x) const {
  split(x);
  return false;
}

std::optional<NbhdCode> FullSet::emit(const mpz_class& step) const {
  auto [j, m] = coding::cantor_unpair(step);
  mpq_class r(j + 1);
  return code_of(Box(a_, {-r, r}), m);
}

std::optional<bool> FullSet::contains_exact(const Point& x) const { return split(x).has_value(); }

BoxUnionSet::BoxUnionSet(std::string name, std::size_t a, std::vector<Box> boxes)
    : PresetSet(std::move(name), a), boxes_(std::move(boxes)) {
  if (boxes_.empty()) throw std::invalid_argument("box union needs a box");
  for (const auto& b : boxes_) {
    if (b.size() != a) throw DimensionMismatch("box dimension differs from ambient");
    for (const auto& [lo, hi] : b)
      if (!(lo < hi)) throw std::invalid_argument("empty box interval");
  }
}

std::optional<NbhdCode> BoxUnionSet::emit(const mpz_class& step) const {
  mpz_class k = boxes_.size();
  mpz_class i = step % k;
  return code_of(boxes_[i.get_ui()], step / k);
}

std::optional<bool> BoxUnionSet::contains_exact(const Point& x) const {
  auto s = split(x);
  if (!s) return false;
  for (const auto& b : boxes_) {
    bool in = true;
    for (std::size_t i = 0; i < a_; ++i)
      in = in && b[i].first < s->first[i] && s->first[i] < b[i].second;
    if (in) return true;
  }
  return false;
}

ShrinkingBoxSet::ShrinkingBoxSet(std::size_t a, std::vector<mpq_class> c)
    : PresetSet("point", a), c_(std::move(c)) {
  if (c_.size() != a) throw DimensionMismatch("center dimension differs from ambient");
}

std::optional<NbhdCode> ShrinkingBoxSet::emit(const mpz_class& step) const {
  mpq_class h(1, step + 1);
  h.canonicalize();
  Box b;
  for (const auto& ci : c_) b.emplace_back(ci - h, ci + h);
  return code_of(b, step);
}

std::optional<bool> ShrinkingBoxSet::contains_exact(const Point& x) const {
  auto s = split(x);
  if (!s) return false;
  mpq_class h(1, s->second + 1);
  h.canonicalize();
  for (std::size_t i = 0; i < a_; ++i)
    if (abs(s->first[i] - c_[i]) >= h) return false;
  return true;
}

PuncturedSet::PuncturedSet(std::size_t a, std::vector<mpq_class> c)
    : PresetSet("punctured", a), c_(std::move(c)) {
  if (c_.size() != a) throw DimensionMismatch("center dimension differs from ambient");
}

std::optional<NbhdCode> PuncturedSet::emit(const mpz_class& step) const {
  auto [t, m] = coding::cantor_unpair(step);
  mpz_class sides = 2 * a_;
  mpz_class j = t / sides;
  unsigned long choice = mpz_class(t % sides).get_ui();
  std::size_t axis = choice / 2;
  mpq_class r(j + 1);
  Box b;
  for (std::size_t i = 0; i < a_; ++i) {
    if (i != axis) {
      b.emplace_back(c_[i] - r, c_[i] + r);
    } else if (choice % 2 == 0) {
      b.emplace_back(c_[i], c_[i] + r);
    } else {
      b.emplace_back(c_[i] - r, c_[i]);
    }
  }
  return code_of(b, m);
}

std::optional<bool> PuncturedSet::contains_exact(const Point& x) const {
  auto s = split(x);
  if (!s) return false;
  return s->first != c_;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<mpq_class> rationals(const std::string& s) {
  std::vector<mpq_class> out;
  for (const auto& t : split_on(s, ',')) out.push_back(parse_rational(t));
  return out;
}

}  // namespace

std::shared_ptr<const PresetSet> make_preset(const std::string& spec, std::size_t a) {
  if (spec == "empty") return std::make_shared<EmptySet>(a);
  if (spec == "full") return std::make_shared<FullSet>(a);
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown preset: " + spec);
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "box" || kind == "boxes") {
    std::vector<Box> boxes;
    for (const auto& part : split_on(arg, ';')) {
      auto v = rationals(part);
      if (v.size() != 2) throw std::invalid_argument("box needs <lo>,<hi>");
      boxes.push_back(Box(a, {v[0], v[1]}));
    }
    return std::make_shared<BoxUnionSet>(spec, a, std::move(boxes));
  }
  if (kind == "point") return std::make_shared<ShrinkingBoxSet>(a, rationals(arg));
  if (kind == "punctured") return std::make_shared<PuncturedSet>(a, rationals(arg));
  throw std::invalid_argument("unknown preset: " + spec);
}

std::vector<std::string> preset_names() {
  return {"empty", "full", "box:<lo>,<hi>", "boxes:<lo>,<hi>;...", "point:<c>", "punctured:<c>"};
}

}  // namespace polyforge::ce
