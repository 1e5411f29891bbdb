#include "polyforge/coding/nbhd.hpp"

#include <algorithm>

#include <json.hpp>

#include "polyforge/coding/valuation.hpp"
#include "polyforge/error.hpp"

namespace polyforge::coding {

SpaceCode SpaceCode::reals_times_nat(std::size_t a) {
  SpaceCode s = reals(a);
  s.factors.push_back(Factor::Nat);
  return s;
}

SpaceCode SpaceCode::reals(std::size_t a) {
  SpaceCode s;
  s.factors.assign(a, Factor::Real);
  return s;
}

std::string SpaceCode::to_string() const {
  std::string s;
  for (auto f : factors) {
    if (!s.empty()) s += "x";
    switch (f) {
      case Factor::Nat: s += "N"; break;
      case Factor::Baire: s += "N^N"; break;
      case Factor::Real: s += "R"; break;
      case Factor::ExtReal: s += "Rbar"; break;
    }
  }
  return s;
}

CodeIndex::CodeIndex(const mpz_class& literal) : literal_(literal) {
  if (literal_ < 0) throw std::invalid_argument("negative code index");
}

CodeIndex CodeIndex::pair(CodeIndex left, CodeIndex right) {
  CodeIndex c;
  c.left_ = std::make_shared<const CodeIndex>(std::move(left));
  c.right_ = std::make_shared<const CodeIndex>(std::move(right));
  return c;
}

std::pair<CodeIndex, CodeIndex> CodeIndex::split() const {
  if (is_pair()) return {*left_, *right_};
  mpz_class n = literal_ + 1;
  return {CodeIndex(mpz_class(padic_valuation(2, n))), CodeIndex(mpz_class(padic_valuation(3, n)))};
}

std::optional<mpz_class> CodeIndex::materialize(std::size_t max_bits) const {
  if (!is_pair()) return literal_;
  auto l = left_->materialize(max_bits);
  auto r = right_->materialize(max_bits);
  if (!l || !r) return std::nullopt;
  // 3^r has about 1.585 r bits
  if (*l > max_bits || *r > max_bits || *l + (*r * 1585) / 1000 > max_bits) return std::nullopt;
  mpz_class v, t;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, l->get_ui());
  mpz_ui_pow_ui(t.get_mpz_t(), 3, r->get_ui());
  return v * t - 1;
}

std::string CodeIndex::to_string() const {
  if (!is_pair()) return literal_.get_str();
  return "2^" + left_->to_string() + "*3^" + right_->to_string() + "-1";
}

FactorRegion decode_factor(Factor f, const mpz_class& index) {
  if (index < 0) throw std::invalid_argument("negative code index");
  switch (f) {
    case Factor::Nat:
      return NatPoint{index};
    case Factor::Baire: {
      mpz_class n = index + 1;
      unsigned long len = padic_valuation(2, n);
      BaireCylinder c;
      for (unsigned long i = 0; i < len; ++i)
        c.prefix.emplace_back(padic_valuation(nth_prime(i + 1), n));
      return c;
    }
    case Factor::Real: {
      mpz_class n = index + 1;
      mpz_class v2 = padic_valuation(2, n), v3 = padic_valuation(3, n);
      mpz_class v5 = padic_valuation(5, n), v7 = padic_valuation(7, n);
      mpz_class den = 1 + v2;
      mpq_class a(v3 - v5, den), b(v3 - v5 + v7 + 1, den);
      a.canonicalize();
      b.canonicalize();
      return OpenInterval{a, b};
    }
    case Factor::ExtReal: {
      mpz_class q = index / 3;
      unsigned long r = mpz_fdiv_ui(index.get_mpz_t(), 3);
      if (r == 0) return decode_factor(Factor::Real, q);
      if (r == 1) return UpperTail{q};
      return LowerTail{q};
    }
  }
  throw std::logic_error("bad factor");
}

namespace {

void decode_into(const std::vector<Factor>& fs, std::size_t k, const CodeIndex& idx,
                 std::vector<FactorRegion>& out) {
  if (k == 1) {
    auto v = idx.materialize();
    if (!v) throw OutOfRange("factor index too large to decode: " + idx.to_string());
    out.push_back(decode_factor(fs[0], *v));
    return;
  }
  auto [l, r] = idx.split();
  decode_into(fs, k - 1, l, out);
  auto v = r.materialize();
  if (!v) throw OutOfRange("factor index too large to decode: " + r.to_string());
  out.push_back(decode_factor(fs[k - 1], *v));
}

bool factor_subset(const FactorRegion& x, const FactorRegion& y) {
  if (auto p = std::get_if<NatPoint>(&x)) {
    auto q = std::get_if<NatPoint>(&y);
    if (!q) throw IncompatibleSpaces("factor kinds differ");
    return p->m == q->m;
  }
  if (auto p = std::get_if<BaireCylinder>(&x)) {
    auto q = std::get_if<BaireCylinder>(&y);
    if (!q) throw IncompatibleSpaces("factor kinds differ");
    if (q->prefix.size() > p->prefix.size()) return false;
    return std::equal(q->prefix.begin(), q->prefix.end(), p->prefix.begin());
  }
  if (std::holds_alternative<NatPoint>(y) || std::holds_alternative<BaireCylinder>(y))
    throw IncompatibleSpaces("factor kinds differ");
  if (auto p = std::get_if<OpenInterval>(&x)) {
    if (auto q = std::get_if<OpenInterval>(&y)) return q->a <= p->a && p->b <= q->b;
    if (auto q = std::get_if<UpperTail>(&y)) return p->a >= q->n;
    return p->b <= -std::get<LowerTail>(y).n;
  }
  if (auto p = std::get_if<UpperTail>(&x)) {
    if (auto q = std::get_if<UpperTail>(&y)) return p->n >= q->n;
    return false;
  }
  auto p = std::get<LowerTail>(x);
  if (auto q = std::get_if<LowerTail>(&y)) return p.n >= q->n;
  return false;
}

bool factor_member(const Coord& c, const FactorRegion& r) {
  if (auto p = std::get_if<NatPoint>(&r)) {
    auto x = std::get_if<mpq_class>(&c);
    if (!x) throw IncompatibleSpaces("expected a natural coordinate");
    return *x == mpq_class(p->m);
  }
  if (auto p = std::get_if<BaireCylinder>(&r)) {
    auto s = std::get_if<Sequence>(&c);
    if (!s) throw IncompatibleSpaces("expected a sequence coordinate");
    for (std::size_t i = 0; i < p->prefix.size(); ++i) {
      mpz_class v = i < s->values.size() ? s->values[i] : mpz_class(0);
      if (v != p->prefix[i]) return false;
    }
    return true;
  }
  if (std::holds_alternative<Sequence>(c)) throw IncompatibleSpaces("sequence in a real factor");
  if (auto inf = std::get_if<Infinity>(&c)) {
    if (std::holds_alternative<OpenInterval>(r)) return false;
    if (std::holds_alternative<UpperTail>(r)) return inf->sign > 0;
    return inf->sign < 0;
  }
  const mpq_class& x = std::get<mpq_class>(c);
  if (auto p = std::get_if<OpenInterval>(&r)) return p->a < x && x < p->b;
  if (auto p = std::get_if<UpperTail>(&r)) return x > p->n;
  return x < -std::get<LowerTail>(r).n;
}

// Is [c - rho, c + rho] inside the open factor, with rho^2 = r2?
bool segment_inside(const mpq_class& c, const mpq_class& r2, const FactorRegion& r) {
  auto gap_ok = [&](const mpq_class& gap) { return gap > 0 && gap * gap > r2; };
  if (auto p = std::get_if<OpenInterval>(&r)) return gap_ok(c - p->a) && gap_ok(p->b - c);
  if (auto p = std::get_if<UpperTail>(&r)) return gap_ok(c - p->n);
  return gap_ok(-std::get<LowerTail>(r).n - c);
}

}  // namespace

Region decode_nbhd(const NbhdCode& c) {
  if (c.space.factors.empty()) throw std::invalid_argument("empty space code");
  Region r;
  decode_into(c.space.factors, c.space.factors.size(), c.index, r.factors);
  return r;
}

mpz_class encode_interval(const mpq_class& a, const mpq_class& b) {
  if (!(a < b)) throw std::invalid_argument("encode_interval needs a < b");
  mpq_class w = b - a;
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), w.get_den_mpz_t());
  if (d > (1u << 24)) throw OutOfRange("denominator too large to encode");
  mpq_class ad_q = a * d, wd_q = w * d;
  mpz_class ad = ad_q.get_num(), wd = wd_q.get_num();
  auto ulong_of = [](const mpz_class& z) {
    if (!z.fits_ulong_p() || z > (1u << 24)) throw OutOfRange("interval too large to encode");
    return z.get_ui();
  };
  mpz_class n, t;
  mpz_ui_pow_ui(n.get_mpz_t(), 2, ulong_of(d - 1));
  if (ad > 0) {
    mpz_ui_pow_ui(t.get_mpz_t(), 3, ulong_of(ad));
    n *= t;
  } else if (ad < 0) {
    mpz_ui_pow_ui(t.get_mpz_t(), 5, ulong_of(-ad));
    n *= t;
  }
  mpz_ui_pow_ui(t.get_mpz_t(), 7, ulong_of(wd - 1));
  n *= t;
  return n - 1;
}

CodeIndex product_index(const std::vector<CodeIndex>& per_factor) {
  if (per_factor.empty()) throw std::invalid_argument("empty product");
  CodeIndex c = per_factor[0];
  for (std::size_t i = 1; i < per_factor.size(); ++i) c = CodeIndex::pair(c, per_factor[i]);
  return c;
}

bool region_subset(const Region& r1, const Region& r2) {
  if (r1.factors.size() != r2.factors.size()) throw IncompatibleSpaces("dimension differs");
  for (std::size_t i = 0; i < r1.factors.size(); ++i)
    if (!factor_subset(r1.factors[i], r2.factors[i])) return false;
  return true;
}

bool region_member(const Point& x, const Region& r) {
  if (x.size() != r.factors.size()) throw DimensionMismatch("point and region dimensions differ");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!factor_member(x[i], r.factors[i])) return false;
  return true;
}

bool ball_in_region(const Point& center, const mpq_class& radius2, const Region& r) {
  if (radius2 < 0) throw std::invalid_argument("negative squared radius");
  if (center.size() != r.factors.size()) throw DimensionMismatch("center and region dimensions differ");
  for (std::size_t i = 0; i < center.size(); ++i) {
    const auto& f = r.factors[i];
    if (std::holds_alternative<BaireCylinder>(f)) throw IncompatibleSpaces("ball in a Baire factor");
    if (std::holds_alternative<NatPoint>(f)) {
      if (!factor_member(center[i], f)) return false;
      continue;
    }
    auto c = std::get_if<mpq_class>(&center[i]);
    if (!c) throw IncompatibleSpaces("ball center must be finite");
    if (!segment_inside(*c, radius2, f)) return false;
  }
  return true;
}

bool nbhd_subset(const NbhdCode& c1, const NbhdCode& c2) {
  if (!(c1.space == c2.space)) throw IncompatibleSpaces(c1.space.to_string() + " vs " + c2.space.to_string());
  return region_subset(decode_nbhd(c1), decode_nbhd(c2));
}

bool nbhd_member(const Point& x, const NbhdCode& c) { return region_member(x, decode_nbhd(c)); }

bool ball_in_box(const Point& center, const mpq_class& radius2, const NbhdCode& c) {
  return ball_in_region(center, radius2, decode_nbhd(c));
}

Point real_point(const std::vector<mpq_class>& xs) { return Point(xs.begin(), xs.end()); }

std::string Region::to_json() const {
  using nlohmann::json;
  json arr = json::array();
  for (const auto& f : factors) {
    if (auto p = std::get_if<NatPoint>(&f)) {
      arr.push_back(json{{"nat", p->m.get_str()}});
    } else if (auto p = std::get_if<BaireCylinder>(&f)) {
      json pre = json::array();
      for (const auto& v : p->prefix) pre.push_back(v.get_str());
      arr.push_back(json{{"baire", pre}});
    } else if (auto p = std::get_if<OpenInterval>(&f)) {
      arr.push_back(json{{"interval", {p->a.get_str(), p->b.get_str()}}});
    } else if (auto p = std::get_if<UpperTail>(&f)) {
      arr.push_back(json{{"upper_tail", p->n.get_str()}});
    } else {
      arr.push_back(json{{"lower_tail", std::get<LowerTail>(f).n.get_str()}});
    }
  }
  return arr.dump();
}

}  // namespace polyforge::coding
