#include "polyforge/ce/w1.hpp"

#include "polyforge/coding/pairing.hpp"
#include "polyforge/error.hpp"

namespace polyforge::ce {
namespace {

mpz_class binom(const mpz_class& n, unsigned long k) {
  if (n < 0) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// tuples of length len (>= 2) with sum rem whose first entry is < u
mpz_class below(const mpz_class& rem, std::size_t len, const mpz_class& u) {
  return binom(rem + len - 1, len - 1) - binom(rem - u + len - 1, len - 1);
}

}  // namespace

mpz_class graded_rank(const std::vector<mpz_class>& x) {
  std::size_t d = x.size();
  if (d == 0) throw std::invalid_argument("empty tuple");
  mpz_class w = 0;
  for (const auto& v : x) {
    if (v < 0) throw std::invalid_argument("negative tuple entry");
    w += v;
  }
  if (d == 1) return w;
  mpz_class r = binom(w + d - 1, d);
  mpz_class rem = w;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    r += below(rem, d - i, x[i]);
    rem -= x[i];
  }
  return r;
}

std::vector<mpz_class> graded_unrank(const mpz_class& t, std::size_t d) {
  if (d == 0) throw std::invalid_argument("empty tuple");
  if (t < 0) throw std::invalid_argument("negative rank");
  if (d == 1) return {t};
  // largest w with C(w+d-1, d) <= t
  mpz_class lo = 0, hi = 1;
  while (binom(hi + d - 1, d) <= t) hi *= 2;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (binom(mid + d - 1, d) <= t) lo = mid;
    else hi = mid;
  }
  mpz_class w = lo;
  mpz_class r = t - binom(w + d - 1, d);
  std::vector<mpz_class> x(d);
  mpz_class rem = w;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    std::size_t len = d - i;
    // largest u in [0, rem] with below(rem, len, u) <= r
    mpz_class a = 0, b = rem + 1;
    while (b - a > 1) {
      mpz_class mid = (a + b) / 2;
      if (below(rem, len, mid) <= r) a = mid;
      else b = mid;
    }
    x[i] = a;
    r -= below(rem, len, a);
    rem -= a;
  }
  x[d - 1] = rem;
  return x;
}

W1Set::W1Set(SemiOpenPtr U, std::size_t a) : U_(std::move(U)), a_(a) {
  if (!U_) throw std::invalid_argument("null semi-open set");
  if (!(U_->space() == coding::SpaceCode::reals_times_nat(a)))
    throw SpaceMismatch("W1 needs U over R^" + std::to_string(a) + "xN, got " + U_->space().to_string());
}

std::string W1Set::name() const { return "W1(" + U_->name() + ")"; }

W1Set::Condition W1Set::shape(const mpz_class& n, const std::vector<mpz_class>& k) {
  if (n == 0) return (k[0] == 1 && k[1] == 1 && k[2] == 0) ? Condition::I : Condition::None;
  if (k[0] == 0 && k[2] == 0) return Condition::II;
  if (k[0] > 0 && k[2] > 0) return Condition::III;
  return Condition::None;
}

bool W1Set::ball_fits(const mpz_class& n, const std::vector<mpz_class>& k, const mpz_class& s) const {
  auto c = U_->emit(s);
  if (!c) return false;
  coding::Point center;
  for (std::size_t i = 0; i < a_; ++i) {
    mpq_class ci(k[3 + i] - k[2], k[0]);
    ci.canonicalize();
    center.emplace_back(ci);
  }
  center.emplace_back(mpq_class(n - 1));
  mpq_class r2(k[1], k[2]);
  r2.canonicalize();
  return coding::ball_in_box(center, r2, *c);
}

mpz_class W1Set::code(const mpz_class& n, const std::vector<mpz_class>& k) const {
  std::vector<mpz_class> xs{n};
  xs.insert(xs.end(), k.begin(), k.end());
  return coding::pairN(xs);
}

mpz_class W1Set::rank(const mpz_class& n, const std::vector<mpz_class>& k, const mpz_class& s) const {
  std::vector<mpz_class> t{n};
  t.insert(t.end(), k.begin(), k.end());
  t.push_back(s);
  return graded_rank(t);
}

std::optional<mpz_class> W1Set::emit(const mpz_class& step) const {
  auto t = graded_unrank(step, a_ + 5);
  mpz_class n = t[0];
  std::vector<mpz_class> k(t.begin() + 1, t.end() - 1);
  const mpz_class& s = t.back();
  switch (shape(n, k)) {
    case Condition::I:
    case Condition::II:
      if (s == 0) return code(n, k);
      return std::nullopt;
    case Condition::III:
      if (ball_fits(n, k, s)) return code(n, k);
      return std::nullopt;
    case Condition::None:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<mpz_class> W1Set::first_step(const mpz_class& v, const mpz_class& budget) const {
  std::vector<mpz_class> t;
  try {
    t = coding::unpairN(v, a_ + 4);
  } catch (const NotInImage&) {
    return std::nullopt;
  }
  mpz_class n = t[0];
  std::vector<mpz_class> k(t.begin() + 1, t.end());
  switch (shape(n, k)) {
    case Condition::I:
    case Condition::II: {
      mpz_class r = rank(n, k, 0);
      if (r < budget) return r;
      return std::nullopt;
    }
    case Condition::III:
      for (mpz_class s = 0;; ++s) {
        mpz_class r = rank(n, k, s);
        if (r >= budget) return std::nullopt;
        if (ball_fits(n, k, s)) return r;
      }
    case Condition::None:
      return std::nullopt;
  }
  return std::nullopt;
}

std::shared_ptr<const W1Set> build_W1(SemiOpenPtr U, std::size_t a) {
  return std::make_shared<const W1Set>(std::move(U), a);
}

}  // namespace polyforge::ce
