#include "polyforge/evaluate/engineered.hpp"

#include "polyforge/coding/pairing.hpp"
#include "polyforge/error.hpp"

namespace polyforge::evaluate {

using K = ExtRealClass::Kind;

namespace {

mpz_class nearest(const mpq_class& v) {
  mpq_class h = v + mpq_class(1, 2);
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

mpz_class ceil_q(const mpq_class& v) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return c;
}

mpz_class j2(const mpz_class& u, const mpz_class& v) {
  mpz_class s = u + v;
  return s * (s + 1) + 2 * v;
}

// open boxes emitted for section m that contain x
std::vector<std::vector<coding::OpenInterval>> boxes_around(const ce::SemiOpenSet& U,
                                                            const std::vector<mpq_class>& x,
                                                            const mpz_class& m,
                                                            const mpz_class& steps) {
  std::vector<std::vector<coding::OpenInterval>> out;
  for (mpz_class s = 0; s < steps; ++s) {
    auto c = U.emit(s);
    if (!c) continue;
    coding::Region r = coding::decode_nbhd(*c);
    const auto* sect = std::get_if<coding::NatPoint>(&r.factors.back());
    if (!sect || sect->m != m) continue;
    std::vector<coding::OpenInterval> box;
    bool inside = true;
    for (std::size_t i = 0; i < x.size() && inside; ++i) {
      const auto* iv = std::get_if<coding::OpenInterval>(&r.factors[i]);
      inside = iv && iv->a < x[i] && x[i] < iv->b;
      if (inside) box.push_back(*iv);
    }
    if (inside) out.push_back(std::move(box));
  }
  // a box inside another never gives a larger gap
  auto within = [](const std::vector<coding::OpenInterval>& u, const std::vector<coding::OpenInterval>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i].a < v[i].a || v[i].b < u[i].b) return false;
    return true;
  };
  std::vector<std::vector<coding::OpenInterval>> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < out.size() && !dominated; ++j)
      dominated = j != i && within(out[i], out[j]) && (!within(out[j], out[i]) || j < i);
    if (!dominated) kept.push_back(out[i]);
  }
  return kept;
}

mpq_class ball_value(const std::vector<mpq_class>& x, const std::vector<mpz_class>& k) {
  mpq_class sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpq_class d = mpq_class(k[0]) * x[i] - k[3 + i] + k[2];
    sum += d * d;
  }
  return mpq_class(k[0] * k[0] * k[1]) - k[2] * sum;
}

struct Candidate {
  mpq_class value;
  std::vector<mpz_class> k;
};

std::optional<Candidate> best_witness(const std::vector<std::vector<coding::OpenInterval>>& boxes,
                                      const std::vector<mpq_class>& x, const mpz_class& bound) {
  std::optional<Candidate> best;
  std::size_t a = x.size();
  for (mpz_class k1 = 1; k1 <= bound; ++k1)
    for (mpz_class k3 = 1; k3 <= bound; ++k3) {
      std::vector<mpz_class> k(a + 3);
      k[0] = k1;
      k[2] = k3;
      std::vector<mpq_class> c(a);
      bool natural = true;
      for (std::size_t i = 0; i < a; ++i) {
        k[3 + i] = nearest(mpq_class(k1) * x[i] + k3);
        natural = natural && k[3 + i] >= 0 && k[3 + i] <= bound;
        c[i] = mpq_class(k[3 + i] - k3, k1);
        c[i].canonicalize();
      }
      if (!natural) continue;
      std::optional<mpz_class> k2;
      for (const auto& box : boxes) {
        std::optional<mpq_class> gap;
        for (std::size_t i = 0; i < a; ++i) {
          mpq_class g = std::min(c[i] - box[i].a, box[i].b - c[i]);
          if (!gap || g < *gap) gap = g;
        }
        if (*gap <= 0) continue;
        mpz_class v = ceil_q(*gap * *gap * k3) - 1;
        if (!k2 || v > *k2) k2 = v;
      }
      if (!k2) continue;
      k[1] = std::min(*k2, bound);
      mpq_class r = ball_value(x, k);
      if (!best || r > best->value) best = Candidate{r, k};
    }
  return best;
}

void require_evaluable(const forge::Engineered& g) {
  if (!g.U) throw EvaluationOnly("engineered polynomial has a symbolic set");
  if (g.universal->kind() != universal::UniversalPoly::Kind::Virtual)
    throw EvaluationOnly("engineered polynomial needs an oracle universal to evaluate");
}

}  // namespace

std::vector<mpz_class> chain_values(const forge::Engineered& g, const mpz_class& n,
                                    const std::vector<mpz_class>& k) {
  if (g.mode == forge::Mode::MinVars) {
    std::vector<mpz_class> t{n};
    t.insert(t.end(), k.begin(), k.end());
    return {coding::pairN(t)};
  }
  std::vector<mpz_class> ls{j2(n, k[0])};
  for (std::size_t i = 1; i < k.size(); ++i) ls.push_back(j2(ls.back(), k[i]));
  return ls;
}

mpq_class engineered_value(const forge::Engineered& g, const std::vector<mpq_class>& x,
                           const mpz_class& n, const std::vector<mpz_class>& k) {
  if (x.size() != g.xs.size() || k.size() != g.ks.size())
    throw DimensionMismatch("point or witness has the wrong length");
  Assignment at;
  for (std::size_t i = 0; i < x.size(); ++i) at[g.xs[i]] = x[i];
  at[g.n] = mpq_class(n);
  for (std::size_t i = 0; i < k.size(); ++i) at[g.ks[i]] = mpq_class(k[i]);
  auto ls = chain_values(g, n, k);
  for (std::size_t i = 0; i < ls.size(); ++i) at[g.ls[i]] = mpq_class(ls[i]);
  for (const auto& y : g.ys) at[y] = 0;
  return eval_exact(g.p, at);
}

EngineeredVerdict engineered_sup(const forge::Engineered& g, const std::vector<mpq_class>& x,
                                 const mpz_class& n, const Budget& b) {
  require_evaluable(g);
  b.validate();
  if (x.size() != g.a) throw DimensionMismatch("sample has the wrong dimension");
  EngineeredVerdict out;
  std::size_t kc = g.ks.size();

  if (n == 0) {
    std::vector<mpz_class> k(kc, 0);
    k[0] = k[1] = 1;
    out.witness = k;
    out.best = engineered_value(g, x, n, k);
    out.cls = out.best == 1 ? ExtRealClass::of(K::ValueOne, 1) : ExtRealClass::of(K::Finite, out.best);
    return out;
  }

  // k = 0 always gives p = 0
  std::vector<mpz_class> zero(kc, 0);
  out.best = engineered_value(g, x, n, zero);
  auto boxes = boxes_around(*g.U, x, n - 1, b.set_steps);

  std::vector<mpq_class> per_budget;
  for (int shift : {2, 1, 0}) {
    mpz_class bound = b.nat_bound >> shift;
    if (bound < 1) bound = 1;
    auto cand = best_witness(boxes, x, bound);
    per_budget.push_back(cand ? cand->value : mpq_class(0));
    if (shift == 0 && cand && cand->value > 0) {
      mpq_class confirmed = engineered_value(g, x, n, cand->k);
      if (confirmed != cand->value)
        throw std::logic_error("oracle rejected a witness the ball test accepted");
      out.best = confirmed;
      out.witness = cand->k;
    }
  }
  out.growth_in_budget = per_budget[0] <= per_budget[1] && per_budget[1] <= per_budget[2];

  if (out.best <= 0) {
    out.cls = out.best == 0 ? ExtRealClass::of(K::ValueZero) : ExtRealClass::of(K::Finite, out.best);
    return out;
  }

  auto scaled = [&](const mpz_class& t) {
    std::vector<mpz_class> k = out.witness;
    for (auto& v : k) v *= t;
    return engineered_value(g, x, n, k);
  };
  mpq_class p1 = scaled(1), p2 = scaled(2), p3 = scaled(3);
  out.growth_in_t = p1 < p2 && p2 < p3;

  // least t with t^3 best > T
  mpq_class ratio = b.threshold / out.best;
  mpz_class t = 1;
  while (mpq_class(t * t * t) <= ratio) t *= 2;
  mpz_class lo = t / 2, hi = t;
  while (lo + 1 < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (mpq_class(mid * mid * mid) <= ratio) lo = mid; else hi = mid;
  }
  out.t = hi;
  out.amplified = scaled(hi);
  if (*out.amplified > b.threshold && out.growth_in_t && out.growth_in_budget)
    out.cls = ExtRealClass::of(K::ExceedsThreshold, b.threshold);
  else
    out.cls = ExtRealClass::of(K::LowerBoundSoFar, out.best);
  return out;
}

ExtRealClass sup_inf_eval(const forge::Indicator& f, const std::vector<mpq_class>& x, const Budget& b,
                          std::size_t n_max) {
  bool all_exceed = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    ExtRealClass c = engineered_sup(f.base, x, n, b).cls;
    if (c.kind == K::ValueZero) return ExtRealClass::of(K::ValueZero);
    if (n > 0 && c.kind != K::ExceedsThreshold) all_exceed = false;
  }
  if (all_exceed) return ExtRealClass::of(K::ValueOne, 1);
  return ExtRealClass::of(K::UpperBoundSoFar, 1);
}

}  // namespace polyforge::evaluate
