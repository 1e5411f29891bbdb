#include "polyforge/coding/pairing.hpp"

#include <cmath>

#include "polyforge/error.hpp"

namespace polyforge::coding {

namespace {

using u128 = unsigned __int128;

constexpr u128 kWordLimit = u128(1) << 62;

bool fits(const mpz_class& v, std::size_t bits) {
  const __mpz_struct* z = v.get_mpz_t();
  if (z->_mp_size == 0) return true;
  if (z->_mp_size < 0) return false;
  auto limbs = static_cast<std::size_t>(z->_mp_size);
  std::size_t full = bits / 64, rest = bits % 64;
  if (limbs <= full) return true;
  if (limbs > full + 1) return false;
  return rest != 0 && (z->_mp_d[full] >> rest) == 0;
}

u128 get_u128(const mpz_class& v) {
  const __mpz_struct* z = v.get_mpz_t();
  if (z->_mp_size == 0) return 0;
  u128 lo = z->_mp_d[0];
  u128 hi = z->_mp_size > 1 ? z->_mp_d[1] : 0;
  return (hi << 64) | lo;
}

[[gnu::always_inline]] inline void set_u128(mpz_class& out, u128 v) {
  __mpz_struct* z = out.get_mpz_t();
  auto hi = static_cast<mp_limb_t>(v >> 64);
  auto lo = static_cast<mp_limb_t>(v);
  int size = hi ? 2 : lo ? 1 : 0;
  if (z->_mp_alloc < size) _mpz_realloc(z, size);
  if (size > 0) z->_mp_d[0] = lo;
  if (size > 1) z->_mp_d[1] = hi;
  z->_mp_size = size;
}

[[gnu::always_inline]] inline void set_u64(mpz_class& out, std::uint64_t v) {
  __mpz_struct* z = out.get_mpz_t();
  if (z->_mp_alloc < 1) _mpz_realloc(z, 1);
  z->_mp_d[0] = v;
  z->_mp_size = v != 0;
}

// n < 2^62; below 2^52 the rounded double root already has the right floor
[[gnu::always_inline]] inline std::uint64_t isqrt64(std::uint64_t n) {
  auto u = static_cast<std::uint64_t>(
      static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(static_cast<std::int64_t>(n)))));
  if (n < (std::uint64_t(1) << 52)) return u;
  while (u * u > n) --u;
  while ((u + 1) * (u + 1) <= n) ++u;
  return u;
}

// floor(sqrt(n)) for n < 2^122: a double estimate, one Newton step on the
// exact residual when the estimate can be far off, then unit corrections
std::uint64_t isqrt(u128 n) {
  auto hi = static_cast<std::uint64_t>(n >> 64);
  if (hi == 0 && static_cast<std::uint64_t>(n) < (std::uint64_t(1) << 62))
    return isqrt64(static_cast<std::uint64_t>(n));
  constexpr std::uint64_t kLow = (std::uint64_t(1) << 60) - 1;
  double x = static_cast<double>(static_cast<std::int64_t>(n >> 60)) * 1152921504606846976.0 +
             static_cast<double>(static_cast<std::int64_t>(static_cast<std::uint64_t>(n) & kLow));
  auto r = static_cast<std::uint64_t>(static_cast<std::int64_t>(__builtin_sqrt(x)));
  if (r >= (std::uint64_t(1) << 54)) {
    auto e = static_cast<__int128>(n - u128(r) * r);
    r += static_cast<std::int64_t>(static_cast<double>(e) / (2.0 * static_cast<double>(r)));
  }
  while (u128(r) * r > n) --r;
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// c < 2^119
[[gnu::always_inline]] inline std::pair<u128, u128> cantor_unpair_small(u128 c) {
  if (c < (u128(1) << 58)) {
    auto c64 = static_cast<std::uint64_t>(c);
    std::uint64_t w = (isqrt64(8 * c64 + 1) - 1) / 2;
    std::uint64_t y = c64 - w * (w + 1) / 2;
    return {w - y, y};
  }
  std::uint64_t w = (isqrt(8 * c + 1) - 1) / 2;
  u128 y = c - u128(w) * (w + 1) / 2;
  return {w - y, y};
}

// v as a machine word when 0 <= v < 2^61; throws on negative v
[[gnu::always_inline]] inline bool small_word(const mpz_class& v, std::uint64_t& out) {
  const __mpz_struct* z = v.get_mpz_t();
  if (z->_mp_size < 0) throw std::invalid_argument("pairing of a negative number");
  if (z->_mp_size == 0) {
    out = 0;
    return true;
  }
  if (z->_mp_size > 1 || z->_mp_d[0] >= (std::uint64_t(1) << 61)) return false;
  out = z->_mp_d[0];
  return true;
}

}  // namespace

mpz_class cantor_pair(const mpz_class& x, const mpz_class& y) {
  if (x < 0 || y < 0) throw std::invalid_argument("pairing of a negative number");
  mpz_class s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<mpz_class, mpz_class> cantor_unpair(const mpz_class& c) {
  if (c < 0) throw std::invalid_argument("unpairing of a negative number");
  if (fits(c, 119)) {
    auto [x, y] = cantor_unpair_small(get_u128(c));
    std::pair<mpz_class, mpz_class> out;
    set_u128(out.first, x);
    set_u128(out.second, y);
    return out;
  }
  mpz_class w = sqrt(8 * c + 1);
  w = (w - 1) / 2;
  mpz_class t = w * (w + 1) / 2;
  mpz_class y = c - t;
  return {w - y, y};
}

mpz_class pair2(const mpz_class& x, const mpz_class& y) {
  if (x < 0 || y < 0) throw std::invalid_argument("pairing of a negative number");
  mpz_class s = x + y;
  return s * (s + 1) + 2 * y;
}

std::pair<mpz_class, mpz_class> unpair2(const mpz_class& v) {
  if (v < 0 || mpz_odd_p(v.get_mpz_t())) throw NotInImage(v.get_str() + " is not a J2 value");
  return cantor_unpair(v / 2);
}

void pairN_into(std::span<const mpz_class> xs, mpz_class& out) {
  if (xs.size() < 2) throw std::invalid_argument("pairN needs at least two arguments");
  // machine-word fold while the accumulator stays below 2^62
  std::size_t i = 0;
  std::uint64_t first;
  if (small_word(xs[0], first)) {
    u128 acc = first;
    std::uint64_t y;
    while (i + 1 < xs.size() && acc < kWordLimit && small_word(xs[i + 1], y)) {
      std::uint64_t s = static_cast<std::uint64_t>(acc) + y;
      acc = u128(s) * (s + 1) + 2 * u128(y);
      ++i;
    }
    if (i > 0) set_u128(out, acc);
  }
  if (i == 0) {
    out = pair2(xs[0], xs[1]);
    i = 1;
  }
  for (++i; i < xs.size(); ++i) out = pair2(out, xs[i]);
}

mpz_class pairN(const std::vector<mpz_class>& xs) {
  mpz_class v;
  pairN_into(xs, v);
  return v;
}

void unpairN_into(const mpz_class& v, std::span<mpz_class> out) {
  std::size_t n = out.size();
  if (n < 2) throw std::invalid_argument("unpairN needs n >= 2");
  if (mpz_sgn(v.get_mpz_t()) < 0) throw NotInImage(v.get_str() + " is not a J2 value");
  std::size_t i = n - 1;
  mpz_class cur;
  const mpz_class* top = &v;
  for (; !fits(*top, 120); --i) {
    auto [rest, last] = unpair2(*top);
    out[i] = last;
    if (i == 1) {
      out[0] = rest;
      return;
    }
    cur = rest;
    top = &cur;
  }
  u128 c = get_u128(*top);
  for (; c >= (u128(1) << 59); --i) {
    if (c & 1) throw NotInImage(v.get_str() + " is not a J2 value");
    auto [rest, last] = cantor_unpair_small(c / 2);
    set_u128(out[i], last);
    if (i == 1) {
      set_u128(out[0], rest);
      return;
    }
    c = rest;
  }
  auto w = static_cast<std::uint64_t>(c);
  for (;; --i) {
    if (w & 1) throw NotInImage(v.get_str() + " is not a J2 value");
    std::uint64_t h = w / 2;
    std::uint64_t s = (isqrt64(8 * h + 1) - 1) / 2;
    std::uint64_t y = h - s * (s + 1) / 2;
    set_u64(out[i], y);
    if (i == 1) {
      set_u64(out[0], s - y);
      return;
    }
    w = s - y;
  }
}

std::vector<mpz_class> unpairN(const mpz_class& v, std::size_t n) {
  if (n < 2) throw std::invalid_argument("unpairN needs n >= 2");
  std::vector<mpz_class> out(n);
  unpairN_into(v, out);
  return out;
}

}  // namespace polyforge::coding
