#include "shiftgeom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {
namespace {

using boost::multiprecision::pow;

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  if (exp > std::numeric_limits<unsigned>::max()) throw ResourceCapError("exponent too large");
  return pow(BigInt(base), static_cast<unsigned>(exp));
}

// m^3 (m/(m-1))^(3m) < k^(2am), raised to the power den(a).
bool threshold_condition(std::uint64_t m, const Rational& k, const Rational& a) {
  const auto an = static_cast<std::uint64_t>(a.num()), ad = static_cast<std::uint64_t>(a.den());
  const auto kn = static_cast<std::uint64_t>(k.num()), kd = static_cast<std::uint64_t>(k.den());
  const double md = static_cast<double>(m);
  const double lhs = 3.0 * ad * (std::log(md) + md * std::log(md / (md - 1)));
  const double rhs = 2.0 * an * md * std::log(k.to_double());
  if (std::abs(lhs - rhs) > 1e-6 * std::max(lhs, rhs)) return lhs < rhs;
  BigInt left = big_pow(m, 3 * ad + 3 * m * ad) * big_pow(kd, 2 * an * m);
  BigInt right = big_pow(m - 1, 3 * m * ad) * big_pow(kn, 2 * an * m);
  return left < right;
}

// C(n, n/m)^den(a) * den(k)^(n num(a)) <= num(k)^(n num(a)), for n = m j.
bool threshold_holds(std::uint64_t m, std::uint64_t j, const Rational& k, const Rational& a) {
  const auto an = static_cast<std::uint64_t>(a.num()), ad = static_cast<std::uint64_t>(a.den());
  const std::uint64_t n = m * j;
  BigInt left = pow(binomial(n, j), static_cast<unsigned>(ad)) * big_pow(static_cast<std::uint64_t>(k.den()), n * an);
  return left <= big_pow(static_cast<std::uint64_t>(k.num()), n * an);
}

}  // namespace

bool verify_stirling_bound(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  if (n == 0 || p == 0 || p >= m) throw InputError("stirling bound needs n >= 1 and 0 < p < m");
  const BigInt b = binomial(m * n, p * n);
  const BigInt num = big_pow(m, m * n);
  const BigInt den = big_pow(m - p, (m - p) * n) * big_pow(p, p * n);
  // Squared form: pi < num^2 m / (2 b^2 n (m-p) p den^2).
  static const BigInt kPiUpper("314159265358979323846264338327950289");
  static const BigInt kScale = pow(BigInt(10), 35);
  return kPiUpper * 2 * b * b * n * (m - p) * p * den * den < num * num * m * kScale;
}

Threshold binomial_exponential_threshold(const Rational& k, const Rational& a) {
  if (k <= Rational(1)) throw InputError("threshold needs k > 1");
  if (a <= Rational(0)) throw InputError("threshold needs a > 0");
  Threshold out;
  for (std::uint64_t m = 2; m <= kThresholdCap && out.m == 0; ++m) {
    if (threshold_condition(m, k, a)) out.m = m;
  }
  if (out.m == 0) throw ResourceCapError("no m up to " + std::to_string(kThresholdCap));

  constexpr std::uint64_t kMaxStart = 4096;
  std::vector<signed char> cache(1, 0);
  auto holds = [&](std::uint64_t j) {
    if (j >= cache.size()) cache.resize(j + 1, -1);
    if (cache[j] < 0) cache[j] = threshold_holds(out.m, j, k, a) ? 1 : 0;
    return cache[j] == 1;
  };
  std::uint64_t start = 1;
  for (;;) {
    if (start > kMaxStart) throw ResourceCapError("no verified n0 below " + std::to_string(kMaxStart * out.m));
    std::uint64_t failed = 0;
    for (std::uint64_t j = 8 * start; j >= start; --j) {
      if (!holds(j)) {
        failed = j;
        break;
      }
    }
    if (failed == 0) break;
    start = failed + 1;
  }
  out.n0 = start * out.m;
  return out;
}

NeighborhoodCount neighborhood_count(const Alphabet& alphabet, std::string_view w, std::size_t n,
                                     const Rational& eps) {
  alphabet.validate(w);
  if (w.empty()) throw InputError("period word is empty");
  if (eps < Rational(0) || eps > Rational(1)) throw InputError("eps must lie in [0, 1]");
  if (n > kMaxNeighborhoodLength) throw ResourceCapError("n exceeds " + std::to_string(kMaxNeighborhoodLength));
  const std::size_t k = alphabet.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= k;
    if (total > (std::uint64_t{1} << 26)) throw ResourceCapError("too many words to enumerate");
  }
  const auto n64 = static_cast<std::int64_t>(n);
  const auto radius = static_cast<std::size_t>(eps.floor_mul(n64));
  const auto ceil_exp = static_cast<std::uint64_t>((eps * Rational(n64)).ceil());

  std::set<std::vector<std::size_t>> factor_set;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<std::size_t> f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = alphabet.index(w[(i + j) % w.size()]);
    factor_set.insert(std::move(f));
  }
  std::vector<std::vector<std::size_t>> factors(factor_set.begin(), factor_set.end());

  NeighborhoodCount out;
  std::vector<std::size_t> v(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (const auto& f : factors) {
      std::size_t h = 0;
      for (std::size_t j = 0; j < n && h <= radius; ++j) h += v[j] != f[j];
      if (h <= radius) {
        ++out.count;
        break;
      }
    }
    for (std::size_t j = n; j-- > 0;) {
      if (++v[j] < k) break;
      v[j] = 0;
    }
  }
  out.bound = BigInt(w.size()) * binomial(n, radius) * big_pow(k, ceil_exp);
  out.ok = BigInt(out.count) <= out.bound;
  return out;
}

}  // namespace shiftgeom
