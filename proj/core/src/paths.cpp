#include "shiftgeom/paths.hpp"

#include <bit>
#include <random>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {
namespace {

void require_unit(const Rational& r) {
  if (r < 0 || r > 1) throw PreconditionError("parameter " + r.str() + " is outside [0,1]");
}

template <typename Prefix>
Word mirrored(const Rational& r, std::size_t n, Prefix prefix) {
  Word u = prefix(r, n + 1);
  Word out(2 * n + 1, '0');
  for (std::size_t i = 0; i <= n; ++i) out[n + i] = u[i];
  for (std::size_t i = 0; i < n; ++i) out[n - 1 - i] = u[i];
  return out;
}

}  // namespace

std::string intersperse(std::string_view x, std::string_view y) {
  std::string out(x);
  std::size_t j = 0;
  for (char& c : out) {
    if (c != kStar) continue;
    if (j >= y.size()) throw InputError("intersperse: second argument exhausted");
    c = y[j++];
  }
  return out;
}

std::vector<int> dyadic_digits(const Rational& r, std::size_t count) {
  if (r < 0 || r >= 1) throw PreconditionError("dyadic digits need r in [0,1)");
  std::vector<int> out;
  out.reserve(count);
  __extension__ unsigned __int128 num = static_cast<std::uint64_t>(r.num());
  const auto den = static_cast<std::uint64_t>(r.den());
  for (std::size_t i = 0; i < count; ++i) {
    num *= 2;
    int d = num >= den;
    if (d) num -= den;
    out.push_back(d);
  }
  return out;
}

Word u_prefix(const Rational& r, std::size_t n) {
  require_unit(r);
  if (r == 1) return Word(n, '1');
  __extension__ unsigned __int128 num = static_cast<std::uint64_t>(r.num());
  const auto den = static_cast<std::uint64_t>(r.den());
  Word x(n, kStar);
  std::vector<std::size_t> stars(n);
  for (std::size_t i = 0; i < n; ++i) stars[i] = i;
  while (!stars.empty()) {
    num *= 2;
    const bool one = num >= den;
    if (one) num -= den;
    std::vector<std::size_t> left;
    left.reserve(stars.size() / 2 + 1);
    for (std::size_t j = 0; j < stars.size(); ++j) {
      if (one) {
        if (j % 2 == 1) x[stars[j]] = '1';
        else left.push_back(stars[j]);
      } else {
        if (j % 2 == 0) x[stars[j]] = '0';
        else left.push_back(stars[j]);
      }
    }
    stars = std::move(left);
  }
  return x;
}

Word t_window(const Rational& r, std::size_t n) { return mirrored(r, n, u_prefix); }

Block block_of(std::uint64_t t) {
  const unsigned k = static_cast<unsigned>(std::bit_width(t + 1));
  const std::uint64_t begin = (std::uint64_t{1} << (k - 1)) - 1;
  return {begin, (std::uint64_t{1} << k) - 1};
}

Word uprime_prefix(const Rational& r, std::size_t n) {
  require_unit(r);
  Word out(n, '1');
  for (std::uint64_t t = 0; t < n;) {
    Block b = block_of(t);
    const auto zeros = static_cast<std::uint64_t>(r.floor_mul(static_cast<std::int64_t>(b.length())));
    for (std::uint64_t i = b.begin; i < b.end && i < n; ++i) out[i] = i - b.begin < zeros ? '0' : '1';
    t = b.end;
  }
  return out;
}

Word tprime_window(const Rational& r, std::size_t n) { return mirrored(r, n, uprime_prefix); }

Rational squash(const Rational& t) { return (1 + t / (1 + abs(t))) / 2; }

EmbeddedPoint embed_point(std::span<const Rational> v, std::size_t n) {
  if (v.empty()) throw PreconditionError("embed_point needs at least one coordinate");
  if (v.size() > 62) throw ResourceCapError("embed_point supports at most 62 coordinates");
  EmbeddedPoint out{Word(n, '0'), {}};
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::uint64_t step = std::uint64_t{1} << (k + 1);
    const std::uint64_t first = std::uint64_t{1} << k;
    std::vector<std::size_t> positions;
    for (std::uint64_t i = first; i < n; i += step) positions.push_back(static_cast<std::size_t>(i));
    if (positions.empty()) {
      out.unrepresented.push_back(k);
      continue;
    }
    Word fill = u_prefix(squash(v[k]), positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j) out.word[positions[j]] = fill[j];
  }
  return out;
}

Rational sample_uniform(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::uint64_t bits = gen() >> 11;
  return Rational(static_cast<std::int64_t>(bits), std::int64_t{1} << 53);
}

Word sample_measure(std::uint64_t seed, std::size_t n) { return tprime_window(sample_uniform(seed), n); }

}  // namespace shiftgeom
