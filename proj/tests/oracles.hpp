#pragma once

// Brute-force reference computations shared by unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftgeom/configuration.hpp"
#include "shiftgeom/metrics.hpp"
#include "shiftgeom/rational.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom::oracles {

struct Arms {
  Rational left, right;
};

// Mismatch density of each arm over one common period placed beyond both finite parts.
inline Arms arms(const Configuration& x, const Configuration& y) {
  const std::int64_t k = std::max({-x.left_boundary(), -y.left_boundary(), x.right_boundary(), y.right_boundary()});
  const auto lr = static_cast<std::int64_t>(std::lcm(x.right_period().size(), y.right_period().size()));
  const auto ll = static_cast<std::int64_t>(std::lcm(x.left_period().size(), y.left_period().size()));
  auto h = [](const Word& a, const Word& b) { return static_cast<std::int64_t>(hamming(a, b)); };
  return {Rational(h(x.window(-k - ll, -k - 1), y.window(-k - ll, -k - 1)), ll),
          Rational(h(x.window(k, k + lr - 1), y.window(k, k + lr - 1)), lr)};
}

inline Rational d_besicovitch(const Configuration& x, const Configuration& y) {
  auto a = arms(x, y);
  return (a.left + a.right) / Rational(2);
}

inline Rational d_weyl(const Configuration& x, const Configuration& y) {
  auto a = arms(x, y);
  return std::max(a.left, a.right);
}

/// Least d_B from x to a periodic point of y with period at most p.
inline std::optional<Rational> periodic_distance(const Configuration& x, const ShiftPresentation& y, std::size_t p) {
  std::optional<Rational> best;
  for (std::size_t q = 1; q <= p; ++q) {
    for (const auto& w : periodic_words(y, q)) {
      Rational d = shiftgeom::d_besicovitch(x, Configuration::periodic(y.alphabet(), w));
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

inline std::vector<Word> all_words(const Alphabet& a, std::size_t n) {
  std::vector<Word> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= a.size();
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(a.word_from_index(i, n));
  return out;
}

/// Some w of length n with uwv in the language.
inline bool connects(const ShiftPresentation& x, const Word& u, const Word& v, std::size_t n) {
  for (const auto& w : all_words(x.alphabet(), n)) {
    if (in_language(x, u + w + v)) return true;
  }
  return false;
}

/// Least m such that all u, v of length <= 3 connect at every length m..max_length,
/// or max_length + 1 if none does.
inline std::size_t connecting_distance(const ShiftPresentation& x, std::size_t max_length) {
  std::vector<Word> words;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& w : language(x, k)) words.push_back(w);
  }
  std::vector<bool> good(max_length + 1, true);
  for (std::size_t n = 0; n <= max_length; ++n) {
    for (const auto& u : words) {
      for (const auto& v : words) {
        if (good[n] && !connects(x, u, v, n)) good[n] = false;
      }
    }
  }
  std::size_t m = max_length + 1;
  while (m > 0 && good[m - 1]) --m;
  return m;
}

/// Elementary rule applied cyclically to a period word.
inline std::string eca_image(unsigned rule, const std::string& w) {
  const std::size_t p = w.size();
  std::string out(p, '0');
  for (std::size_t i = 0; i < p; ++i) {
    unsigned l = w[(i + p - 1) % p] - '0', c = w[i] - '0', r = w[(i + 1) % p] - '0';
    out[i] = static_cast<char>('0' + (rule >> (4 * l + 2 * c + r) & 1));
  }
  return out;
}

inline std::vector<std::string> primitive_binary_words(std::size_t max_period) {
  std::vector<std::string> out;
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (const auto& w : all_words(Alphabet("01"), p)) {
      if (is_primitive(w)) out.push_back(w);
    }
  }
  return out;
}

struct EcaVerdict {
  bool contracting = true, isometric = true, expanding = true;
};

// All pairs of periodic points up to simultaneous shift, compared by mismatch counts over lcm.
inline EcaVerdict eca_periodic_pairs(unsigned rule, const std::vector<std::string>& words) {
  EcaVerdict v;
  std::vector<std::pair<std::string, std::string>> pts;
  for (const auto& w : words) pts.emplace_back(w, eca_image(rule, w));
  for (const auto& x : pts) {
    if (least_rotation(Alphabet("01"), x.first) != x.first) continue;
    for (const auto& y : pts) {
      if (&x == &y) continue;
      const std::size_t px = x.first.size(), py = y.first.size(), len = std::lcm(px, py);
      std::size_t in = 0, out = 0;
      for (std::size_t i = 0; i < len; ++i) {
        in += x.first[i % px] != y.first[i % py];
        out += x.second[i % px] != y.second[i % py];
      }
      if (out > in) v.contracting = false;
      if (out < in) v.expanding = false;
      if (out != in) v.isometric = false;
      if (!v.contracting && !v.expanding) return v;
    }
  }
  return v;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Binary words of length n within Hamming distance n*eps of a length-n factor of inf(w)inf.
inline std::uint64_t neighborhood_size(std::string_view w, std::size_t n, const Rational& eps) {
  std::vector<std::string> factors;
  for (std::size_t s = 0; s < w.size(); ++s) {
    std::string f;
    for (std::size_t i = 0; i < n; ++i) f += w[(s + i) % w.size()];
    factors.push_back(f);
  }
  const Rational radius = eps * Rational(static_cast<std::int64_t>(n));
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    for (const auto& f : factors) {
      std::int64_t h = 0;
      for (std::size_t i = 0; i < n; ++i) h += ((v >> i) & 1) != static_cast<std::uint64_t>(f[i] - '0');
      if (Rational(h) <= radius) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace shiftgeom::oracles
