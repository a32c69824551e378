#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "shiftgeom/alphabet.hpp"
#include "shiftgeom/rational.hpp"

namespace shiftgeom {

/// Whether C(mn, pn) < m^(mn+1/2) / (sqrt(2 pi n) (m-p)^((m-p)n+1/2) p^(pn+1/2)).
/// Exact except for pi, which is bracketed by 35-digit rational bounds;
/// an undecided comparison reports false.
bool verify_stirling_bound(std::uint64_t n, std::uint64_t m, std::uint64_t p);

struct Threshold {
  std::uint64_t m = 0;
  std::uint64_t n0 = 0;
};

inline constexpr std::uint64_t kThresholdCap = std::uint64_t{1} << 16;

/// Least m with m^3 (m/(m-1))^(3m) < k^(2am), and the least multiple n0 of m
/// such that C(n, n/m) <= k^(na) for every multiple n of m in [n0, 8 n0].
Threshold binomial_exponential_threshold(const Rational& k, const Rational& a);

struct NeighborhoodCount {
  std::uint64_t count = 0;
  BigInt bound;
  bool ok = false;
};

inline constexpr std::size_t kMaxNeighborhoodLength = 22;

/// Words v of length n within Hamming distance n*eps of a length-n factor of
/// the periodic point with period word w, against p C(n, floor(n eps)) |Σ|^ceil(n eps).
NeighborhoodCount neighborhood_count(const Alphabet& alphabet, std::string_view w, std::size_t n,
                                     const Rational& eps);

}  // namespace shiftgeom
