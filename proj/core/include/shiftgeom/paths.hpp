#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shiftgeom/alphabet.hpp"
#include "shiftgeom/rational.hpp"

namespace shiftgeom {

inline constexpr char kStar = '*';

/// Fills the j-th star of `x` with y_j. Throws InputError if `y` runs out.
std::string intersperse(std::string_view x, std::string_view y);

/// Binary digits of r in [0,1), terminating expansion for dyadic r.
std::vector<int> dyadic_digits(const Rational& r, std::size_t count);

/// First n symbols of U(r), r in [0,1].
Word u_prefix(const Rational& r, std::size_t n);
/// Window [-n, n] of T(r); index k holds coordinate k - n.
Word t_window(const Rational& r, std::size_t n);

/// Half-open block [begin, end) of the dyadic partition 2^(k-1)-1 <= t < 2^k-1.
struct Block {
  std::uint64_t begin;
  std::uint64_t end;
  std::uint64_t length() const { return end - begin; }
};
Block block_of(std::uint64_t t);

/// First n symbols of U'(r): each block of length l holds 0^floor(rl) 1^(l-floor(rl)).
Word uprime_prefix(const Rational& r, std::size_t n);
Word tprime_window(const Rational& r, std::size_t n);

/// t -> (1 + t/(1+|t|))/2, a bijection from the rationals onto (0,1) ∩ Q.
Rational squash(const Rational& t);

struct EmbeddedPoint {
  Word word;
  /// Coordinates that own no position below n.
  std::vector<std::size_t> unrepresented;
};

/// Coordinate k of v goes, squashed, into the positions congruent to 2^k
/// modulo 2^(k+1) as a U-fill; positions left over hold '0'.
EmbeddedPoint embed_point(std::span<const Rational> v, std::size_t n);

/// The dyadic rational (g() >> 11) / 2^53 for g a 64-bit Mersenne twister seeded with `seed`.
Rational sample_uniform(std::uint64_t seed);
/// tprime_window(sample_uniform(seed), n).
Word sample_measure(std::uint64_t seed, std::size_t n);

}  // namespace shiftgeom
