#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "shiftgeom/alphabet.hpp"
#include "shiftgeom/presentation.hpp"
#include "shiftgeom/rational.hpp"

namespace shiftgeom {

/// Markov measure on a deterministic presentation.
struct MarkovMeasure {
  ShiftPresentation presentation;
  /// transition[e]: probability of edge e given its source state.
  std::vector<double> transition;
  std::vector<double> stationary;
  double eigenvalue = 0;
  std::size_t iterations = 0;

  /// Largest |row sum - 1|.
  double stochasticity_residual() const;
  /// Largest |(stationary * P) - stationary| entry.
  double stationarity_residual() const;
};

inline constexpr std::size_t kPowerIterationCap = 200000;

/// Maximal-entropy measure on the Shannon cover of an irreducible X.
MarkovMeasure parry_measure(const ShiftPresentation& x);

/// mu([w]); 0 for words outside the language.
double cylinder(const MarkovMeasure& mu, std::string_view w);

struct BoundCertificate {
  Rational gamma;
  std::size_t t = 0;
  std::size_t verified_length = 0;
  std::size_t words_checked = 0;
};

/// Smallest t <= 4 with every length-t path product below 1; throws
/// PreconditionError when none exists.
BoundCertificate gamma_t_bound(const MarkovMeasure& mu, std::size_t max_length);

/// Independent check that mu([w]) <= gamma^n for all w of length t*n <= L.
bool verify_certificate(const MarkovMeasure& mu, const BoundCertificate& cert);

/// N symbols drawn uniformly from a 64-bit Mersenne twister seeded with `seed`.
Word bernoulli_prefix(const Alphabet& alphabet, std::uint64_t seed, std::size_t n);

}  // namespace shiftgeom
