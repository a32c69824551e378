#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "shiftgeom/configuration.hpp"
#include "shiftgeom/presentation.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom::fixtures {

inline const Alphabet& binary() {
  static const Alphabet a("01");
  return a;
}

inline ShiftPresentation golden_mean() { return compile_sft({binary(), {"11"}}); }
/// Even number of 0s between any two 1s.
inline ShiftPresentation even_shift() { return concatenation_shift(binary(), {"1", "00"}); }
inline ShiftPresentation full_binary() { return full_shift(binary()); }

/// Points whose even coordinates are 0: closure of the blocks 00 and 01,
/// with coordinate 0 at a block start.
inline ShiftPresentation block_shift() {
  return ShiftPresentation(binary(), {"A", "B"}, {{0, 1, 0}, {1, 0, 0}, {1, 0, 1}});
}

inline Word random_word(std::mt19937_64& rng, const Alphabet& a, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, a.size() - 1);
  Word w(len(rng), ' ');
  for (char& c : w) c = a.symbol(sym(rng));
  return w;
}

inline Configuration random_config(std::mt19937_64& rng, const Alphabet& a, std::size_t max_period = 4,
                                   std::size_t max_finite = 5) {
  return Configuration(a, random_word(rng, a, 1, max_period), random_word(rng, a, 0, max_finite),
                       random_word(rng, a, 0, max_finite), random_word(rng, a, 1, max_period));
}

/// Random presentation on `states` states with each possible edge kept with probability 1/2.
inline ShiftPresentation random_presentation(std::mt19937_64& rng, const Alphabet& a, std::size_t states) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("q" + std::to_string(i));
  std::vector<Edge> edges;
  std::bernoulli_distribution keep(0.5);
  for (std::size_t s = 0; s < states; ++s) {
    for (std::size_t t = 0; t < states; ++t) {
      for (std::size_t l = 0; l < a.size(); ++l) {
        if (keep(rng)) edges.push_back({s, t, l});
      }
    }
  }
  return ShiftPresentation(a, names, edges);
}

}  // namespace shiftgeom::fixtures
