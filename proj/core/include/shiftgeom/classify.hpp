#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftgeom/automaton.hpp"
#include "shiftgeom/configuration.hpp"
#include "shiftgeom/presentation.hpp"
#include "shiftgeom/rational.hpp"

namespace shiftgeom {

struct Witness {
  Configuration x;
  Configuration y;
  Rational d_in;
  Rational d_out;
};

/// f = shift^n after the symbol permutation g: f(x)_i = g(x_{i+n}).
struct Decomposition {
  int shift;
  std::vector<std::size_t> permutation;
};

struct ClassificationReport {
  Neighborhood minimal;
  bool contracting = false;
  bool isometric = false;
  bool expanding = false;
  std::optional<Decomposition> decomposition;
  /// Pair whose distance f strictly increases, present iff not contracting.
  std::optional<Witness> witness;
};

ClassificationReport classify_full_shift(const CellularAutomaton& f);
/// Throws PreconditionError if f is not an isometry of the full shift.
Decomposition isometry_decomposition(const CellularAutomaton& f);

struct PropertyCheck {
  bool violated = false;
  std::optional<Witness> witness;
};

struct SubshiftVerdict {
  std::size_t period_bound = 0;
  std::size_t points = 0;
  std::size_t orbits = 0;
  std::size_t pairs = 0;
  PropertyCheck contracting;
  PropertyCheck isometric;
  PropertyCheck expanding;
};

/// Exhaustive scan of pairs of periodic points of X with period <= P,
/// up to simultaneous shift. Reports the first violating pair per property
/// in scan order. Throws PreconditionError if f does not preserve X.
SubshiftVerdict check_on_subshift(const CellularAutomaton& f, const ShiftPresentation& x, std::size_t period_bound);

struct RigidityVerdict {
  bool pass = false;
  std::string reason;
  std::optional<Word> word;
  std::optional<char> symbol;
  /// Largest period needed for any (word, symbol) pair.
  std::size_t largest_period = 0;
};

/// Bounded check that every factor w of length <= L and symbol s in w admit
/// a p <= P with w in some p-periodic point of X and (s zero^(p-1)) periodic in X.
RigidityVerdict rigidity_precondition(const ShiftPresentation& x, char zero, std::size_t max_length,
                                      std::size_t period_bound);

}  // namespace shiftgeom
