#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftgeom/configuration.hpp"
#include "shiftgeom/presentation.hpp"
#include "shiftgeom/rational.hpp"

namespace shiftgeom {

/// Subset of a sofic shift: the points that can pass through one of the
/// anchor states at coordinate 0. With every state as an anchor this is
/// the whole shift.
class PointedSet {
 public:
  explicit PointedSet(ShiftPresentation shift);
  PointedSet(ShiftPresentation shift, StateSet anchors);
  /// Anchors by state name; names not present after trimming are ignored.
  PointedSet(ShiftPresentation shift, const std::vector<std::string>& anchor_names);

  const ShiftPresentation& shift() const { return shift_; }
  const StateSet& anchors() const { return anchors_; }
  bool is_shift_invariant() const;
  bool contains(const Configuration& x) const;
  /// Points of least period exactly p, in alphabet order of their period word.
  std::vector<Configuration> periodic_points(std::size_t p) const;

 private:
  ShiftPresentation shift_;
  StateSet anchors_;
};

struct MinimizerSet {
  Rational distance;
  /// Every minimizing periodic point; distinct periodic points are never
  /// at d_B distance zero, so each one is its own class.
  std::vector<Configuration> points;
  /// Alphabet-least rotation of each orbit met among `points`.
  std::vector<Configuration> orbit_representatives;
  std::size_t period_bound = 0;
};

/// Periodic points of X with period <= P closest to the periodic point y.
MinimizerSet nearest_periodic(const PointedSet& x, const Configuration& y, std::size_t period_bound);

struct UapVerdict {
  std::size_t period_bound = 0;
  bool violation = false;
  std::optional<Configuration> witness;
  std::optional<MinimizerSet> minimizers;
};

/// Searches periodic y (period <= P, shortest then alphabet-least first)
/// for one with two or more nearest periodic points.
UapVerdict uap_search(const PointedSet& x, std::size_t period_bound);

}  // namespace shiftgeom
