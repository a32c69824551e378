#pragma once

#include <cstdint>
#include <optional>

#include "shiftgeom/configuration.hpp"
#include "shiftgeom/presentation.hpp"
#include "shiftgeom/rational.hpp"

namespace shiftgeom {

/// Asymptotic mismatch densities of the two arms of a pair.
struct ArmDensities {
  Rational left;
  Rational right;
};

ArmDensities arm_densities(const Configuration& x, const Configuration& y);

/// 2^-d with d the least |i| where the points differ; 0 for equal points.
Rational d_cantor(const Configuration& x, const Configuration& y);
Rational d_besicovitch(const Configuration& x, const Configuration& y);
Rational d_weyl(const Configuration& x, const Configuration& y);

/// Something that can produce windows x_[a,b] over a known range.
class WindowSource {
 public:
  /// Unbounded source backed by a configuration.
  static WindowSource of(const Configuration& x);
  /// Finite source: `w` occupies coordinates [first, first + |w|).
  static WindowSource of(Word w, std::int64_t first);

  bool covers(std::int64_t a, std::int64_t b) const;
  /// Throws PreconditionError outside the covered range.
  Word window(std::int64_t a, std::int64_t b) const;

 private:
  std::optional<Configuration> config_;
  Word word_;
  std::int64_t first_ = 0;
};

/// H(x_[-N,N], y_[-N,N]) / (2N+1).
Rational density_estimate(const WindowSource& x, const WindowSource& y, std::int64_t n);
/// max over m in [-M,M] of H(x_[m-n,m+n], y_[m-n,m+n]) / (2n+1).
Rational weyl_estimate(const WindowSource& x, const WindowSource& y, std::int64_t n, std::int64_t m);

struct ShiftDistance {
  Rational distance;
  /// An eventually periodic point of the shift attaining the distance.
  Configuration nearest;
};

/// inf over y in Y of d_B(x, y), exact, with a point attaining it.
ShiftDistance distance_to_shift(const Configuration& x, const ShiftPresentation& y);

}  // namespace shiftgeom
