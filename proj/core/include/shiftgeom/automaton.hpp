#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "shiftgeom/alphabet.hpp"
#include "shiftgeom/configuration.hpp"
#include "shiftgeom/presentation.hpp"

namespace shiftgeom {

/// Cellular automaton f(x)_i = rule(x_[i+left, i+right]).
class CellularAutomaton {
 public:
  static constexpr std::size_t kMaxWidth = 12;

  /// `table` is indexed by pattern code: symbol indices read as base-|Σ|
  /// digits, leftmost most significant.
  CellularAutomaton(Alphabet alphabet, int left, int right, std::vector<std::uint8_t> table);
  static CellularAutomaton elementary(unsigned rule);
  static CellularAutomaton from_function(Alphabet alphabet, int left, int right,
                                         const std::function<char(std::string_view)>& rule);

  const Alphabet& alphabet() const { return alphabet_; }
  int left() const { return left_; }
  int right() const { return right_; }
  std::size_t width() const { return static_cast<std::size_t>(right_ - left_ + 1); }
  const std::vector<std::uint8_t>& table() const { return table_; }

  std::size_t code(std::string_view pattern) const;
  Word pattern(std::size_t code) const;
  char local(std::string_view pattern) const;
  std::uint8_t local_index(std::size_t code) const { return table_[code]; }

 private:
  Alphabet alphabet_;
  int left_;
  int right_;
  std::vector<std::uint8_t> table_;
};

Configuration apply(const CellularAutomaton& f, const Configuration& x);
/// Image of the periodic point with period word z, as a word aligned with z.
Word apply_periodic(const CellularAutomaton& f, std::string_view z);

struct Neighborhood {
  /// Offsets [left, right] of the smallest interval the rule factors through;
  /// empty for constant rules.
  std::optional<std::pair<int, int>> interval;
  /// essential[k]: the rule depends on offset f.left() + k.
  std::vector<bool> essential;

  std::size_t dependency_count() const;
  /// Length of `interval`, 0 for constant rules.
  std::size_t span() const;
};

Neighborhood minimal_neighborhood(const CellularAutomaton& f);
/// Smallest interval through which the rule factors on patterns that are factors of X.
Neighborhood minimal_neighborhood_on(const CellularAutomaton& f, const ShiftPresentation& x);

/// Whether f maps X into X, decided exactly on the image presentation.
bool preserves(const CellularAutomaton& f, const ShiftPresentation& x);
/// Presentation of f(X).
ShiftPresentation image_presentation(const CellularAutomaton& f, const ShiftPresentation& x);

/// 0 iff f and g agree at coordinate 0 on the point that is `zero`
/// everywhere except for w placed with w[origin] at coordinate 0.
int ca_pseudometric(const CellularAutomaton& f, const CellularAutomaton& g, std::string_view w,
                    std::size_t origin, char zero);

}  // namespace shiftgeom
