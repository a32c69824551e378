#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "shiftgeom/alphabet.hpp"

namespace shiftgeom {

/// Eventually periodic bi-infinite sequence
///   ... left_period left_period left_finite . right_finite right_period right_period ...
/// with coordinate 0 at the first symbol after the dot.
///
/// Always held in canonical form: both periods primitive and the finite
/// parts shrunk as far as the tails allow. Two values denote the same point
/// iff they compare equal.
class Configuration {
 public:
  Configuration(Alphabet alphabet, Word left_period, Word left_finite, Word right_finite,
                Word right_period);

  /// The periodic point with x_[0,|w|) = w.
  static Configuration periodic(const Alphabet& alphabet, std::string_view w);
  /// Left tail ends at `start - 1`, `center` occupies [start, start+|center|),
  /// right tail starts right after it.
  static Configuration from_parts(const Alphabet& alphabet, std::string_view left_period,
                                  std::string_view center, std::int64_t start,
                                  std::string_view right_period);

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& left_period() const { return left_period_; }
  const Word& left_finite() const { return left_finite_; }
  const Word& right_finite() const { return right_finite_; }
  const Word& right_period() const { return right_period_; }

  char at(std::int64_t i) const;
  /// x_a ... x_b; empty when b < a.
  Word window(std::int64_t a, std::int64_t b) const;
  /// sigma^k: result.at(i) == at(i + k).
  Configuration shifted(std::int64_t k) const;

  /// Positions below this index lie in the left tail.
  std::int64_t left_boundary() const { return -static_cast<std::int64_t>(left_finite_.size()); }
  /// Positions from this index on lie in the right tail.
  std::int64_t right_boundary() const { return static_cast<std::int64_t>(right_finite_.size()); }

  bool is_periodic() const;
  /// Least period; only meaningful when is_periodic().
  std::size_t period() const { return right_period_.size(); }

  std::string str() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  void canonicalize();

  Alphabet alphabet_;
  Word left_period_;
  Word left_finite_;
  Word right_finite_;
  Word right_period_;
};

/// Grammar: "inf(" WORD ")" WORD? "." WORD? "inf(" WORD ")", whitespace ignored.
Configuration parse_config(std::string_view literal, const Alphabet& alphabet);
std::string format_config(const Configuration& x);

/// Sorted distinct symbols of a literal, for callers without an explicit alphabet.
Alphabet infer_alphabet(std::string_view literal);

}  // namespace shiftgeom
