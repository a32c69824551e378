#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "shiftgeom/alphabet.hpp"
#include "shiftgeom/configuration.hpp"
#include "shiftgeom/presentation.hpp"

namespace shiftgeom {

inline constexpr std::size_t kDefaultSearchCap = 16;

struct SftSpec {
  Alphabet alphabet;
  std::vector<Word> forbidden;
};

/// Higher-block presentation of an SFT; throws EmptyShiftError if nothing survives.
ShiftPresentation compile_sft(const SftSpec& spec, std::size_t max_states = std::size_t{1} << 20);

ShiftPresentation full_shift(const Alphabet& alphabet);
/// The orbit of the periodic point with period word `w`.
ShiftPresentation periodic_orbit(const Alphabet& alphabet, std::string_view w);
/// Closure of the bi-infinite free concatenations of `blocks`.
ShiftPresentation concatenation_shift(const Alphabet& alphabet, const std::vector<Word>& blocks);
/// X ∪ Y over the merged alphabet (X's symbols first).
ShiftPresentation shift_union(const ShiftPresentation& x, const ShiftPresentation& y);
/// Product presentation of X ∩ Y; may be empty.
ShiftPresentation intersect(const ShiftPresentation& x, const ShiftPresentation& y);

/// Length-n factors, sorted in alphabet order.
std::vector<Word> language(const ShiftPresentation& x, std::size_t n);
bool in_language(const ShiftPresentation& x, std::string_view w);
/// Calls `visit(word, states)` on every factor of length n in alphabet
/// order, where `states` is the set reached from all states. Stops early
/// when `visit` returns false.
void for_each_factor(const ShiftPresentation& x, std::size_t n,
                     const std::function<bool(const Word&, const StateSet&)>& visit);

/// Subset construction started from the set of all states.
ShiftPresentation determinize(const ShiftPresentation& x);
/// Merges states with equal follower sets; `x` must be deterministic.
ShiftPresentation minimize(const ShiftPresentation& x);
/// Exact factor-language inclusion L(X) ⊆ L(Y), hence X ⊆ Y.
bool language_included(const ShiftPresentation& x, const ShiftPresentation& y);
bool same_shift(const ShiftPresentation& x, const ShiftPresentation& y);

/// Minimal right-resolving presentation: determinize, minimize, then drop
/// strongly connected components that do not contribute to the shift.
ShiftPresentation shannon_cover(const ShiftPresentation& x);

/// Strongly connected presentation (assumed already trimmed).
bool is_strongly_connected(const ShiftPresentation& x);
bool is_irreducible(const ShiftPresentation& x);

struct ComponentDecomposition {
  std::vector<ShiftPresentation> components;
  /// contained[i][j]: component i is a subshift of component j.
  std::vector<std::vector<bool>> contained;
  /// intersecting[i][j]: components i and j share a point.
  std::vector<std::vector<bool>> intersecting;
};
ComponentDecomposition transitive_components(const ShiftPresentation& x);

/// Least m such that every gap length n >= m joins any two factors.
/// Throws PreconditionError if X is reducible and NotMixingError if its period exceeds 1.
std::size_t mixing_distance(const ShiftPresentation& x);

/// Whether reading `w` from all states of `cover` leads to exactly one state.
bool is_synchronizing(const ShiftPresentation& cover, std::string_view w);
/// Shortest, then alphabet-least, unbordered synchronizing word of the Shannon cover.
Word find_unbordered_synchronizing(const ShiftPresentation& x, std::size_t cap = kDefaultSearchCap);

/// Whether some component of the Shannon cover has more edges than states.
bool positive_entropy(const ShiftPresentation& x);

struct InsideSft {
  ShiftPresentation shift;
  Word w;
  Word u;
  Word v;
};
/// Mixing positive-entropy subshift generated by the blocks wu and wv.
InsideSft mixing_sft_inside(const ShiftPresentation& x, std::size_t cap = kDefaultSearchCap);

/// Alphabet-least word of length k avoiding `w` with w·word·w a factor of X.
std::optional<Word> least_connector(const ShiftPresentation& cover, std::string_view w, std::size_t k);
/// Up to `count` such words, in alphabet order.
std::vector<Word> least_connectors(const ShiftPresentation& cover, std::string_view w, std::size_t k,
                                   std::size_t count);

bool contains_config(const ShiftPresentation& x, const Configuration& c);
/// Membership with the state at coordinate 0 restricted to `anchors`.
bool contains_config(const ShiftPresentation& x, const Configuration& c, const StateSet& anchors);

/// Alphabet-least factor of X matching `pattern` (nullopt entries are free).
std::optional<Word> least_completion(const ShiftPresentation& x,
                                     const std::vector<std::optional<char>>& pattern);

/// Words z of length p with the periodic point of period word z in X, in alphabet order.
std::vector<Word> periodic_words(const ShiftPresentation& x, std::size_t p);

}  // namespace shiftgeom
