#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shiftgeom/alphabet.hpp"
#include "shiftgeom/graph.hpp"

namespace shiftgeom {

/// Set of presentation states, indexed by state number.
using StateSet = std::vector<bool>;

struct Edge {
  std::size_t from;
  std::size_t to;
  std::size_t label;  // symbol index
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled graph presenting a sofic shift.
///
/// Construction trims the graph: states not on a bi-infinite path are
/// removed and duplicate edges are dropped, so every remaining state has
/// in- and out-degree at least one. A presentation with no states presents
/// the empty shift.
class ShiftPresentation {
 public:
  ShiftPresentation(Alphabet alphabet, std::vector<std::string> states, std::vector<Edge> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return states_.size(); }
  const std::vector<std::string>& state_names() const { return states_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Edge indices leaving each state, sorted by label.
  const std::vector<std::vector<std::size_t>>& out_edges() const { return out_; }
  const std::vector<std::vector<std::size_t>>& in_edges() const { return in_; }

  bool empty() const { return states_.empty(); }
  /// Right-resolving: no state has two out-edges with the same label.
  bool is_deterministic() const { return deterministic_; }
  std::optional<std::size_t> state_index(const std::string& name) const;
  /// Target of the `label` edge out of `state`; deterministic presentations only.
  std::optional<std::size_t> successor(std::size_t state, std::size_t label) const;

  graph::Adjacency adjacency() const;
  StateSet all_states() const { return StateSet(states_.size(), true); }

  /// States reachable from `from` by reading `word` (symbols, not indices).
  StateSet post(const StateSet& from, std::string_view word) const;
  StateSet post(const StateSet& from, std::size_t label) const;
  /// States from which `word` can be read ending in `to`.
  StateSet pre(const StateSet& to, std::string_view word) const;
  StateSet pre(const StateSet& to, std::size_t label) const;
  /// All successors, any label.
  StateSet step(const StateSet& from) const;

  /// Presentation restricted to `keep` (then trimmed).
  ShiftPresentation restricted(const StateSet& keep) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  bool deterministic_ = true;
};

bool any(const StateSet& s);
std::size_t count(const StateSet& s);
StateSet intersect(const StateSet& a, const StateSet& b);

}  // namespace shiftgeom
