#include "shiftgeom/presentation.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {

bool any(const StateSet& s) { return std::find(s.begin(), s.end(), true) != s.end(); }

std::size_t count(const StateSet& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

StateSet intersect(const StateSet& a, const StateSet& b) {
  StateSet out(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

ShiftPresentation::ShiftPresentation(Alphabet alphabet, std::vector<std::string> states,
                                     std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)) {
  const std::size_t n = states.size();
  {
    std::set<std::string> seen;
    for (const auto& s : states) {
      if (!seen.insert(s).second) throw InputError("duplicate state name '" + s + "'");
    }
  }
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> unique;
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) throw InputError("edge refers to an unknown state");
    if (e.label >= alphabet_.size()) throw InputError("edge label outside the alphabet");
    unique.insert({e.from, e.to, e.label});
  }

  // Trim: repeatedly drop states without incoming or outgoing edges.
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const auto& [f, t, l] : unique) {
    ++outdeg[f];
    ++indeg[t];
  }
  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  for (const auto& [f, t, l] : unique) {
    succ[f].push_back(t);
    pred[t].push_back(f);
  }
  std::vector<std::size_t> todo;
  for (std::size_t s = 0; s < n; ++s) {
    if (indeg[s] == 0 || outdeg[s] == 0) {
      alive[s] = false;
      todo.push_back(s);
    }
  }
  while (!todo.empty()) {
    std::size_t s = todo.back();
    todo.pop_back();
    for (std::size_t t : succ[s]) {
      if (alive[t] && --indeg[t] == 0) {
        alive[t] = false;
        todo.push_back(t);
      }
    }
    for (std::size_t p : pred[s]) {
      if (alive[p] && --outdeg[p] == 0) {
        alive[p] = false;
        todo.push_back(p);
      }
    }
  }

  std::vector<std::size_t> remap(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (alive[s]) {
      remap[s] = states_.size();
      states_.push_back(std::move(states[s]));
    }
  }
  for (const auto& [f, t, l] : unique) {
    if (alive[f] && alive[t]) edges_.push_back({remap[f], remap[t], l});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  out_.assign(states_.size(), {});
  in_.assign(states_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_[edges_[i].from].push_back(i);
    in_[edges_[i].to].push_back(i);
  }
  for (const auto& list : out_) {
    for (std::size_t k = 1; k < list.size(); ++k) {
      if (edges_[list[k]].label == edges_[list[k - 1]].label) deterministic_ = false;
    }
  }
}

std::optional<std::size_t> ShiftPresentation::state_index(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> ShiftPresentation::successor(std::size_t state, std::size_t label) const {
  for (std::size_t e : out_[state]) {
    if (edges_[e].label == label) return edges_[e].to;
  }
  return std::nullopt;
}

graph::Adjacency ShiftPresentation::adjacency() const {
  graph::Adjacency adj(states_.size());
  for (const auto& e : edges_) adj[e.from].push_back(e.to);
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

StateSet ShiftPresentation::post(const StateSet& from, std::size_t label) const {
  StateSet out(states_.size(), false);
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (!from[s]) continue;
    for (std::size_t e : out_[s]) {
      if (edges_[e].label == label) out[edges_[e].to] = true;
    }
  }
  return out;
}

StateSet ShiftPresentation::post(const StateSet& from, std::string_view word) const {
  StateSet cur = from;
  for (char c : word) {
    if (!alphabet_.contains(c)) return StateSet(states_.size(), false);
    cur = post(cur, alphabet_.index(c));
  }
  return cur;
}

StateSet ShiftPresentation::pre(const StateSet& to, std::size_t label) const {
  StateSet out(states_.size(), false);
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (!to[s]) continue;
    for (std::size_t e : in_[s]) {
      if (edges_[e].label == label) out[edges_[e].from] = true;
    }
  }
  return out;
}

StateSet ShiftPresentation::pre(const StateSet& to, std::string_view word) const {
  StateSet cur = to;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!alphabet_.contains(*it)) return StateSet(states_.size(), false);
    cur = pre(cur, alphabet_.index(*it));
  }
  return cur;
}

StateSet ShiftPresentation::step(const StateSet& from) const {
  StateSet out(states_.size(), false);
  for (const auto& e : edges_) {
    if (from[e.from]) out[e.to] = true;
  }
  return out;
}

ShiftPresentation ShiftPresentation::restricted(const StateSet& keep) const {
  std::vector<std::string> names;
  std::vector<std::size_t> remap(states_.size(), 0);
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (keep[s]) {
      remap[s] = names.size();
      names.push_back(states_[s]);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : edges_) {
    if (keep[e.from] && keep[e.to]) edges.push_back({remap[e.from], remap[e.to], e.label});
  }
  return ShiftPresentation(alphabet_, std::move(names), std::move(edges));
}

}  // namespace shiftgeom
