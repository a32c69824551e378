#include "shiftgeom/shifts.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {
namespace {

std::string subset_name(const ShiftPresentation& x, const StateSet& s) {
  std::string name = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i]) continue;
    if (!first) name += ",";
    name += x.state_names()[i];
    first = false;
  }
  return name + "}";
}

bool has_forbidden_suffix(std::string_view w, const std::vector<Word>& forbidden) {
  for (const auto& f : forbidden) {
    if (f.size() <= w.size() && w.substr(w.size() - f.size()) == f) return true;
  }
  return false;
}

// Maps every label of `from` to the corresponding label of `to`, or -1.
std::vector<long> label_map(const Alphabet& from, const Alphabet& to) {
  std::vector<long> map(from.size(), -1);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (to.contains(from.symbol(i))) map[i] = static_cast<long>(to.index(from.symbol(i)));
  }
  return map;
}

StateSet component_set(const graph::Components& comps, std::size_t c, std::size_t n) {
  StateSet s(n, false);
  for (std::size_t v : comps.members[c]) s[v] = true;
  return s;
}

}  // namespace

ShiftPresentation compile_sft(const SftSpec& spec, std::size_t max_states) {
  std::vector<Word> forbidden;
  for (const auto& f : spec.forbidden) {
    if (f.empty()) throw InputError("forbidden word is empty");
    spec.alphabet.validate(f);
    forbidden.push_back(f);
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

  std::size_t k = 0;
  for (const auto& f : forbidden) k = std::max(k, f.size());
  const Alphabet& alphabet = spec.alphabet;

  std::vector<std::string> names;
  std::vector<Edge> edges;
  if (k <= 1) {
    names.push_back("_");
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (!has_forbidden_suffix(std::string(1, alphabet.symbol(a)), forbidden)) edges.push_back({0, 0, a});
    }
  } else {
    // States: allowed words of length k-1.
    std::map<Word, std::size_t> index;
    std::vector<Word> stack{""};
    while (!stack.empty()) {
      Word w = std::move(stack.back());
      stack.pop_back();
      if (w.size() == k - 1) {
        if (index.size() >= max_states) throw ResourceCapError("SFT state count exceeds cap");
        index.emplace(w, 0);
        continue;
      }
      for (std::size_t a = alphabet.size(); a-- > 0;) {
        Word next = w + alphabet.symbol(a);
        if (!has_forbidden_suffix(next, forbidden)) stack.push_back(std::move(next));
      }
    }
    for (auto& [w, i] : index) {
      i = names.size();
      names.push_back(w);
    }
    for (const auto& [w, i] : index) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        Word next = w + alphabet.symbol(a);
        if (has_forbidden_suffix(next, forbidden)) continue;
        edges.push_back({i, index.at(next.substr(1)), a});
      }
    }
  }
  ShiftPresentation out(alphabet, std::move(names), std::move(edges));
  if (out.empty()) throw EmptyShiftError();
  return out;
}

ShiftPresentation full_shift(const Alphabet& alphabet) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < alphabet.size(); ++a) edges.push_back({0, 0, a});
  return ShiftPresentation(alphabet, {"_"}, std::move(edges));
}

ShiftPresentation periodic_orbit(const Alphabet& alphabet, std::string_view w) {
  alphabet.validate(w);
  if (w.empty()) throw InputError("empty period");
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < w.size(); ++i) {
    names.push_back("p" + std::to_string(i));
    edges.push_back({i, (i + 1) % w.size(), alphabet.index(w[i])});
  }
  return ShiftPresentation(alphabet, std::move(names), std::move(edges));
}

ShiftPresentation concatenation_shift(const Alphabet& alphabet, const std::vector<Word>& blocks) {
  std::vector<std::string> names{"h"};
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Word& block = blocks[b];
    if (block.empty()) throw InputError("empty concatenation block");
    alphabet.validate(block);
    std::size_t prev = 0;
    for (std::size_t j = 0; j + 1 < block.size(); ++j) {
      names.push_back("b" + std::to_string(b) + "." + std::to_string(j + 1));
      edges.push_back({prev, names.size() - 1, alphabet.index(block[j])});
      prev = names.size() - 1;
    }
    edges.push_back({prev, 0, alphabet.index(block.back())});
  }
  return ShiftPresentation(alphabet, std::move(names), std::move(edges));
}

ShiftPresentation shift_union(const ShiftPresentation& x, const ShiftPresentation& y) {
  std::string symbols = x.alphabet().symbols();
  for (char c : y.alphabet().symbols()) {
    if (symbols.find(c) == std::string::npos) symbols.push_back(c);
  }
  Alphabet merged(symbols);
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (const auto& n : x.state_names()) names.push_back("a." + n);
  for (const auto& n : y.state_names()) names.push_back("b." + n);
  for (const auto& e : x.edges()) {
    edges.push_back({e.from, e.to, merged.index(x.alphabet().symbol(e.label))});
  }
  const std::size_t off = x.state_count();
  for (const auto& e : y.edges()) {
    edges.push_back({e.from + off, e.to + off, merged.index(y.alphabet().symbol(e.label))});
  }
  return ShiftPresentation(merged, std::move(names), std::move(edges));
}

ShiftPresentation intersect(const ShiftPresentation& x, const ShiftPresentation& y) {
  if (!(x.alphabet() == y.alphabet())) throw InputError("intersect: alphabet mismatch");
  const std::size_t ny = y.state_count();
  std::vector<std::string> names;
  for (const auto& a : x.state_names()) {
    for (const auto& b : y.state_names()) names.push_back(a + "|" + b);
  }
  std::vector<Edge> edges;
  for (const auto& e : x.edges()) {
    for (const auto& f : y.edges()) {
      if (e.label == f.label) edges.push_back({e.from * ny + f.from, e.to * ny + f.to, e.label});
    }
  }
  return ShiftPresentation(x.alphabet(), std::move(names), std::move(edges));
}

void for_each_factor(const ShiftPresentation& x, std::size_t n,
                     const std::function<bool(const Word&, const StateSet&)>& visit) {
  if (x.empty()) return;
  const Alphabet& alphabet = x.alphabet();
  Word w;
  std::vector<StateSet> sets{x.all_states()};
  std::vector<std::size_t> next{0};
  while (!next.empty()) {
    if (w.size() == n) {
      if (!visit(w, sets.back())) return;
      next.pop_back();
      sets.pop_back();
      if (!w.empty()) w.pop_back();
      continue;
    }
    std::size_t& a = next.back();
    if (a == alphabet.size()) {
      next.pop_back();
      sets.pop_back();
      if (!w.empty()) w.pop_back();
      continue;
    }
    StateSet s = x.post(sets.back(), a);
    std::size_t label = a++;
    if (!any(s)) continue;
    w.push_back(alphabet.symbol(label));
    sets.push_back(std::move(s));
    next.push_back(0);
  }
}

std::vector<Word> language(const ShiftPresentation& x, std::size_t n) {
  std::vector<Word> out;
  for_each_factor(x, n, [&](const Word& w, const StateSet&) {
    out.push_back(w);
    return true;
  });
  return out;
}

bool in_language(const ShiftPresentation& x, std::string_view w) {
  if (x.empty()) return false;
  return any(x.post(x.all_states(), w));
}

ShiftPresentation determinize(const ShiftPresentation& x) {
  std::map<StateSet, std::size_t> index;
  std::vector<StateSet> sets;
  std::vector<Edge> edges;
  if (x.empty()) return ShiftPresentation(x.alphabet(), {}, {});
  sets.push_back(x.all_states());
  index[sets[0]] = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t a = 0; a < x.alphabet().size(); ++a) {
      StateSet t = x.post(sets[i], a);
      if (!any(t)) continue;
      auto [it, inserted] = index.emplace(t, sets.size());
      if (inserted) sets.push_back(t);
      edges.push_back({i, it->second, a});
    }
  }
  std::vector<std::string> names;
  for (const auto& s : sets) names.push_back(subset_name(x, s));
  return ShiftPresentation(x.alphabet(), std::move(names), std::move(edges));
}

ShiftPresentation minimize(const ShiftPresentation& x) {
  if (!x.is_deterministic()) throw PreconditionError("minimize: presentation is not deterministic");
  const std::size_t n = x.state_count();
  const std::size_t k = x.alphabet().size();
  std::vector<std::size_t> block(n, 0);
  std::size_t blocks = n == 0 ? 0 : 1;
  while (true) {
    std::map<std::vector<long>, std::size_t> sig_index;
    std::vector<std::size_t> next(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<long> sig{static_cast<long>(block[s])};
      for (std::size_t a = 0; a < k; ++a) {
        auto t = x.successor(s, a);
        sig.push_back(t ? static_cast<long>(block[*t]) : -1);
      }
      auto [it, inserted] = sig_index.emplace(sig, sig_index.size());
      next[s] = it->second;
    }
    // Renumber blocks by first occurrence so the result is canonical.
    std::map<std::size_t, std::size_t> order;
    for (std::size_t s = 0; s < n; ++s) order.emplace(next[s], order.size());
    for (std::size_t s = 0; s < n; ++s) next[s] = order.at(next[s]);
    bool stable = order.size() == blocks;
    block = std::move(next);
    blocks = order.size();
    if (stable) break;
  }
  std::vector<std::string> names(blocks);
  std::vector<bool> named(blocks, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (!named[block[s]]) {
      names[block[s]] = x.state_names()[s];
      named[block[s]] = true;
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : x.edges()) edges.push_back({block[e.from], block[e.to], e.label});
  return ShiftPresentation(x.alphabet(), std::move(names), std::move(edges));
}

bool language_included(const ShiftPresentation& x, const ShiftPresentation& y) {
  if (x.empty()) return true;
  if (y.empty()) return false;
  const auto map = label_map(x.alphabet(), y.alphabet());
  std::set<std::pair<StateSet, StateSet>> seen;
  std::deque<std::pair<StateSet, StateSet>> todo;
  todo.push_back({x.all_states(), y.all_states()});
  seen.insert(todo.front());
  while (!todo.empty()) {
    auto [sx, sy] = std::move(todo.front());
    todo.pop_front();
    for (std::size_t a = 0; a < x.alphabet().size(); ++a) {
      StateSet tx = x.post(sx, a);
      if (!any(tx)) continue;
      if (map[a] < 0) return false;
      StateSet ty = y.post(sy, static_cast<std::size_t>(map[a]));
      if (!any(ty)) return false;
      std::pair<StateSet, StateSet> key{std::move(tx), std::move(ty)};
      if (seen.insert(key).second) todo.push_back(std::move(key));
    }
  }
  return true;
}

bool same_shift(const ShiftPresentation& x, const ShiftPresentation& y) {
  return language_included(x, y) && language_included(y, x);
}

ShiftPresentation shannon_cover(const ShiftPresentation& x) {
  if (x.empty()) throw EmptyShiftError();
  ShiftPresentation cover = minimize(determinize(x));
  bool removed = true;
  while (removed) {
    removed = false;
    auto comps = graph::strongly_connected(cover.adjacency());
    // Highest component index first: sources before the components they feed.
    for (std::size_t c = comps.members.size(); c-- > 0;) {
      StateSet keep = component_set(comps, c, cover.state_count());
      keep.flip();
      ShiftPresentation candidate = cover.restricted(keep);
      if (!candidate.empty() && language_included(cover, candidate)) {
        cover = minimize(candidate);
        removed = true;
        break;
      }
    }
  }
  return cover;
}

bool is_strongly_connected(const ShiftPresentation& x) {
  if (x.empty()) return false;
  return graph::strongly_connected(x.adjacency()).members.size() == 1;
}

bool is_irreducible(const ShiftPresentation& x) {
  if (x.empty()) return false;
  return is_strongly_connected(shannon_cover(x));
}

ComponentDecomposition transitive_components(const ShiftPresentation& x) {
  ComponentDecomposition out;
  if (x.empty()) return out;
  ShiftPresentation cover = shannon_cover(x);
  auto comps = graph::strongly_connected(cover.adjacency());
  std::vector<ShiftPresentation> candidates;
  for (std::size_t c = comps.members.size(); c-- > 0;) {
    if (!comps.cyclic[c]) continue;
    candidates.push_back(cover.restricted(component_set(comps, c, cover.state_count())));
  }
  std::vector<bool> drop(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < candidates.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      if (!language_included(candidates[i], candidates[j])) continue;
      // Equal languages keep the earlier one.
      if (j < i || !language_included(candidates[j], candidates[i])) drop[i] = true;
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!drop[i]) out.components.push_back(std::move(candidates[i]));
  }
  const std::size_t t = out.components.size();
  out.contained.assign(t, std::vector<bool>(t, false));
  out.intersecting.assign(t, std::vector<bool>(t, false));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      out.contained[i][j] = i == j || language_included(out.components[i], out.components[j]);
      out.intersecting[i][j] = i == j || !intersect(out.components[i], out.components[j]).empty();
    }
  }
  return out;
}

std::size_t mixing_distance(const ShiftPresentation& x) {
  ShiftPresentation cover = shannon_cover(x);
  if (!is_strongly_connected(cover)) throw PreconditionError("shift is not irreducible");
  const std::size_t p = graph::period(cover.adjacency());
  if (p > 1) throw NotMixingError(p);
  const std::size_t k = cover.alphabet().size();

  auto closure = [&](bool forward) {
    std::set<StateSet> seen{cover.all_states()};
    std::vector<StateSet> list{cover.all_states()};
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        StateSet t = forward ? cover.post(list[i], a) : cover.pre(list[i], a);
        if (any(t) && seen.insert(t).second) list.push_back(std::move(t));
      }
    }
    return list;
  };
  const auto targets = closure(true);
  const auto sources = closure(false);

  std::size_t m = 0;
  for (const auto& start : targets) {
    std::map<StateSet, std::size_t> seen;
    StateSet cur = start;
    std::size_t last_bad = 0;
    bool any_bad = false;
    for (std::size_t n = 0;; ++n) {
      auto [it, inserted] = seen.emplace(cur, n);
      if (!inserted) {
        // The sequence cycles from it->second on; a bad index there would repeat forever.
        if (any_bad && last_bad >= it->second) throw NotMixingError(p);
        break;
      }
      bool good = std::all_of(sources.begin(), sources.end(),
                              [&](const StateSet& s) { return any(intersect(cur, s)); });
      if (!good) {
        last_bad = n;
        any_bad = true;
      }
      cur = cover.step(cur);
    }
    if (any_bad) m = std::max(m, last_bad + 1);
  }
  return m;
}

bool is_synchronizing(const ShiftPresentation& cover, std::string_view w) {
  return count(cover.post(cover.all_states(), w)) == 1;
}

Word find_unbordered_synchronizing(const ShiftPresentation& x, std::size_t cap) {
  ShiftPresentation cover = shannon_cover(x);
  for (std::size_t len = 1; len <= cap; ++len) {
    std::optional<Word> found;
    for_each_factor(cover, len, [&](const Word& w, const StateSet& s) {
      if (count(s) == 1 && is_unbordered(w)) {
        found = w;
        return false;
      }
      return true;
    });
    if (found) return *found;
  }
  throw ResourceCapError("no unbordered synchronizing word of length <= " + std::to_string(cap));
}

bool positive_entropy(const ShiftPresentation& x) {
  if (x.empty()) return false;
  ShiftPresentation cover = shannon_cover(x);
  auto comps = graph::strongly_connected(cover.adjacency());
  std::vector<std::size_t> edge_count(comps.members.size(), 0);
  for (const auto& e : cover.edges()) {
    if (comps.of[e.from] == comps.of[e.to]) ++edge_count[comps.of[e.from]];
  }
  for (std::size_t c = 0; c < comps.members.size(); ++c) {
    if (edge_count[c] > comps.members[c].size()) return true;
  }
  return false;
}

std::vector<Word> least_connectors(const ShiftPresentation& cover, std::string_view w, std::size_t k,
                                   std::size_t wanted) {
  std::vector<Word> out;
  if (wanted == 0) return out;
  const StateSet start = cover.post(cover.all_states(), w);
  if (!any(start)) return out;
  const Alphabet& alphabet = cover.alphabet();
  Word u;
  std::vector<StateSet> sets{start};
  std::vector<std::size_t> next{0};
  while (!next.empty()) {
    if (u.size() == k) {
      if (any(cover.post(sets.back(), w))) {
        out.push_back(u);
        if (out.size() == wanted) return out;
      }
      next.pop_back();
      sets.pop_back();
      if (!u.empty()) u.pop_back();
      continue;
    }
    std::size_t& a = next.back();
    if (a == alphabet.size()) {
      next.pop_back();
      sets.pop_back();
      if (!u.empty()) u.pop_back();
      continue;
    }
    std::size_t label = a++;
    StateSet s = cover.post(sets.back(), label);
    if (!any(s)) continue;
    u.push_back(alphabet.symbol(label));
    if (u.size() >= w.size() && std::string_view(u).substr(u.size() - w.size()) == w) {
      u.pop_back();
      continue;
    }
    sets.push_back(std::move(s));
    next.push_back(0);
  }
  return out;
}

std::optional<Word> least_connector(const ShiftPresentation& cover, std::string_view w, std::size_t k) {
  auto found = least_connectors(cover, w, k, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

InsideSft mixing_sft_inside(const ShiftPresentation& x, std::size_t cap) {
  mixing_distance(x);
  if (!positive_entropy(x)) throw PreconditionError("shift has zero entropy");
  ShiftPresentation cover = shannon_cover(x);
  for (std::size_t len = 1; len <= cap; ++len) {
    std::vector<Word> candidates;
    for_each_factor(cover, len, [&](const Word& w, const StateSet& s) {
      if (count(s) == 1 && is_unbordered(w)) candidates.push_back(w);
      return true;
    });
    for (const auto& w : candidates) {
      for (std::size_t k = 1; k <= cap; ++k) {
        auto u = least_connector(cover, w, k);
        if (!u) continue;
        auto v = least_connector(cover, w, k + 1);
        if (!v) continue;
        ShiftPresentation y = concatenation_shift(x.alphabet(), {w + *u, w + *v});
        if (!language_included(y, x)) continue;
        return {std::move(y), w, *u, *v};
      }
    }
  }
  throw ResourceCapError("no mixing subshift found within search cap " + std::to_string(cap));
}

bool contains_config(const ShiftPresentation& x, const Configuration& c, const StateSet& anchors) {
  if (x.empty()) return false;
  const Alphabet& alphabet = x.alphabet();
  for (const Word* part : {&c.left_period(), &c.left_finite(), &c.right_finite(), &c.right_period()}) {
    if (!alphabet.accepts(*part)) return false;
  }
  StateSet left = x.all_states();
  while (true) {
    StateSet next = x.post(left, c.left_period());
    if (next == left) break;
    left = std::move(next);
  }
  StateSet right = x.all_states();
  while (true) {
    StateSet next = x.pre(right, c.right_period());
    if (next == right) break;
    right = std::move(next);
  }
  StateSet at_zero = intersect(x.post(left, c.left_finite()), x.pre(right, c.right_finite()));
  return any(intersect(at_zero, anchors));
}

bool contains_config(const ShiftPresentation& x, const Configuration& c) {
  return contains_config(x, c, x.all_states());
}

std::optional<Word> least_completion(const ShiftPresentation& x,
                                     const std::vector<std::optional<char>>& pattern) {
  if (x.empty()) return std::nullopt;
  const Alphabet& alphabet = x.alphabet();
  const std::size_t n = pattern.size();
  auto allowed = [&](std::size_t i, std::size_t label) {
    return !pattern[i] || *pattern[i] == alphabet.symbol(label);
  };
  // feasible[i]: states from which pattern[i..n) can be read.
  std::vector<StateSet> feasible(n + 1);
  feasible[n] = x.all_states();
  for (std::size_t i = n; i-- > 0;) {
    StateSet s(x.state_count(), false);
    for (const auto& e : x.edges()) {
      if (feasible[i + 1][e.to] && allowed(i, e.label)) s[e.from] = true;
    }
    feasible[i] = std::move(s);
  }
  if (!any(feasible[0])) return std::nullopt;
  Word out;
  StateSet cur = feasible[0];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (!allowed(i, a)) continue;
      StateSet next = intersect(x.post(cur, a), feasible[i + 1]);
      if (any(next)) {
        out.push_back(alphabet.symbol(a));
        cur = std::move(next);
        break;
      }
    }
  }
  return out;
}

std::vector<Word> periodic_words(const ShiftPresentation& x, std::size_t p) {
  std::vector<Word> out;
  for_each_factor(x, p, [&](const Word& w, const StateSet&) {
    if (contains_config(x, Configuration::periodic(x.alphabet(), w))) out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace shiftgeom
