#include "shiftgeom/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace shiftgeom::graph {

Components strongly_connected(const Adjacency& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  Components out;
  out.of.assign(n, kUnset);
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (node, next neighbour position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        std::size_t w = adj[v][pos++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t c = out.members.size();
        out.members.emplace_back();
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.of[w] = c;
          out.members[c].push_back(w);
        } while (w != v);
        std::sort(out.members[c].begin(), out.members[c].end());
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  out.cyclic.assign(out.members.size(), false);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : adj[v]) {
      if (out.of[v] == out.of[w]) out.cyclic[out.of[v]] = true;
    }
  }
  return out;
}

std::vector<bool> reachable(const Adjacency& adj, const std::vector<std::size_t>& sources) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> todo;
  for (std::size_t s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      todo.push_back(s);
    }
  }
  while (!todo.empty()) {
    std::size_t v = todo.back();
    todo.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

MeanCycle minimum_mean_cycle(std::size_t n, const std::vector<WeightedEdge>& edges) {
  if (n == 0 || edges.empty()) throw std::invalid_argument("minimum_mean_cycle: no cycle");
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  // Karp: best[k][v] is the least weight of a k-edge walk ending at v.
  std::vector<std::vector<std::int64_t>> best(n + 1, std::vector<std::int64_t>(n, kInf));
  std::fill(best[0].begin(), best[0].end(), 0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& e : edges) {
      if (best[k - 1][e.from] < kInf) {
        best[k][e.to] = std::min(best[k][e.to], best[k - 1][e.from] + e.weight);
      }
    }
  }
  bool found = false;
  Rational mean;
  for (std::size_t v = 0; v < n; ++v) {
    if (best[n][v] >= kInf) continue;
    bool have = false;
    Rational worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (best[k][v] >= kInf) continue;
      Rational r(best[n][v] - best[k][v], static_cast<std::int64_t>(n - k));
      if (!have || r > worst) {
        worst = r;
        have = true;
      }
    }
    if (have && (!found || worst < mean)) {
      mean = worst;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("minimum_mean_cycle: no cycle");

  // Reweight to b*w - a so the optimum cycles have weight zero; with
  // shortest-path potentials every edge on such a cycle is tight.
  const std::int64_t a = mean.num(), b = mean.den();
  std::vector<std::int64_t> pot(n, 0);
  for (std::size_t it = 0; it < n; ++it) {
    bool changed = false;
    for (const auto& e : edges) {
      std::int64_t cand = pot[e.from] + b * e.weight - a;
      if (cand < pot[e.to]) {
        pot[e.to] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<std::vector<std::size_t>> tight(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (pot[e.from] + b * e.weight - a == pot[e.to]) tight[e.from].push_back(i);
  }
  // Any cycle in the tight subgraph has mean exactly `mean`.
  std::vector<int> colour(n, 0);
  std::vector<std::size_t> via(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    colour[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos == tight[v].size()) {
        colour[v] = 2;
        frames.pop_back();
        continue;
      }
      std::size_t ei = tight[v][pos++];
      std::size_t w = edges[ei].to;
      if (colour[w] == 0) {
        colour[w] = 1;
        via[w] = ei;
        frames.push_back({w, 0});
      } else if (colour[w] == 1) {
        std::vector<std::size_t> cycle{ei};
        for (std::size_t u = v; u != w; u = edges[via[u]].from) cycle.push_back(via[u]);
        std::reverse(cycle.begin(), cycle.end());
        return {mean, cycle};
      }
    }
  }
  throw std::logic_error("minimum_mean_cycle: tight cycle not found");
}

std::size_t period(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  constexpr std::int64_t kUnset = -1;
  std::vector<std::int64_t> level(n, kUnset);
  level[0] = 0;
  std::vector<std::size_t> todo{0};
  for (std::size_t head = 0; head < todo.size(); ++head) {
    std::size_t v = todo[head];
    for (std::size_t w : adj[v]) {
      if (level[w] == kUnset) {
        level[w] = level[v] + 1;
        todo.push_back(w);
      }
    }
  }
  std::int64_t g = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (level[v] == kUnset) continue;
    for (std::size_t w : adj[v]) {
      if (level[w] == kUnset) continue;
      g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
    }
  }
  return static_cast<std::size_t>(g);
}

}  // namespace shiftgeom::graph
