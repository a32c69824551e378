#include "shiftgeom/metrics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "shiftgeom/errors.hpp"
#include "shiftgeom/graph.hpp"

namespace shiftgeom {
namespace {

void require_same_alphabet(const Configuration& x, const Configuration& y) {
  if (!(x.alphabet() == y.alphabet())) throw InputError("alphabet mismatch");
}

std::int64_t lcm_len(std::size_t a, std::size_t b) {
  return std::lcm(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

}  // namespace

ArmDensities arm_densities(const Configuration& x, const Configuration& y) {
  require_same_alphabet(x, y);
  const std::int64_t right_start = std::max(x.right_boundary(), y.right_boundary());
  const std::int64_t right_len = lcm_len(x.right_period().size(), y.right_period().size());
  std::int64_t right = 0;
  for (std::int64_t i = right_start; i < right_start + right_len; ++i) right += x.at(i) != y.at(i);

  const std::int64_t left_end = std::min(x.left_boundary(), y.left_boundary());
  const std::int64_t left_len = lcm_len(x.left_period().size(), y.left_period().size());
  std::int64_t left = 0;
  for (std::int64_t i = left_end - left_len; i < left_end; ++i) left += x.at(i) != y.at(i);
  return {Rational(left, left_len), Rational(right, right_len)};
}

Rational d_cantor(const Configuration& x, const Configuration& y) {
  require_same_alphabet(x, y);
  if (x == y) return 0;
  const std::int64_t bound =
      std::max({-x.left_boundary(), -y.left_boundary(), x.right_boundary(), y.right_boundary()}) +
      lcm_len(x.left_period().size(), y.left_period().size()) +
      lcm_len(x.right_period().size(), y.right_period().size());
  for (std::int64_t d = 0; d <= bound; ++d) {
    if (x.at(d) != y.at(d) || x.at(-d) != y.at(-d)) {
      if (d > 62) throw ResourceCapError("Cantor distance below 2^-62");
      return Rational(1, std::int64_t{1} << d);
    }
  }
  throw std::logic_error("d_cantor: distinct points agree on the search range");
}

Rational d_besicovitch(const Configuration& x, const Configuration& y) {
  auto [left, right] = arm_densities(x, y);
  return (left + right) / 2;
}

Rational d_weyl(const Configuration& x, const Configuration& y) {
  auto [left, right] = arm_densities(x, y);
  return std::max(left, right);
}

WindowSource WindowSource::of(const Configuration& x) {
  WindowSource s;
  s.config_ = x;
  return s;
}

WindowSource WindowSource::of(Word w, std::int64_t first) {
  WindowSource s;
  s.word_ = std::move(w);
  s.first_ = first;
  return s;
}

bool WindowSource::covers(std::int64_t a, std::int64_t b) const {
  if (config_) return true;
  return a >= first_ && b < first_ + static_cast<std::int64_t>(word_.size());
}

Word WindowSource::window(std::int64_t a, std::int64_t b) const {
  if (b < a) return Word();
  if (config_) return config_->window(a, b);
  if (!covers(a, b)) {
    throw PreconditionError("window [" + std::to_string(a) + "," + std::to_string(b) +
                            "] is outside the source range");
  }
  return word_.substr(static_cast<std::size_t>(a - first_), static_cast<std::size_t>(b - a + 1));
}

Rational density_estimate(const WindowSource& x, const WindowSource& y, std::int64_t n) {
  Word a = x.window(-n, n);
  Word b = y.window(-n, n);
  return Rational(static_cast<std::int64_t>(hamming(a, b)), 2 * n + 1);
}

Rational weyl_estimate(const WindowSource& x, const WindowSource& y, std::int64_t n, std::int64_t m) {
  Word a = x.window(-m - n, m + n);
  Word b = y.window(-m - n, m + n);
  const std::int64_t width = 2 * n + 1;
  std::int64_t cur = 0;
  for (std::int64_t i = 0; i < width; ++i) cur += a[i] != b[i];
  std::int64_t best = cur;
  for (std::int64_t start = 1; start + width <= static_cast<std::int64_t>(a.size()); ++start) {
    cur += (a[start + width - 1] != b[start + width - 1]) - (a[start - 1] != b[start - 1]);
    best = std::max(best, cur);
  }
  return Rational(best, width);
}

ShiftDistance distance_to_shift(const Configuration& x, const ShiftPresentation& y) {
  if (y.empty()) throw EmptyShiftError();
  if (!(x.alphabet() == y.alphabet())) throw InputError("alphabet mismatch");

  // Graph of x: a loop reading the left period, a chain reading
  // left_finite + right_finite + one right period, and a loop reading the
  // right period.
  enum Kind { kLeft, kChain, kRight };
  struct XEdge {
    std::size_t from, to;
    char symbol;
    Kind kind;
  };
  const Word& lp = x.left_period();
  const Word& rp = x.right_period();
  const Word chain = x.left_finite() + x.right_finite() + rp;
  const std::size_t p = lp.size(), m = chain.size(), q = rp.size();
  const std::size_t nx = p + (m - 1) + q;
  auto chain_node = [&](std::size_t i) { return i == 0 ? 0 : (i == m ? p + m - 1 : p + i - 1); };
  std::vector<XEdge> xe;
  for (std::size_t k = 0; k < p; ++k) xe.push_back({k, (k + 1) % p, lp[k], kLeft});
  for (std::size_t i = 0; i < m; ++i) xe.push_back({chain_node(i), chain_node(i + 1), chain[i], kChain});
  for (std::size_t k = 0; k < q; ++k) xe.push_back({p + m - 1 + k, p + m - 1 + (k + 1) % q, rp[k], kRight});
  auto node_kind = [&](std::size_t g) { return g < p ? kLeft : (g >= p + m - 1 ? kRight : kChain); };

  struct PEdge {
    std::size_t from, to, y_edge, x_edge;
    std::int64_t cost;
  };
  const std::size_t n = y.state_count() * nx;
  std::vector<PEdge> pe;
  graph::Adjacency adj(n);
  for (std::size_t ei = 0; ei < y.edges().size(); ++ei) {
    const Edge& e = y.edges()[ei];
    const char sym = y.alphabet().symbol(e.label);
    for (std::size_t xi = 0; xi < xe.size(); ++xi) {
      std::size_t from = e.from * nx + xe[xi].from;
      std::size_t to = e.to * nx + xe[xi].to;
      pe.push_back({from, to, ei, xi, sym != xe[xi].symbol ? 1 : 0});
      adj[from].push_back(to);
    }
  }
  std::vector<std::vector<std::size_t>> out_edges(n);
  for (std::size_t i = 0; i < pe.size(); ++i) out_edges[pe[i].from].push_back(i);

  auto comps = graph::strongly_connected(adj);
  const std::size_t nc = comps.members.size();
  std::vector<std::optional<graph::MeanCycle>> best_cycle(nc);
  auto cycle_of = [&](std::size_t c) -> const graph::MeanCycle& {
    if (!best_cycle[c]) {
      const auto& members = comps.members[c];
      std::vector<std::size_t> local(n, 0);
      for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
      std::vector<graph::WeightedEdge> edges;
      std::vector<std::size_t> global;
      for (std::size_t v : members) {
        for (std::size_t ei : out_edges[v]) {
          if (comps.of[pe[ei].to] != c) continue;
          edges.push_back({local[v], local[pe[ei].to], pe[ei].cost});
          global.push_back(ei);
        }
      }
      auto mc = graph::minimum_mean_cycle(members.size(), edges);
      for (auto& ei : mc.cycle) ei = global[ei];
      best_cycle[c] = std::move(mc);
    }
    return *best_cycle[c];
  };

  std::optional<Rational> best;
  std::size_t best_left = 0, best_right = 0;
  for (std::size_t c = nc; c-- > 0;) {
    if (!comps.cyclic[c] || node_kind(comps.members[c][0] % nx) != kLeft) continue;
    auto seen = graph::reachable(adj, comps.members[c]);
    std::vector<bool> done(nc, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v]) continue;
      std::size_t r = comps.of[v];
      if (done[r] || !comps.cyclic[r] || node_kind(v % nx) != kRight) continue;
      done[r] = true;
      Rational value = (cycle_of(c).mean + cycle_of(r).mean) / 2;
      if (!best || value < *best) {
        best = value;
        best_left = c;
        best_right = r;
      }
    }
  }
  if (!best) throw std::logic_error("distance_to_shift: no left-to-right connection");

  const auto& left_cycle = cycle_of(best_left).cycle;
  auto right_cycle = cycle_of(best_right).cycle;
  const std::size_t start_node = pe[left_cycle.front()].from;

  // Shortest path from the left cycle to any node of the right cycle.
  std::vector<bool> on_right(n, false);
  for (std::size_t ei : right_cycle) on_right[pe[ei].from] = true;
  std::vector<long> via(n, -1);
  std::vector<bool> visited(n, false);
  std::deque<std::size_t> todo{start_node};
  visited[start_node] = true;
  std::size_t end_node = start_node;
  while (!todo.empty()) {
    std::size_t v = todo.front();
    todo.pop_front();
    if (on_right[v] && v != start_node) {
      end_node = v;
      break;
    }
    for (std::size_t ei : out_edges[v]) {
      std::size_t w = pe[ei].to;
      if (!visited[w]) {
        visited[w] = true;
        via[w] = static_cast<long>(ei);
        todo.push_back(w);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = end_node; v != start_node; v = pe[static_cast<std::size_t>(via[v])].from) {
    path.push_back(static_cast<std::size_t>(via[v]));
  }
  std::reverse(path.begin(), path.end());
  auto rot = std::find_if(right_cycle.begin(), right_cycle.end(),
                          [&](std::size_t ei) { return pe[ei].from == end_node; });
  std::rotate(right_cycle.begin(), rot, right_cycle.end());

  auto labels = [&](const std::vector<std::size_t>& edges) {
    Word w;
    for (std::size_t ei : edges) w.push_back(y.alphabet().symbol(y.edges()[pe[ei].y_edge].label));
    return w;
  };
  std::int64_t loops_before_chain = 0;
  for (std::size_t ei : path) loops_before_chain += xe[pe[ei].x_edge].kind == kLeft;
  const std::int64_t start = x.left_boundary() - loops_before_chain;
  Configuration nearest = Configuration::from_parts(y.alphabet(), labels(left_cycle), labels(path), start,
                                                    labels(right_cycle));
  return {*best, std::move(nearest)};
}

}  // namespace shiftgeom
