#include "shiftgeom/automaton.hpp"

#include <algorithm>
#include <map>

#include "shiftgeom/errors.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom {
namespace {

std::size_t table_size(std::size_t k, std::size_t width) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < width; ++i) {
    n *= k;
    if (n > (std::size_t{1} << 24)) throw ResourceCapError("rule table exceeds 2^24 entries");
  }
  return n;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Whether the rule, restricted to `patterns`, depends only on offsets [a, b] (relative indices).
bool factors_through(const CellularAutomaton& f, const std::vector<std::size_t>& patterns, std::size_t a,
                     std::size_t b) {
  std::map<Word, std::uint8_t> seen;
  for (std::size_t code : patterns) {
    Word key = f.pattern(code).substr(a, b - a + 1);
    auto [it, inserted] = seen.emplace(key, f.local_index(code));
    if (!inserted && it->second != f.local_index(code)) return false;
  }
  return true;
}

bool is_constant_on(const CellularAutomaton& f, const std::vector<std::size_t>& patterns) {
  return std::all_of(patterns.begin(), patterns.end(),
                     [&](std::size_t c) { return f.local_index(c) == f.local_index(patterns.front()); });
}

Neighborhood neighborhood_over(const CellularAutomaton& f, const std::vector<std::size_t>& patterns) {
  const std::size_t w = f.width();
  Neighborhood out;
  out.essential.assign(w, false);
  if (patterns.empty() || is_constant_on(f, patterns)) return out;
  for (std::size_t len = 1; len <= w && !out.interval; ++len) {
    for (std::size_t a = 0; a + len <= w; ++a) {
      if (factors_through(f, patterns, a, a + len - 1)) {
        out.interval = {f.left() + static_cast<int>(a), f.left() + static_cast<int>(a + len - 1)};
        break;
      }
    }
  }
  // Single-offset flips within the pattern set.
  std::map<Word, std::size_t> index;
  for (std::size_t code : patterns) index.emplace(f.pattern(code), code);
  for (std::size_t code : patterns) {
    Word p = f.pattern(code);
    for (std::size_t j = 0; j < w; ++j) {
      for (char c : f.alphabet().symbols()) {
        if (c == p[j]) continue;
        Word q = p;
        q[j] = c;
        auto it = index.find(q);
        if (it != index.end() && f.local_index(it->second) != f.local_index(code)) out.essential[j] = true;
      }
    }
  }
  return out;
}

}  // namespace

CellularAutomaton::CellularAutomaton(Alphabet alphabet, int left, int right, std::vector<std::uint8_t> table)
    : alphabet_(std::move(alphabet)), left_(left), right_(right), table_(std::move(table)) {
  if (right_ < left_) throw InputError("neighbourhood offsets must satisfy left <= right");
  if (width() > kMaxWidth) throw InputError("neighbourhood wider than 12 cells");
  if (table_.size() != table_size(alphabet_.size(), width())) throw InputError("rule table is not total");
  for (auto v : table_) {
    if (v >= alphabet_.size()) throw InputError("rule table output outside the alphabet");
  }
}

CellularAutomaton CellularAutomaton::elementary(unsigned rule) {
  if (rule > 255) throw InputError("elementary rule number must be in [0,255]");
  std::vector<std::uint8_t> table(8);
  for (unsigned c = 0; c < 8; ++c) table[c] = static_cast<std::uint8_t>((rule >> c) & 1u);
  return CellularAutomaton(Alphabet::binary(), -1, 1, std::move(table));
}

CellularAutomaton CellularAutomaton::from_function(Alphabet alphabet, int left, int right,
                                                   const std::function<char(std::string_view)>& rule) {
  if (right < left) throw InputError("neighbourhood offsets must satisfy left <= right");
  const std::size_t width = static_cast<std::size_t>(right - left + 1);
  if (width > kMaxWidth) throw InputError("neighbourhood wider than 12 cells");
  const std::size_t n = table_size(alphabet.size(), width);
  std::vector<std::uint8_t> table(n);
  for (std::size_t code = 0; code < n; ++code) {
    table[code] = static_cast<std::uint8_t>(alphabet.index(rule(alphabet.word_from_index(code, width))));
  }
  return CellularAutomaton(std::move(alphabet), left, right, std::move(table));
}

std::size_t CellularAutomaton::code(std::string_view pattern) const {
  if (pattern.size() != width()) throw InputError("pattern length does not match the neighbourhood");
  std::size_t c = 0;
  for (char s : pattern) c = c * alphabet_.size() + alphabet_.index(s);
  return c;
}

Word CellularAutomaton::pattern(std::size_t code) const { return alphabet_.word_from_index(code, width()); }

char CellularAutomaton::local(std::string_view pattern) const { return alphabet_.symbol(table_[code(pattern)]); }

Configuration apply(const CellularAutomaton& f, const Configuration& x) {
  if (!(f.alphabet() == x.alphabet())) throw InputError("alphabet mismatch");
  const std::int64_t a = x.left_boundary() - f.right();
  const std::int64_t b = x.right_boundary() - f.left();
  auto image = [&](std::int64_t i) { return f.local(x.window(i + f.left(), i + f.right())); };
  const auto lp = static_cast<std::int64_t>(x.left_period().size());
  const auto rp = static_cast<std::int64_t>(x.right_period().size());
  Word left, center, right;
  for (std::int64_t i = a - lp; i < a; ++i) left.push_back(image(i));
  for (std::int64_t i = a; i < b; ++i) center.push_back(image(i));
  for (std::int64_t i = b; i < b + rp; ++i) right.push_back(image(i));
  return Configuration::from_parts(x.alphabet(), left, center, a, right);
}

Word apply_periodic(const CellularAutomaton& f, std::string_view z) {
  const auto p = static_cast<std::int64_t>(z.size());
  const std::size_t k = f.alphabet().size();
  std::vector<std::size_t> idx(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) idx[i] = f.alphabet().index(z[i]);
  Word out(z.size(), ' ');
  for (std::int64_t i = 0; i < p; ++i) {
    std::size_t c = 0;
    for (std::int64_t o = f.left(); o <= f.right(); ++o) c = c * k + idx[static_cast<std::size_t>(mod(i + o, p))];
    out[static_cast<std::size_t>(i)] = f.alphabet().symbol(f.local_index(c));
  }
  return out;
}

std::size_t Neighborhood::dependency_count() const {
  return static_cast<std::size_t>(std::count(essential.begin(), essential.end(), true));
}

std::size_t Neighborhood::span() const {
  if (!interval) return 0;
  return static_cast<std::size_t>(interval->second - interval->first + 1);
}

Neighborhood minimal_neighborhood(const CellularAutomaton& f) {
  std::vector<std::size_t> all(f.table().size());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  return neighborhood_over(f, all);
}

Neighborhood minimal_neighborhood_on(const CellularAutomaton& f, const ShiftPresentation& x) {
  std::vector<std::size_t> legal;
  if (x.alphabet() == f.alphabet()) {
    for (const auto& w : language(x, f.width())) legal.push_back(f.code(w));
  }
  return neighborhood_over(f, legal);
}

ShiftPresentation image_presentation(const CellularAutomaton& f, const ShiftPresentation& x) {
  if (!(f.alphabet() == x.alphabet())) throw InputError("alphabet mismatch");
  const std::size_t w = f.width();
  const auto& edges = x.edges();
  std::vector<std::string> names;
  std::vector<Edge> out;
  if (w == 1) {
    for (const auto& n : x.state_names()) names.push_back(n);
    for (const auto& e : edges) {
      out.push_back({e.from, e.to, f.local_index(e.label)});
    }
    return ShiftPresentation(x.alphabet(), std::move(names), std::move(out));
  }
  // Nodes: paths of w-1 edges; an edge appends one more edge.
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t e = 0; e < edges.size(); ++e) frontier.push_back({e});
  for (std::size_t len = 1; len < w - 1; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier) {
      for (std::size_t e : x.out_edges()[edges[p.back()].to]) {
        auto q = p;
        q.push_back(e);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
    if (frontier.size() > (std::size_t{1} << 20)) throw ResourceCapError("image presentation too large");
  }
  for (auto& p : frontier) {
    index.emplace(p, paths.size());
    names.push_back("q" + std::to_string(paths.size()));
    paths.push_back(std::move(p));
  }
  const std::size_t k = x.alphabet().size();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (std::size_t e : x.out_edges()[edges[p.back()].to]) {
      std::size_t code = 0;
      for (std::size_t pe : p) code = code * k + edges[pe].label;
      code = code * k + edges[e].label;
      std::vector<std::size_t> q(p.begin() + 1, p.end());
      q.push_back(e);
      out.push_back({i, index.at(q), f.local_index(code)});
    }
  }
  return ShiftPresentation(x.alphabet(), std::move(names), std::move(out));
}

bool preserves(const CellularAutomaton& f, const ShiftPresentation& x) {
  return language_included(image_presentation(f, x), x);
}

int ca_pseudometric(const CellularAutomaton& f, const CellularAutomaton& g, std::string_view w,
                    std::size_t origin, char zero) {
  if (!(f.alphabet() == g.alphabet())) throw InputError("alphabet mismatch");
  if (!w.empty() && origin >= w.size()) throw InputError("origin lies outside the word");
  const std::string z(1, zero);
  Configuration x = Configuration::from_parts(f.alphabet(), z, w, -static_cast<std::int64_t>(origin), z);
  char a = f.local(x.window(f.left(), f.right()));
  char b = g.local(x.window(g.left(), g.right()));
  return a == b ? 0 : 1;
}

}  // namespace shiftgeom
