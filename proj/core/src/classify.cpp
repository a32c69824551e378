#include "shiftgeom/classify.hpp"

#include <algorithm>
#include <numeric>

#include "shiftgeom/errors.hpp"
#include "shiftgeom/metrics.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom {
namespace {

struct PeriodicPoint {
  Word word;
  Word image;
  bool representative;
};

// Mismatches over one common period of the periodic points with words a, b.
std::size_t common_mismatch(const Word& a, const Word& b, std::size_t rot, std::size_t len) {
  std::size_t h = 0;
  const std::size_t p = a.size(), q = b.size();
  for (std::size_t i = 0; i < len; ++i) h += a[i % p] != b[(i + rot) % q];
  return h;
}

std::optional<Witness> multi_cell_witness(const CellularAutomaton& f, const Neighborhood& nb) {
  const Alphabet& alphabet = f.alphabet();
  const std::size_t r = nb.span();
  const std::size_t offset = static_cast<std::size_t>(nb.interval->first - f.left());
  // Rule restricted to its minimal interval.
  auto g = [&](const Word& w) {
    Word full = f.pattern(0);
    for (std::size_t i = 0; i < r; ++i) full[offset + i] = w[i];
    return f.local(full);
  };
  const std::size_t k = alphabet.size();
  std::uint64_t words = 1;
  for (std::size_t i = 0; i + 1 < r; ++i) words *= k;

  std::optional<Word> u, v;
  char a = 0, b = 0, c = 0, d = 0;
  for (std::uint64_t n = 0; n < words && !u; ++n) {
    Word cand = alphabet.word_from_index(n, r - 1);
    for (std::size_t i = 0; i < k && !u; ++i) {
      for (std::size_t j = i + 1; j < k && !u; ++j) {
        if (g(cand + alphabet.symbol(i)) != g(cand + alphabet.symbol(j))) {
          u = cand;
          a = alphabet.symbol(i);
          b = alphabet.symbol(j);
        }
      }
    }
  }
  for (std::uint64_t n = 0; n < words && !v; ++n) {
    Word cand = alphabet.word_from_index(n, r - 1);
    for (std::size_t i = 0; i < k && !v; ++i) {
      for (std::size_t j = i + 1; j < k && !v; ++j) {
        if (g(alphabet.symbol(i) + cand) != g(alphabet.symbol(j) + cand)) {
          v = cand;
          c = alphabet.symbol(i);
          d = alphabet.symbol(j);
        }
      }
    }
  }
  if (!u || !v) return std::nullopt;
  auto row = [&](char s) { return g(*u + s); };
  auto col = [&](char s) { return g(s + *v); };
  std::vector<std::pair<char, char>> order = {{a, c}, {a, d}, {b, c}, {b, d}};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) order.emplace_back(alphabet.symbol(i), alphabet.symbol(j));
  }
  for (auto [s, t] : order) {
    if (s == t || row(s) == row(t) || col(s) == col(t)) continue;
    Configuration x = Configuration::periodic(alphabet, *u + s + *v);
    Configuration y = Configuration::periodic(alphabet, *u + t + *v);
    return Witness{x, y, d_besicovitch(x, y), d_besicovitch(apply(f, x), apply(f, y))};
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify_full_shift(const CellularAutomaton& f) {
  ClassificationReport out;
  out.minimal = minimal_neighborhood(f);
  const std::size_t deps = out.minimal.dependency_count();
  out.contracting = deps <= 1;
  if (deps == 1) {
    const std::size_t j = static_cast<std::size_t>(
        std::find(out.minimal.essential.begin(), out.minimal.essential.end(), true) - out.minimal.essential.begin());
    std::vector<std::size_t> perm(f.alphabet().size());
    Word p = f.pattern(0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
      p[j] = f.alphabet().symbol(s);
      perm[s] = f.local_index(f.code(p));
    }
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (bijective) {
      out.isometric = out.expanding = true;
      out.decomposition = Decomposition{f.left() + static_cast<int>(j), perm};
    }
  }
  if (!out.contracting) {
    out.witness = multi_cell_witness(f, out.minimal);
    if (!out.witness) throw std::logic_error("classify_full_shift: no witness for a multi-cell rule");
  }
  return out;
}

Decomposition isometry_decomposition(const CellularAutomaton& f) {
  auto report = classify_full_shift(f);
  if (!report.isometric) throw PreconditionError("cellular automaton is not an isometry of the full shift");
  return *report.decomposition;
}

SubshiftVerdict check_on_subshift(const CellularAutomaton& f, const ShiftPresentation& x, std::size_t period_bound) {
  if (!preserves(f, x)) throw PreconditionError("cellular automaton does not preserve the shift");
  SubshiftVerdict out;
  out.period_bound = period_bound;
  const Alphabet& alphabet = x.alphabet();
  std::vector<PeriodicPoint> orbits;
  for (std::size_t p = 1; p <= period_bound; ++p) {
    for (const auto& w : periodic_words(x, p)) {
      if (!is_primitive(w)) continue;
      ++out.points;
      if (least_rotation(alphabet, w) == w) orbits.push_back({w, apply_periodic(f, w), true});
    }
  }
  out.orbits = orbits.size();

  // Pairs up to simultaneous shift: x is an orbit representative and y runs
  // over gcd(|x|, |y|) rotations of each orbit representative.
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& a = orbits[i];
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      const auto& b = orbits[j];
      const std::size_t g = std::gcd(a.word.size(), b.word.size());
      const std::size_t len = std::lcm(a.word.size(), b.word.size());
      for (std::size_t rot = 0; rot < g; ++rot) {
        if (i == j && rot == 0) continue;
        ++out.pairs;
        const std::size_t h_in = common_mismatch(a.word, b.word, rot, len);
        const std::size_t h_out = common_mismatch(a.image, b.image, rot, len);
        if (h_in == h_out) continue;
        auto make = [&] {
          Configuration xa = Configuration::periodic(alphabet, a.word);
          Configuration yb = Configuration::periodic(alphabet, rotate_left(b.word, rot));
          return Witness{xa, yb, Rational(static_cast<std::int64_t>(h_in), static_cast<std::int64_t>(len)),
                         Rational(static_cast<std::int64_t>(h_out), static_cast<std::int64_t>(len))};
        };
        if (!out.isometric.violated) out.isometric = {true, make()};
        if (h_out > h_in && !out.contracting.violated) out.contracting = {true, make()};
        if (h_out < h_in && !out.expanding.violated) out.expanding = {true, make()};
        if (out.contracting.violated && out.expanding.violated) return out;
      }
    }
  }
  return out;
}

RigidityVerdict rigidity_precondition(const ShiftPresentation& x, char zero, std::size_t max_length,
                                      std::size_t period_bound) {
  RigidityVerdict out;
  const Alphabet& alphabet = x.alphabet();
  if (!alphabet.contains(zero) || !contains_config(x, Configuration::periodic(alphabet, std::string(1, zero)))) {
    out.reason = "the constant point of the zero symbol is not in X";
    return out;
  }
  std::vector<std::vector<Word>> words(period_bound + 1);
  for (std::size_t p = 1; p <= period_bound; ++p) words[p] = periodic_words(x, p);
  auto in_periodic = [&](const Word& w, std::size_t p) {
    for (const auto& z : words[p]) {
      if (occurs_in(w, cyclic_extend(z, w.size() + p))) return true;
    }
    return false;
  };
  for (std::size_t n = 1; n <= max_length; ++n) {
    for (const auto& w : language(x, n)) {
      for (char s : alphabet.symbols()) {
        if (w.find(s) == Word::npos) continue;
        std::optional<std::size_t> used;
        for (std::size_t p = 1; p <= period_bound && !used; ++p) {
          Word marker = std::string(1, s) + std::string(p - 1, zero);
          if (contains_config(x, Configuration::periodic(alphabet, marker)) && in_periodic(w, p)) used = p;
        }
        if (!used) {
          out.reason = "no common period up to " + std::to_string(period_bound);
          out.word = w;
          out.symbol = s;
          return out;
        }
        out.largest_period = std::max(out.largest_period, *used);
      }
    }
  }
  out.pass = true;
  return out;
}

}  // namespace shiftgeom
