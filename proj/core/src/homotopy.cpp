#include "shiftgeom/homotopy.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>

#include "shiftgeom/errors.hpp"
#include "shiftgeom/metrics.hpp"
#include "shiftgeom/paths.hpp"

namespace shiftgeom {
namespace {

ConstructedWindow complete(const ShiftPresentation& x, const std::vector<std::optional<char>>& pattern,
                           const char* what) {
  auto word = least_completion(x, pattern);
  if (!word) throw PreconditionError(std::string(what) + ": no legal completion of the window");
  ConstructedWindow out{std::move(*word), std::vector<bool>(pattern.size(), false)};
  for (std::size_t i = 0; i < pattern.size(); ++i) out.filled[i] = !pattern[i];
  return out;
}

// Block-local fill of U'(r): '0' for the first floor(r*l) positions.
bool uprime_zero(const Rational& r, std::uint64_t t) {
  Block b = block_of(t);
  return t - b.begin < static_cast<std::uint64_t>(r.floor_mul(static_cast<std::int64_t>(b.length())));
}

}  // namespace

std::size_t ConstructedWindow::filled_count() const {
  return static_cast<std::size_t>(std::count(filled.begin(), filled.end(), true));
}

ConstructedWindow average(const ShiftPresentation& x_shift, std::size_t m, const Rational& r,
                          const Configuration& x, const Configuration& y, std::int64_t n) {
  if (r < 0 || r > 1) throw PreconditionError("r is outside [0,1]");
  if (!contains_config(x_shift, x)) throw PreconditionError("x is not in X");
  if (!contains_config(x_shift, y)) throw PreconditionError("y is not in X");
  const std::size_t md = mixing_distance(x_shift);
  if (md > m) {
    throw PreconditionError("m = " + std::to_string(m) + " is below the mixing distance " + std::to_string(md));
  }
  const std::uint64_t mm = m + 1;
  std::vector<std::optional<char>> pattern;
  pattern.reserve(static_cast<std::size_t>(2 * n + 1));
  for (std::int64_t i = -n; i <= n; ++i) {
    const std::uint64_t j = static_cast<std::uint64_t>(i >= 0 ? i : -1 - i);
    const Block b = block_of(j);
    std::optional<char> symbol;
    if (j >= b.begin + mm && j + mm < b.end) {
      // Within a block U' is 0^p 1^q, so a run test reduces to its endpoints.
      if (uprime_zero(r, j + mm - 1)) {
        symbol = x.at(i);
      } else if (!uprime_zero(r, j + 1 - mm)) {
        symbol = y.at(i);
      }
    }
    pattern.push_back(symbol);
  }
  return complete(x_shift, pattern, "average");
}

ConstructedWindow project(const ShiftPresentation& s, const ShiftPresentation& t, const Configuration& anchor,
                          std::size_t m, const Configuration& x, std::int64_t n) {
  if (!language_included(t, s)) throw PreconditionError("T is not a subshift of S");
  if (!contains_config(t, anchor)) throw PreconditionError("anchor is not in T");
  const std::size_t md = mixing_distance(t);
  if (md > m) {
    throw PreconditionError("m = " + std::to_string(m) + " is below the mixing distance " + std::to_string(md) +
                            " of T");
  }
  if (!contains_config(s, x)) throw PreconditionError("x is not in S");
  const auto mi = static_cast<std::int64_t>(m);
  // in_r[j + N + 2m] for j in [-N-2m, N+2m].
  std::vector<bool> in_r(static_cast<std::size_t>(2 * n + 4 * mi + 1));
  for (std::int64_t j = -n - 2 * mi; j <= n + 2 * mi; ++j) {
    in_r[static_cast<std::size_t>(j + n + 2 * mi)] = in_language(t, x.window(j - 2 * mi, j + 2 * mi));
  }
  auto near = [&](std::int64_t i, std::int64_t radius) {
    for (std::int64_t j = i - radius; j <= i + radius; ++j) {
      if (in_r[static_cast<std::size_t>(j + n + 2 * mi)]) return true;
    }
    return false;
  };
  std::vector<std::optional<char>> pattern;
  for (std::int64_t i = -n; i <= n; ++i) {
    if (near(i, mi)) pattern.push_back(x.at(i));
    else if (!near(i, 2 * mi)) pattern.push_back(anchor.at(i));
    else pattern.push_back(std::nullopt);
  }
  return complete(t, pattern, "project");
}

Configuration least_periodic_point(const ShiftPresentation& x, std::size_t cap) {
  for (std::size_t p = 1; p <= cap; ++p) {
    auto words = periodic_words(x, p);
    if (!words.empty()) return Configuration::periodic(x.alphabet(), words.front());
  }
  throw ResourceCapError("no periodic point of period <= " + std::to_string(cap));
}

ComplexEmbedding embed_complex(const AbstractComplex& k, const ShiftPresentation& x, std::size_t cap) {
  const std::size_t n = k.vertices().size();
  if (n == 0) throw PreconditionError("complex has no vertices");
  mixing_distance(x);
  if (!positive_entropy(x)) throw PreconditionError("shift has zero entropy");
  const ShiftPresentation cover = shannon_cover(x);
  const Alphabet& alphabet = x.alphabet();

  for (std::size_t len = 1; len <= cap; ++len) {
    std::vector<Word> candidates;
    for_each_factor(cover, len, [&](const Word& w, const StateSet& s) {
      if (count(s) == 1 && is_unbordered(w)) candidates.push_back(w);
      return true;
    });
    for (const auto& w : candidates) {
      for (std::size_t kk = 1; kk <= cap; ++kk) {
        auto us = least_connectors(cover, w, kk, n);
        if (us.size() < n) continue;
        auto v = least_connector(cover, w, kk + 1);
        if (!v) continue;
        ComplexEmbedding out{w, *v, us, {}};
        for (const auto& face : k.faces()) {
          std::vector<Word> blocks{w + *v};
          for (std::size_t i : face) blocks.push_back(w + us[i]);
          out.faces.push_back({face, concatenation_shift(alphabet, blocks)});
        }
        bool ok = true;
        for (const auto& f : out.faces) {
          if (!language_included(f.shift, x)) {
            ok = false;
            break;
          }
          mixing_distance(f.shift);
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < out.faces.size(); ++i) {
          for (std::size_t j = 0; j < out.faces.size(); ++j) {
            const Face& a = out.faces[i].face;
            const Face& b = out.faces[j].face;
            if (a.size() + 1 == b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()) &&
                !language_included(out.faces[i].shift, out.faces[j].shift)) {
              throw std::logic_error("embed_complex: face subshifts are not nested");
            }
          }
        }
        return out;
      }
    }
  }
  throw ResourceCapError("no embedding words found within search cap " + std::to_string(cap));
}

ComplexExtraction extract_complex(const ShiftPresentation& x) {
  if (x.empty()) throw EmptyShiftError();
  ComplexExtraction out{x, transitive_components(x).components, {}, {}, {}, {}};
  const std::size_t t = out.components.size();
  if (t > kMaxComponents) {
    throw ResourceCapError(std::to_string(t) + " transitive components exceed the cap of 20");
  }

  std::vector<std::uint32_t> masks;
  auto& elements = out.poset.elements;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << t); ++mask) {
    std::optional<ShiftPresentation> y;
    for (std::size_t i = 0; i < t; ++i) {
      if (!(mask & (1u << i))) continue;
      y = y ? intersect(*y, out.components[i]) : out.components[i];
      if (y->empty()) break;
    }
    if (y->empty()) continue;
    bool merged = false;
    for (std::size_t e = 0; e < elements.size(); ++e) {
      if (same_shift(elements[e].shift, *y)) {
        masks[e] |= mask;
        merged = true;
        break;
      }
    }
    if (!merged) {
      masks.push_back(mask);
      elements.push_back({{}, std::move(*y)});
    }
  }
  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::size_t i = 0; i < t; ++i) {
      if (masks[e] & (1u << i)) elements[e].components.push_back(i);
    }
  }

  const std::size_t ne = elements.size();
  auto& leq = out.poset.leq;
  leq.assign(ne, std::vector<bool>(ne, false));
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = 0; j < ne; ++j) leq[i][j] = i == j || language_included(elements[i].shift, elements[j].shift);
  }
  for (std::size_t i = 0; i < ne; ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < ne && minimal; ++j) minimal = j == i || !leq[j][i];
    if (minimal) out.vertex_elements.push_back(i);
  }
  const std::size_t nv = out.vertex_elements.size();
  if (nv > AbstractComplex::kMaxFaceSize) throw ResourceCapError("more than 20 minimal elements");

  std::vector<std::string> names;
  for (std::size_t e : out.vertex_elements) {
    std::string name = "Y{";
    for (std::size_t i = 0; i < elements[e].components.size(); ++i) {
      if (i) name += ",";
      name += std::to_string(elements[e].components[i]);
    }
    names.push_back(name + "}");
  }
  std::map<Face, std::size_t> sup_of;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << nv); ++mask) {
    Face face;
    for (std::size_t v = 0; v < nv; ++v) {
      if (mask & (1u << v)) face.push_back(v);
    }
    std::vector<std::size_t> upper;
    for (std::size_t q = 0; q < ne; ++q) {
      bool bound = std::all_of(face.begin(), face.end(), [&](std::size_t v) { return leq[out.vertex_elements[v]][q]; });
      if (bound) upper.push_back(q);
    }
    for (std::size_t q : upper) {
      if (std::all_of(upper.begin(), upper.end(), [&](std::size_t o) { return leq[q][o]; })) {
        sup_of[face] = q;
        break;
      }
    }
  }
  std::vector<Face> faces;
  for (const auto& [f, q] : sup_of) faces.push_back(f);
  out.complex = AbstractComplex(std::move(names), faces);
  for (const auto& f : out.complex.faces()) {
    auto it = sup_of.find(f);
    if (it == sup_of.end()) throw std::logic_error("extract_complex: face without supremum");
    out.face_labels.push_back(it->second);
  }
  return out;
}

BarycentricPoint complex_coordinates(const Configuration& x, const ComplexExtraction& extraction) {
  if (!contains_config(extraction.source, x)) throw PreconditionError("x is not in X");
  const auto& elements = extraction.poset.elements;
  const auto& leq = extraction.poset.leq;
  const std::size_t ne = elements.size();
  std::vector<std::optional<Rational>> dist(ne);
  auto distance = [&](std::size_t e) {
    if (!dist[e]) dist[e] = distance_to_shift(x, elements[e].shift).distance;
    return *dist[e];
  };
  auto below = [&](std::size_t q, std::size_t p) { return q != p && leq[q][p]; };
  // First element (in poset order) at distance zero with nothing strictly
  // below it also at distance zero.
  auto lowest_zero = [&](const std::vector<std::size_t>& among) -> std::optional<std::size_t> {
    for (std::size_t p : among) {
      if (distance(p) != 0) continue;
      bool lowest = std::none_of(among.begin(), among.end(),
                                 [&](std::size_t q) { return below(q, p) && distance(q) == 0; });
      if (lowest) return p;
    }
    return std::nullopt;
  };

  std::vector<std::size_t> all(ne);
  for (std::size_t e = 0; e < ne; ++e) all[e] = e;
  auto start = lowest_zero(all);
  if (!start) {
    throw PreconditionError("x is at positive distance from every component intersection");
  }

  std::vector<std::optional<BarycentricPoint>> memo(ne);
  std::function<BarycentricPoint(std::size_t)> g = [&](std::size_t p) -> BarycentricPoint {
    if (memo[p]) return *memo[p];
    BarycentricPoint result;
    auto v = std::find(extraction.vertex_elements.begin(), extraction.vertex_elements.end(), p);
    if (v != extraction.vertex_elements.end()) {
      result = vertex_point(static_cast<std::size_t>(v - extraction.vertex_elements.begin()));
    } else {
      std::vector<std::size_t> lower;
      for (std::size_t q = 0; q < ne; ++q) {
        if (below(q, p)) lower.push_back(q);
      }
      if (auto z = lowest_zero(lower)) {
        result = g(*z);
      } else {
        std::vector<BarycentricPoint> points;
        std::vector<Rational> weights;
        for (std::size_t q : lower) {
          points.push_back(g(q));
          weights.push_back(distance(q));
        }
        result = inverse_weighted_average(points, weights);
      }
    }
    memo[p] = result;
    return result;
  };
  return g(*start);
}

}  // namespace shiftgeom
