#include "shiftgeom/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "shiftgeom/errors.hpp"

namespace shiftgeom {
namespace {

bool face_order(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void check_weights(const std::vector<Rational>& weights, std::size_t n) {
  if (n == 0) throw InputError("inverse_weighted_average: no points");
  if (weights.size() != n) throw InputError("inverse_weighted_average: weight count mismatch");
  for (const auto& w : weights) {
    if (w <= 0) throw InputError("inverse_weighted_average: weights must be positive");
  }
}

}  // namespace

AbstractComplex::AbstractComplex(std::vector<std::string> vertices, const std::vector<Face>& faces)
    : vertices_(std::move(vertices)) {
  std::set<Face> all;
  for (std::size_t v = 0; v < vertices_.size(); ++v) all.insert({v});
  for (Face f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.size() > kMaxFaceSize) throw ResourceCapError("face has more than 20 vertices");
    for (std::size_t v : f) {
      if (v >= vertices_.size()) throw InputError("face refers to an unknown vertex");
    }
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << f.size()); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      all.insert(std::move(sub));
    }
  }
  faces_.assign(all.begin(), all.end());
  std::sort(faces_.begin(), faces_.end(), face_order);
}

bool AbstractComplex::contains(const Face& face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int AbstractComplex::dimension() const {
  if (faces_.empty()) return -1;
  return static_cast<int>(faces_.back().size()) - 1;
}

std::size_t AbstractComplex::face_count(std::size_t size) const {
  return static_cast<std::size_t>(
      std::count_if(faces_.begin(), faces_.end(), [&](const Face& f) { return f.size() == size; }));
}

std::vector<Face> AbstractComplex::maximal_faces() const {
  std::vector<Face> out;
  for (const auto& f : faces_) {
    bool maximal = std::none_of(faces_.begin(), faces_.end(), [&](const Face& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

bool AbstractComplex::is_downward_closed() const {
  for (const auto& f : faces_) {
    for (std::size_t i = 0; i < f.size() && f.size() > 1; ++i) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<long>(i));
      if (!contains(sub)) return false;
    }
  }
  return true;
}

AbstractComplex disjoint_union(const AbstractComplex& a, const AbstractComplex& b) {
  std::vector<std::string> names = a.vertices();
  for (const auto& v : b.vertices()) names.push_back(v);
  std::vector<Face> faces = a.faces();
  const std::size_t off = a.vertices().size();
  for (Face f : b.faces()) {
    for (auto& v : f) v += off;
    faces.push_back(std::move(f));
  }
  return AbstractComplex(std::move(names), faces);
}

bool isomorphic(const AbstractComplex& a, const AbstractComplex& b) {
  const std::size_t n = a.vertices().size();
  if (n != b.vertices().size() || a.faces().size() != b.faces().size()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& f : a.faces()) {
      Face g;
      for (std::size_t v : f) g.push_back(perm[v]);
      std::sort(g.begin(), g.end());
      if (!b.contains(g)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

BarycentricPoint vertex_point(std::size_t v) { return {{v}, {Rational(1)}}; }

std::vector<Rational> inverse_weighted_average(const std::vector<std::vector<Rational>>& points,
                                               const std::vector<Rational>& weights) {
  check_weights(weights, points.size());
  const std::size_t d = points[0].size();
  std::vector<Rational> sum(d, Rational(0));
  Rational total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw InputError("inverse_weighted_average: dimension mismatch");
    const Rational inv = 1 / weights[i];
    for (std::size_t k = 0; k < d; ++k) sum[k] += inv * points[i][k];
    total += inv;
  }
  for (auto& s : sum) s /= total;
  return sum;
}

BarycentricPoint inverse_weighted_average(const std::vector<BarycentricPoint>& points,
                                          const std::vector<Rational>& weights) {
  check_weights(weights, points.size());
  std::map<std::size_t, Rational> sum;
  Rational total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational inv = 1 / weights[i];
    for (std::size_t k = 0; k < points[i].simplex.size(); ++k) {
      sum[points[i].simplex[k]] += inv * points[i].weights[k];
    }
    total += inv;
  }
  BarycentricPoint out;
  for (const auto& [v, w] : sum) {
    if (w == 0) continue;
    out.simplex.push_back(v);
    out.weights.push_back(w / total);
  }
  return out;
}

}  // namespace shiftgeom
