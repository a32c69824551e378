#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shiftgeom/rational.hpp"

namespace shiftgeom {

/// Sorted vertex indices.
using Face = std::vector<std::size_t>;

/// Finite abstract simplicial complex, stored with all its nonempty faces.
class AbstractComplex {
 public:
  static constexpr std::size_t kMaxFaceSize = 20;

  AbstractComplex() = default;
  /// Adds every nonempty subset of every given face and every singleton.
  AbstractComplex(std::vector<std::string> vertices, const std::vector<Face>& faces);

  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Ordered by size, then lexicographically.
  const std::vector<Face>& faces() const { return faces_; }
  bool contains(const Face& face) const;
  /// -1 for the empty complex.
  int dimension() const;
  std::size_t face_count(std::size_t size) const;
  std::vector<Face> maximal_faces() const;
  bool is_downward_closed() const;

  friend bool operator==(const AbstractComplex&, const AbstractComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Face> faces_;
};

AbstractComplex disjoint_union(const AbstractComplex& a, const AbstractComplex& b);
/// Brute force over vertex bijections; meant for small complexes.
bool isomorphic(const AbstractComplex& a, const AbstractComplex& b);

/// Point of a simplex in barycentric coordinates.
struct BarycentricPoint {
  Face simplex;
  /// weights[i] belongs to simplex[i]; all positive, summing to 1.
  std::vector<Rational> weights;
};

BarycentricPoint vertex_point(std::size_t v);

/// (sum x_i / y_i) / (sum 1 / y_i).
std::vector<Rational> inverse_weighted_average(const std::vector<std::vector<Rational>>& points,
                                               const std::vector<Rational>& weights);
BarycentricPoint inverse_weighted_average(const std::vector<BarycentricPoint>& points,
                                          const std::vector<Rational>& weights);

}  // namespace shiftgeom
