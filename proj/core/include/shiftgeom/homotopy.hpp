#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shiftgeom/complex.hpp"
#include "shiftgeom/configuration.hpp"
#include "shiftgeom/presentation.hpp"
#include "shiftgeom/rational.hpp"
#include "shiftgeom/shifts.hpp"

namespace shiftgeom {

/// Window [-N, N] of a constructed point; index k holds coordinate k - N.
struct ConstructedWindow {
  Word word;
  /// Positions that were filled by the least legal completion.
  std::vector<bool> filled;
  std::size_t filled_count() const;
};

/// Averaging map: inside the dyadic blocks, copy x where U'(r) has a run
/// of m+1 zeros ahead and y where it has a run of m+1 ones behind, mirrored
/// to negative coordinates; fill the rest with the least legal completion.
ConstructedWindow average(const ShiftPresentation& x_shift, std::size_t m, const Rational& r,
                          const Configuration& x, const Configuration& y, std::int64_t n);

/// Keep x near positions whose 2m-neighbourhood is a factor of T, the
/// anchor far from them, and fill in between.
ConstructedWindow project(const ShiftPresentation& s, const ShiftPresentation& t, const Configuration& anchor,
                          std::size_t m, const Configuration& x, std::int64_t n);

/// Alphabet-least periodic point of X with the shortest period up to `cap`.
Configuration least_periodic_point(const ShiftPresentation& x, std::size_t cap = kDefaultSearchCap);

struct FaceShift {
  Face face;
  ShiftPresentation shift;
};

struct ComplexEmbedding {
  Word w;
  Word v;
  std::vector<Word> u;
  /// Concatenation closure of wv and the wu_i, i in the face.
  std::vector<FaceShift> faces;
};

/// Subshifts of X indexed by the faces of K, ordered like the faces.
ComplexEmbedding embed_complex(const AbstractComplex& k, const ShiftPresentation& x,
                               std::size_t cap = kDefaultSearchCap);

struct PosetElement {
  /// Indices of the transitive components whose intersection this is.
  std::vector<std::size_t> components;
  ShiftPresentation shift;
};

struct ComponentPoset {
  std::vector<PosetElement> elements;
  /// leq[i][j]: element i is a subshift of element j.
  std::vector<std::vector<bool>> leq;
};

struct ComplexExtraction {
  ShiftPresentation source;
  std::vector<ShiftPresentation> components;
  ComponentPoset poset;
  /// Poset element of every vertex of `complex`.
  std::vector<std::size_t> vertex_elements;
  AbstractComplex complex;
  /// Supremum element of every face, aligned with complex.faces().
  std::vector<std::size_t> face_labels;
};

inline constexpr std::size_t kMaxComponents = 20;

/// Nerve-like complex on the minimal nonempty intersections of transitive
/// components: a set of them is a face iff it has a least upper bound.
ComplexExtraction extract_complex(const ShiftPresentation& x);

/// Barycentric coordinates of x in the extracted complex.
BarycentricPoint complex_coordinates(const Configuration& x, const ComplexExtraction& extraction);

}  // namespace shiftgeom
