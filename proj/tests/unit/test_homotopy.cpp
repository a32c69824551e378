#include <gtest/gtest.h>

#include <bit>

#include "shiftgeom/complex.hpp"
#include "shiftgeom/errors.hpp"
#include "shiftgeom/homotopy.hpp"
#include "shiftgeom/metrics.hpp"
#include "support.hpp"

using namespace shiftgeom;
using shiftgeom::fixtures::binary;

namespace {

Configuration cfg(const char* s) { return parse_config(s, binary()); }

ShiftPresentation triangle_union() {
  return shift_union(shift_union(full_shift(binary()), full_shift(Alphabet("12"))), full_shift(Alphabet("20")));
}

std::vector<Configuration> sample_points(const ShiftPresentation& x, std::size_t max_period) {
  std::vector<Configuration> out;
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (const auto& w : periodic_words(x, p)) out.push_back(Configuration::periodic(x.alphabet(), w));
  }
  return out;
}

// Every face of a maximal face is present and nothing else.
bool downward_closed_by_enumeration(const AbstractComplex& k) {
  for (const auto& face : k.faces()) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << face.size()); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (mask >> i & 1) sub.push_back(face[i]);
      }
      if (!k.contains(sub)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Average, EndpointLawsAndMembership) {
  const std::vector<std::pair<ShiftPresentation, std::size_t>> shifts = {
      {fixtures::full_binary(), 0}, {fixtures::golden_mean(), 1}, {fixtures::even_shift(), 2}};
  for (const auto& [x_shift, m] : shifts) {
    auto points = sample_points(x_shift, 4);
    for (std::size_t a = 0; a < points.size(); a += 2) {
      for (std::size_t b = 1; b < points.size(); b += 3) {
        const std::int64_t n = 100;
        const std::size_t mm = m + 1;
        const std::size_t bound = 2 * (2 * mm + 2) * (std::bit_width(static_cast<std::uint64_t>(n)) - 1 + 2);
        for (int r = 0; r <= 1; ++r) {
          auto out = average(x_shift, m, Rational(r), points[a], points[b], n);
          const Configuration& chosen = r == 1 ? points[a] : points[b];
          Word expected = chosen.window(-n, n);
          for (std::size_t i = 0; i < out.word.size(); ++i) {
            if (!out.filled[i]) ASSERT_EQ(out.word[i], expected[i]);
          }
          ASSERT_LE(out.filled_count(), bound);
          ASSERT_TRUE(in_language(x_shift, out.word));
        }
        auto mid = average(x_shift, m, Rational(1, 3), points[a], points[b], n);
        ASSERT_TRUE(in_language(x_shift, mid.word));
      }
    }
  }
}

TEST(Average, HalfwayOnFullShiftHasHalfDensity) {
  auto out = average(fixtures::full_binary(), 0, Rational(1, 2), cfg("inf(0).inf(0)"), cfg("inf(1).inf(1)"), 31);
  const auto zeros = static_cast<double>(std::count(out.word.begin(), out.word.end(), '0'));
  EXPECT_NEAR(zeros / 63.0, 0.5, 0.25);
  auto big = average(fixtures::full_binary(), 0, Rational(1, 2), cfg("inf(0).inf(0)"), cfg("inf(1).inf(1)"), 4096);
  const auto big_zeros = static_cast<double>(std::count(big.word.begin(), big.word.end(), '0'));
  EXPECT_NEAR(big_zeros / 8193.0, 0.5, 0.01);
}

TEST(Average, Preconditions) {
  auto golden = fixtures::golden_mean();
  auto zero = cfg("inf(0).inf(0)");
  EXPECT_THROW(average(golden, 1, Rational(1, 2), cfg("inf(1).inf(1)"), zero, 10), PreconditionError);
  EXPECT_THROW(average(golden, 1, Rational(3, 2), zero, zero, 10), PreconditionError);
  EXPECT_THROW(average(golden, 0, Rational(1, 2), zero, zero, 10), PreconditionError);
}

TEST(Project, Examples) {
  auto full = fixtures::full_binary();
  auto golden = fixtures::golden_mean();
  auto anchor = cfg("inf(0).inf(0)");
  auto inside = cfg("inf(100).inf(100)");
  EXPECT_EQ(project(full, golden, anchor, 1, inside, 20).word, inside.window(-20, 20));
  auto ones = project(full, golden, anchor, 1, cfg("inf(1).inf(1)"), 20);
  EXPECT_EQ(ones.word, anchor.window(-20, 20));
  EXPECT_EQ(ones.filled_count(), 0u);

  EXPECT_THROW(project(golden, full, anchor, 1, inside, 5), PreconditionError);
  EXPECT_THROW(project(full, golden, cfg("inf(1).inf(1)"), 1, inside, 5), PreconditionError);
  EXPECT_THROW(project(full, golden, anchor, 0, inside, 5), PreconditionError);
}

TEST(Project, OutputInTAndCloserForCloserInputs) {
  auto full = fixtures::full_binary();
  auto golden = fixtures::golden_mean();
  auto anchor = cfg("inf(0).inf(0)");
  const std::int64_t n = 600;
  Rational previous = 2;
  for (std::size_t t = 3; t <= 12; ++t) {
    // One "11" per period: distance to the golden mean is 1/(t+2).
    auto x = Configuration::periodic(binary(), "11" + Word(t, '0'));
    const Rational dist = distance_to_shift(x, golden).distance;
    ASSERT_EQ(dist, Rational(1, static_cast<std::int64_t>(t + 2)));
    auto out = project(full, golden, anchor, 1, x, n);
    ASSERT_TRUE(in_language(golden, out.word));
    Rational d = density_estimate(WindowSource::of(x), WindowSource::of(out.word, -n), n);
    ASSERT_LE(d, previous);
    ASSERT_LE(d, Rational(6) * dist);
    previous = d;
  }
}

TEST(InverseWeightedAverage, Examples) {
  using V = std::vector<Rational>;
  EXPECT_EQ(inverse_weighted_average({V{Rational(1, 3), Rational(2)}}, {Rational(5)}),
            (V{Rational(1, 3), Rational(2)}));
  EXPECT_EQ(inverse_weighted_average({V{Rational(4)}, V{Rational(4)}}, {Rational(1), Rational(7)}), V{Rational(4)});
  EXPECT_EQ(inverse_weighted_average({V{Rational(0)}, V{Rational(3)}}, {Rational(1), Rational(2)}), V{Rational(1)});
  EXPECT_THROW(inverse_weighted_average(std::vector<V>{}, {}), InputError);
  EXPECT_THROW(inverse_weighted_average({V{Rational(0)}}, {Rational(0)}), InputError);

  auto mid = inverse_weighted_average({vertex_point(0), vertex_point(2)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(mid.simplex, (Face{0, 2}));
  EXPECT_EQ(mid.weights, (V{Rational(1, 2), Rational(1, 2)}));
}

TEST(AbstractComplex, ClosureAndIsomorphism) {
  AbstractComplex tri({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(tri.dimension(), 1);
  EXPECT_EQ(tri.face_count(1), 3u);
  EXPECT_EQ(tri.face_count(2), 3u);
  EXPECT_FALSE(tri.contains({0, 1, 2}));
  EXPECT_TRUE(downward_closed_by_enumeration(tri));
  AbstractComplex solid({"x", "y", "z"}, {{0, 1, 2}});
  EXPECT_EQ(solid.faces().size(), 7u);
  EXPECT_FALSE(isomorphic(tri, solid));
  AbstractComplex relabeled({"p", "q", "r"}, {{2, 1}, {0, 1}, {2, 0}});
  EXPECT_TRUE(isomorphic(tri, relabeled));
  auto two = disjoint_union(AbstractComplex({"a"}, {}), AbstractComplex({"b"}, {}));
  EXPECT_EQ(two.vertices().size(), 2u);
  EXPECT_EQ(two.dimension(), 0);
}

TEST(EmbedComplex, SingleVertexAndEdge) {
  auto full = fixtures::full_binary();
  auto vertex = embed_complex(AbstractComplex({"v"}, {}), full);
  EXPECT_EQ(vertex.w, "0");
  ASSERT_EQ(vertex.u.size(), 1u);
  EXPECT_EQ(vertex.v.size(), vertex.u[0].size() + 1);
  ASSERT_EQ(vertex.faces.size(), 1u);
  EXPECT_FALSE(vertex.faces[0].shift.empty());
  EXPECT_NO_THROW(mixing_distance(vertex.faces[0].shift));

  auto edge = embed_complex(AbstractComplex({"a", "b"}, {{0, 1}}), full);
  ASSERT_EQ(edge.faces.size(), 3u);
  EXPECT_TRUE(is_unbordered(edge.w));
  std::set<Word> distinct(edge.u.begin(), edge.u.end());
  distinct.insert(edge.v);
  EXPECT_EQ(distinct.size(), 3u);
  for (const auto& u : edge.u) {
    EXPECT_FALSE(occurs_in(edge.w, u));
    EXPECT_TRUE(in_language(full, edge.w + u + edge.w));
    EXPECT_EQ(u.size() + 1, edge.v.size());
  }
  const auto& whole = edge.faces[2].shift;
  EXPECT_EQ(edge.faces[2].face, (Face{0, 1}));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (const auto& w : language(edge.faces[i].shift, n)) ASSERT_TRUE(in_language(whole, w));
    }
  }
  for (const auto& f : edge.faces) EXPECT_NO_THROW(mixing_distance(f.shift));
}

TEST(EmbedComplex, TriangleInGoldenMean) {
  auto golden = fixtures::golden_mean();
  AbstractComplex tri({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  auto e = embed_complex(tri, golden);
  EXPECT_EQ(e.faces.size(), 6u);
  for (const auto& f : e.faces) {
    EXPECT_NO_THROW(mixing_distance(f.shift));
    EXPECT_TRUE(language_included(f.shift, golden));
  }
  EXPECT_THROW(embed_complex(tri, periodic_orbit(binary(), "0")), PreconditionError);
}

TEST(ExtractComplex, Examples) {
  auto point = extract_complex(fixtures::golden_mean());
  EXPECT_EQ(point.complex.vertices().size(), 1u);
  EXPECT_EQ(point.complex.dimension(), 0);

  auto two = extract_complex(shift_union(full_shift(binary()), full_shift(Alphabet("23"))));
  EXPECT_EQ(two.complex.vertices().size(), 2u);
  EXPECT_EQ(two.complex.face_count(2), 0u);

  auto tri = extract_complex(triangle_union());
  EXPECT_EQ(tri.components.size(), 3u);
  EXPECT_EQ(tri.complex.face_count(1), 3u);
  EXPECT_EQ(tri.complex.face_count(2), 3u);
  EXPECT_EQ(tri.complex.face_count(3), 0u);
  EXPECT_TRUE(downward_closed_by_enumeration(tri.complex));
  Alphabet abc("012");
  std::set<Word> minimal;
  for (std::size_t e : tri.vertex_elements) {
    const auto& shift = tri.poset.elements[e].shift;
    ASSERT_EQ(periodic_words(shift, 1).size(), 1u);
    EXPECT_TRUE(same_shift(shift, periodic_orbit(shift.alphabet(), periodic_words(shift, 1)[0])));
    minimal.insert(periodic_words(shift, 1)[0]);
  }
  EXPECT_EQ(minimal, (std::set<Word>{"0", "1", "2"}));
}

TEST(ExtractComplex, DisjointUnionIsFunctorial) {
  const std::vector<ShiftPresentation> pieces = {fixtures::golden_mean(),
                                                 shift_union(full_shift(Alphabet("ab")), full_shift(Alphabet("bc")))};
  auto shifted = shift_union(full_shift(Alphabet("xy")), shift_union(full_shift(Alphabet("yz")), full_shift(Alphabet("zx"))));
  for (const auto& a : pieces) {
    auto ka = extract_complex(a).complex;
    auto kb = extract_complex(shifted).complex;
    auto joint = extract_complex(shift_union(a, shifted)).complex;
    EXPECT_TRUE(isomorphic(joint, disjoint_union(ka, kb)));
    EXPECT_TRUE(downward_closed_by_enumeration(joint));
  }
}

TEST(ComplexCoordinates, Examples) {
  auto tri = extract_complex(triangle_union());
  Alphabet abc("012");
  auto vertex_of = [&](char s) {
    for (std::size_t v = 0; v < tri.vertex_elements.size(); ++v) {
      if (periodic_words(tri.poset.elements[tri.vertex_elements[v]].shift, 1)[0] == std::string(1, s)) return v;
    }
    return std::size_t{99};
  };
  auto one = complex_coordinates(parse_config("inf(1).inf(1)", abc), tri);
  EXPECT_EQ(one.simplex, Face{vertex_of('1')});
  EXPECT_EQ(one.weights, std::vector<Rational>{Rational(1)});

  auto mid = complex_coordinates(parse_config("inf(01).inf(01)", abc), tri);
  Face edge{vertex_of('0'), vertex_of('1')};
  std::sort(edge.begin(), edge.end());
  EXPECT_EQ(mid.simplex, edge);
  EXPECT_EQ(mid.weights, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));

  auto skew = complex_coordinates(parse_config("inf(001).inf(001)", abc), tri);
  EXPECT_EQ(skew.simplex, edge);
  Rational sum = 0;
  for (const auto& w : skew.weights) {
    EXPECT_GT(w, Rational(0));
    sum += w;
  }
  EXPECT_EQ(sum, Rational(1));
  EXPECT_TRUE(tri.complex.contains(skew.simplex));
  const std::size_t zero_pos = edge[0] == vertex_of('0') ? 0 : 1;
  EXPECT_GT(skew.weights[zero_pos], skew.weights[1 - zero_pos]);

  EXPECT_THROW(complex_coordinates(parse_config("inf(012).inf(012)", abc), tri), PreconditionError);
  auto single = extract_complex(fixtures::golden_mean());
  auto p = complex_coordinates(cfg("inf(01).inf(0)"), single);
  EXPECT_EQ(p.weights, std::vector<Rational>{Rational(1)});
}
