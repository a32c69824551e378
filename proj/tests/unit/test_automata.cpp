#include <gtest/gtest.h>

#include "shiftgeom/automaton.hpp"
#include "shiftgeom/classify.hpp"
#include "shiftgeom/errors.hpp"
#include "shiftgeom/metrics.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace shiftgeom;
using shiftgeom::fixtures::binary;

namespace {

Configuration cfg(const char* s) { return parse_config(s, binary()); }

CellularAutomaton identity(const Alphabet& a) {
  return CellularAutomaton::from_function(a, 0, 0, [](std::string_view p) { return p[0]; });
}

}  // namespace

TEST(Apply, Examples) {
  auto x = cfg("inf(0).1inf(1)");
  EXPECT_EQ(apply(identity(binary()), x), x);
  auto shift = CellularAutomaton::from_function(binary(), 1, 1, [](std::string_view p) { return p[0]; });
  EXPECT_EQ(apply(shift, x), x.shifted(1));
  EXPECT_EQ(apply(CellularAutomaton::elementary(90), cfg("inf(01).inf(01)")), cfg("inf(0).inf(0)"));
  EXPECT_EQ(apply_periodic(CellularAutomaton::elementary(90), "01"), "00");
  EXPECT_THROW(apply(identity(Alphabet("012")), x), InputError);
}

TEST(Apply, CommutesWithShiftAndMatchesLocalRule) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<unsigned> rule(0, 255);
  for (int t = 0; t < 50; ++t) {
    auto f = CellularAutomaton::elementary(rule(rng));
    auto x = fixtures::random_config(rng, binary());
    EXPECT_EQ(apply(f, x.shifted(1)), apply(f, x).shifted(1));
    auto y = apply(f, x);
    for (std::int64_t i = -15; i <= 15; ++i) ASSERT_EQ(y.at(i), f.local(x.window(i - 1, i + 1)));
  }
}

TEST(MinimalNeighborhood, Examples) {
  auto n204 = minimal_neighborhood(CellularAutomaton::elementary(204));
  EXPECT_EQ(n204.interval, std::make_pair(0, 0));
  EXPECT_EQ(n204.dependency_count(), 1u);
  auto n170 = minimal_neighborhood(CellularAutomaton::elementary(170));
  EXPECT_EQ(n170.interval, std::make_pair(1, 1));
  auto n90 = minimal_neighborhood(CellularAutomaton::elementary(90));
  EXPECT_EQ(n90.interval, std::make_pair(-1, 1));
  EXPECT_EQ(n90.essential, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(n90.span(), 3u);
  EXPECT_FALSE(minimal_neighborhood(CellularAutomaton::elementary(0)).interval.has_value());
}

TEST(ClassifyFullShift, ElementaryRulesMatchPeriodicPairOracle) {
  const auto words = oracles::primitive_binary_words(8);
  int contracting = 0, isometric = 0, expanding = 0;
  for (unsigned rule = 0; rule < 256; ++rule) {
    auto f = CellularAutomaton::elementary(rule);
    auto report = classify_full_shift(f);
    auto oracle = oracles::eca_periodic_pairs(rule, words);
    ASSERT_EQ(report.contracting, oracle.contracting) << rule;
    ASSERT_EQ(report.isometric, oracle.isometric) << rule;
    ASSERT_EQ(report.expanding, oracle.expanding) << rule;
    contracting += report.contracting;
    isometric += report.isometric;
    expanding += report.expanding;
  }
  EXPECT_EQ(contracting, 8);
  EXPECT_EQ(isometric, 6);
  EXPECT_EQ(expanding, 6);
}

TEST(ClassifyFullShift, WitnessesHaveExactDistances) {
  for (unsigned rule = 0; rule < 256; ++rule) {
    auto f = CellularAutomaton::elementary(rule);
    auto report = classify_full_shift(f);
    if (report.minimal.dependency_count() < 2) {
      EXPECT_FALSE(report.witness.has_value());
      continue;
    }
    ASSERT_TRUE(report.witness.has_value()) << rule;
    const auto r = static_cast<std::int64_t>(report.minimal.span());
    const auto& w = *report.witness;
    EXPECT_EQ(w.d_in, Rational(1, 2 * r - 1)) << rule;
    EXPECT_GE(w.d_out, Rational(2, 2 * r - 1)) << rule;
    EXPECT_EQ(w.d_in, d_besicovitch(w.x, w.y));
    EXPECT_EQ(w.d_out, d_besicovitch(apply(f, w.x), apply(f, w.y)));
  }
  auto majority = classify_full_shift(CellularAutomaton::elementary(232));
  EXPECT_FALSE(majority.contracting);
  ASSERT_TRUE(majority.witness.has_value());
  EXPECT_GT(majority.witness->d_out, majority.witness->d_in);
}

TEST(ClassifyFullShift, WiderAlphabet) {
  Alphabet abc("abc");
  // Sum mod 3 of two neighbours.
  auto f = CellularAutomaton::from_function(abc, 0, 1, [&](std::string_view p) {
    return abc.symbol((abc.index(p[0]) + abc.index(p[1])) % 3);
  });
  auto report = classify_full_shift(f);
  EXPECT_FALSE(report.contracting);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_EQ(report.witness->d_in, Rational(1, 3));
  EXPECT_GE(report.witness->d_out, Rational(2, 3));
  auto rotate = CellularAutomaton::from_function(abc, -2, 2, [&](std::string_view p) {
    return abc.symbol((abc.index(p[4]) + 1) % 3);
  });
  auto rot = classify_full_shift(rotate);
  EXPECT_TRUE(rot.isometric);
  EXPECT_EQ(rot.decomposition->shift, 2);
  EXPECT_EQ(rot.decomposition->permutation, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(IsometryDecomposition, Examples) {
  auto d204 = isometry_decomposition(CellularAutomaton::elementary(204));
  EXPECT_EQ(d204.shift, 0);
  EXPECT_EQ(d204.permutation, (std::vector<std::size_t>{0, 1}));
  auto d170 = isometry_decomposition(CellularAutomaton::elementary(170));
  EXPECT_EQ(d170.shift, 1);
  EXPECT_EQ(d170.permutation, (std::vector<std::size_t>{0, 1}));
  auto d51 = isometry_decomposition(CellularAutomaton::elementary(51));
  EXPECT_EQ(d51.shift, 0);
  EXPECT_EQ(d51.permutation, (std::vector<std::size_t>{1, 0}));
  // Table identity f(x)_i = g(x_{i+n}).
  for (unsigned rule : {204u, 170u, 51u, 240u, 15u, 85u}) {
    auto f = CellularAutomaton::elementary(rule);
    auto d = isometry_decomposition(f);
    for (std::size_t c = 0; c < 8; ++c) {
      Word p = f.pattern(c);
      EXPECT_EQ(f.local_index(c), d.permutation[binary().index(p[static_cast<std::size_t>(d.shift + 1)])]);
    }
  }
  EXPECT_THROW(isometry_decomposition(CellularAutomaton::elementary(0)), PreconditionError);
  EXPECT_THROW(isometry_decomposition(CellularAutomaton::elementary(232)), PreconditionError);
}

TEST(CheckOnSubshift, Examples) {
  auto golden = fixtures::golden_mean();
  auto id = check_on_subshift(identity(binary()), golden, 8);
  EXPECT_FALSE(id.contracting.violated);
  EXPECT_FALSE(id.isometric.violated);
  EXPECT_FALSE(id.expanding.violated);
  EXPECT_EQ(id.period_bound, 8u);

  // Identity on {0,1}, left shift on {2,3}.
  Alphabet a4("0123");
  auto split = shift_union(full_shift(binary()), full_shift(Alphabet("23")));
  auto f = CellularAutomaton::from_function(a4, 0, 1, [](std::string_view p) {
    return p[0] == '0' || p[0] == '1' ? p[0] : p[1];
  });
  EXPECT_EQ(minimal_neighborhood_on(f, split).dependency_count(), 2u);
  auto v = check_on_subshift(f, split, 8);
  EXPECT_FALSE(v.isometric.violated);

  auto majority = CellularAutomaton::elementary(232);
  auto m = check_on_subshift(majority, fixtures::full_binary(), 4);
  ASSERT_TRUE(m.contracting.violated);
  EXPECT_GT(m.contracting.witness->d_out, m.contracting.witness->d_in);
  EXPECT_EQ(m.contracting.witness->d_in, d_besicovitch(m.contracting.witness->x, m.contracting.witness->y));

  // Rule 2 turns 001 into 1 and can create 11.
  EXPECT_THROW(check_on_subshift(CellularAutomaton::elementary(2 | 4 | 16), golden, 4), PreconditionError);
}

TEST(CheckOnSubshift, ContractingExampleOnNo111Shift) {
  auto x = compile_sft({binary(), {"111"}});
  auto f = CellularAutomaton::from_function(binary(), -1, 0, [](std::string_view p) {
    return p == "01" ? '0' : p[1];
  });
  EXPECT_TRUE(preserves(f, x));
  auto v = check_on_subshift(f, x, 10);
  EXPECT_FALSE(v.contracting.violated);
  EXPECT_TRUE(v.isometric.violated);
  EXPECT_GT(v.pairs, 0u);
}

TEST(Rigidity, Examples) {
  auto g = rigidity_precondition(fixtures::golden_mean(), '0', 4, 8);
  EXPECT_TRUE(g.pass) << g.reason;
  auto e = rigidity_precondition(fixtures::even_shift(), '0', 4, 9);
  EXPECT_TRUE(e.pass) << e.reason;
  EXPECT_LE(e.largest_period, 9u);
  auto orbit = rigidity_precondition(periodic_orbit(binary(), "01"), '0', 1, 8);
  EXPECT_FALSE(orbit.pass);
  auto tight = rigidity_precondition(fixtures::even_shift(), '0', 4, 2);
  EXPECT_FALSE(tight.pass);
  EXPECT_TRUE(tight.word.has_value());
}

TEST(Rigidity, RadiusOneIsometriesHaveSingleCellNeighborhoods) {
  for (const auto& x : {fixtures::golden_mean(), fixtures::even_shift()}) {
    std::size_t preserving = 0, isometries = 0;
    for (unsigned rule = 0; rule < 256; ++rule) {
      auto f = CellularAutomaton::elementary(rule);
      if (!preserves(f, x)) continue;
      ++preserving;
      auto v = check_on_subshift(f, x, 8);
      if (v.isometric.violated) continue;
      ++isometries;
      EXPECT_EQ(minimal_neighborhood_on(f, x).dependency_count(), 1u) << rule;
    }
    EXPECT_GT(preserving, 0u);
    EXPECT_GT(isometries, 0u);
  }
}

TEST(CaPseudometric, Examples) {
  auto id = CellularAutomaton::elementary(204);
  auto neg = CellularAutomaton::elementary(51);
  EXPECT_EQ(ca_pseudometric(id, id, "0110", 2, '0'), 0);
  EXPECT_EQ(ca_pseudometric(id, neg, "0", 0, '0'), 1);
  EXPECT_EQ(ca_pseudometric(CellularAutomaton::elementary(170), id, "00", 0, '0'), 0);
  EXPECT_EQ(ca_pseudometric(CellularAutomaton::elementary(170), id, "01", 0, '0'), 1);
}

TEST(ConjugacyProbe, SwapIsIsometricButItsConjugateIsNot) {
  // Symbol (a, b) over {0,1}^2 encoded as 2a + b.
  Alphabet pairs("0123");
  auto first = [](char c) { return (c - '0') >> 1; };
  auto second = [](char c) { return (c - '0') & 1; };
  auto make = [](int a, int b) { return static_cast<char>('0' + 2 * a + b); };
  auto swap = CellularAutomaton::from_function(pairs, 0, 0, [&](std::string_view p) {
    return make(second(p[0]), first(p[0]));
  });
  auto full = full_shift(pairs);
  auto s = check_on_subshift(swap, full, 7);
  EXPECT_FALSE(s.isometric.violated);
  // h(x, y) = (shift^-1 y, shift x) conjugates the swap to (u, v) -> (shift^-2 v, shift^2 u).
  auto conj = CellularAutomaton::from_function(pairs, -2, 2, [&](std::string_view p) {
    return make(second(p[0]), first(p[4]));
  });
  bool found = false;
  for (std::size_t p = 1; p <= 8 && !found; ++p) {
    auto v = check_on_subshift(conj, full, p);
    if (v.isometric.violated) {
      found = true;
      EXPECT_NE(v.isometric.witness->d_in, v.isometric.witness->d_out);
      EXPECT_EQ(v.isometric.witness->d_out,
                d_besicovitch(apply(conj, v.isometric.witness->x), apply(conj, v.isometric.witness->y)));
    }
  }
  EXPECT_TRUE(found);
}
