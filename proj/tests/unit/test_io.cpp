#include <gtest/gtest.h>

#include "shiftgeom/errors.hpp"
#include "shiftgeom/io.hpp"
#include "support.hpp"

using namespace shiftgeom;

namespace {

std::string data(const char* name) { return std::string(SHIFTGEOM_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Io, DataFilesDescribeTheFixtures) {
  EXPECT_TRUE(same_shift(shift_from_json(load_json_file(data("golden.json"))), fixtures::golden_mean()));
  EXPECT_TRUE(same_shift(shift_from_json(load_json_file(data("even.json"))), fixtures::even_shift()));
  EXPECT_TRUE(same_shift(shift_from_json(load_json_file(data("full.json"))), fixtures::full_binary()));
  auto pointed = pointed_set_from_json(load_json_file(data("block0001.json")));
  EXPECT_FALSE(pointed.is_shift_invariant());
  EXPECT_TRUE(pointed.contains(parse_config("inf(00).inf(01)", fixtures::binary())));
  EXPECT_FALSE(pointed.contains(parse_config("inf(00).1inf(00)", fixtures::binary())));
}

TEST(Io, PresentationRoundTrip) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    auto x = fixtures::random_presentation(rng, Alphabet("abc"), 5);
    auto back = presentation_from_json(Json::parse(to_json(x).dump()));
    EXPECT_EQ(back.state_names(), x.state_names());
    EXPECT_EQ(back.edges(), x.edges());
  }
}

TEST(Io, SftSpec) {
  auto spec = sft_from_json(Json::parse(R"({"alphabet": "01", "forbidden": ["11", "000"]})"));
  EXPECT_EQ(spec.forbidden, (std::vector<Word>{"11", "000"}));
  EXPECT_THROW(sft_from_json(Json::parse(R"({"alphabet": "01", "forbidden": ["12"]})")), InputError);
  EXPECT_THROW(shift_from_json(Json::parse(R"({"forbidden": ["11"]})")), InputError);
}

TEST(Io, AutomatonRoundTripAndShorthand) {
  for (unsigned rule : {0u, 30u, 90u, 110u, 232u}) {
    auto f = CellularAutomaton::elementary(rule);
    auto back = automaton_from_json(Json::parse(to_json(f).dump()));
    for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(back.local_index(c), f.local_index(c));
    auto eca = load_automaton("eca:" + std::to_string(rule));
    for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(eca.local_index(c), f.local_index(c));
  }
  auto f = load_automaton(data("ca01to00.json"));
  EXPECT_EQ(f.local("01"), '0');
  EXPECT_EQ(f.local("11"), '1');
  EXPECT_THROW(load_automaton("eca:256"), InputError);
  EXPECT_THROW(automaton_from_json(Json::parse(R"({"alphabet": "01", "offsets": [0, 1], "table": {"00": "0"}})")),
               InputError);
}

TEST(Io, ComplexRoundTrip) {
  auto k = complex_from_json(Json::parse(R"({"vertices": ["a", "b", "c"], "faces": [["a", "b"], [1, 2], ["c", "a"]]})"));
  EXPECT_EQ(k.face_count(2), 3u);
  EXPECT_EQ(k.face_count(3), 0u);
  EXPECT_EQ(complex_from_json(to_json(k)), k);
  EXPECT_THROW(complex_from_json(Json::parse(R"({"vertices": ["a"], "faces": [["z"]]})")), InputError);
}

TEST(Io, FileErrors) {
  EXPECT_THROW(load_json_file(data("missing.json")), InputError);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"alphabet": "01", "states": ["A"], "edges": [{"from": "A", "to": "Q", "label": "0"}]})")),
               InputError);
}
