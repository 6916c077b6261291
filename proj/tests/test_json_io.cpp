#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <topomodal/generators.hpp>
#include <topomodal/json_io.hpp>

using namespace topomodal;

using doctest::Contains;

namespace {

const Space kSierpinski(2, {0b00, 0b01, 0b11});

bool same_model(const Model& a, const Model& b) {
  return a.space() == b.space() && a.props() == b.props() &&
         a.nominals() == b.nominals();
}

}  // namespace

TEST_CASE("space serialization is frozen") {
  CHECK(space_to_json(kSierpinski) == R"({"n":2,"opens":[[],[0],[0,1]]})");
  CHECK(space_to_json(Space(1, {0b0, 0b1})) == R"({"n":1,"opens":[[],[0]]})");
  CHECK(space_from_json(R"({"n":2,"opens":[[],[0],[0,1]]})") == kSierpinski);
  // Unsorted arrays and duplicate opens are tolerated on input.
  CHECK(space_from_json(R"({"n":2,"opens":[[0,1],[],[0],[0]]})") == kSierpinski);
}

TEST_CASE("space loader reports the first problem") {
  CHECK_THROWS_WITH_AS(space_from_json(R"({"opens":[]})"),
                       "space needs a \"n\" field", ValidationError);
  CHECK_THROWS_WITH_AS(space_from_json(R"({"n":1,"opens":[[],[0]],"x":1})"),
                       "space has an unknown field \"x\"", ValidationError);
  CHECK_THROWS_WITH_AS(space_from_json(R"({"n":"2","opens":[]})"),
                       "space field \"n\" must be an integer", ValidationError);
  CHECK_THROWS_WITH_AS(space_from_json(R"({"n":2,"opens":[[0],[0,1]]})"),
                       "opens must contain the empty set", ValidationError);
  CHECK_THROWS_WITH_AS(space_from_json(R"({"n":2,"opens":[[],[0]]})"),
                       "opens must contain the full set [0,1]", ValidationError);
  CHECK_THROWS_WITH_AS(
      space_from_json(R"({"n":3,"opens":[[],[0],[1],[0,1,2]]})"),
      "opens not closed under union: [0] and [1] but not [0,1]",
      ValidationError);
  CHECK_THROWS_WITH_AS(space_from_json(R"({"n":2,"opens":[[],[2],[0,1]]})"),
                       "point index 2 out of range for 2 points",
                       ValidationError);
  CHECK_THROWS_WITH_AS(space_from_json(R"({"n":2,"opens":[[],[0,0],[0,1]]})"),
                       "duplicate point index 0", ValidationError);
  CHECK_THROWS_AS(space_from_json("[1,2]"), ValidationError);
}

TEST_CASE("malformed JSON carries a byte offset") {
  try {
    space_from_json(R"({"n": 2, "opens")");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 16);
    CHECK_MESSAGE(std::string(e.what()).find("malformed JSON") == 0, e.what());
  }
  CHECK_THROWS_AS(model_from_json(""), ParseError);
  CHECK_THROWS_AS(algebra_from_json("{,}"), ParseError);
}

TEST_CASE("model serialization is frozen") {
  const Model m(kSierpinski, {{0, 0b01}, {2, 0b11}}, {{1, 0b10}});
  const std::string text = model_to_json(m);
  CHECK(text ==
        R"({"space":{"n":2,"opens":[[],[0],[0,1]]},"val":{"p0":[0],"p2":[0,1],"i1":[1]}})");
  CHECK(same_model(model_from_json(text), m));

  const Model bare(kSierpinski, {});
  CHECK(model_to_json(bare) ==
        R"({"space":{"n":2,"opens":[[],[0],[0,1]]},"val":{}})");
  CHECK(same_model(model_from_json(R"({"space":{"n":2,"opens":[[],[0],[0,1]]}})"),
                   bare));
}

TEST_CASE("model loader enforces the valuation shape") {
  const std::string sp = R"("space":{"n":2,"opens":[[],[0],[0,1]]})";
  CHECK_THROWS_WITH_AS(model_from_json("{" + sp + R"(,"val":{"q0":[0]}})"),
                       "valuation key \"q0\" is not of the form p<k> or i<k>",
                       ValidationError);
  CHECK_THROWS_AS(model_from_json("{" + sp + R"(,"val":{"p01":[0]}})"),
                  ValidationError);
  CHECK_THROWS_AS(model_from_json("{" + sp + R"(,"val":{"p":[0]}})"),
                  ValidationError);
  CHECK_THROWS_WITH_AS(model_from_json("{" + sp + R"(,"val":{"i0":[0,1]}})"),
                       "nominal i0 must denote exactly one point, got [0,1]",
                       ValidationError);
  CHECK_THROWS_AS(model_from_json("{" + sp + R"(,"val":{"p0":[3]}})"),
                  ValidationError);
  CHECK_THROWS_AS(model_from_json("{" + sp + R"(,"val":[1]})"),
                  ValidationError);
  CHECK_THROWS_AS(model_from_json(R"({"val":{}})"), ValidationError);
}

TEST_CASE("algebra serialization is frozen") {
  const std::string text = algebra_to_json(complex_algebra(kSierpinski));
  CHECK(text ==
        R"({"atoms":2,"box":{"[]":[],"[0]":[0],"[1]":[],"[0,1]":[0,1]}})");
  CHECK(algebra_from_json(text) == complex_algebra(kSierpinski));
}

TEST_CASE("algebra loader validates the table") {
  CHECK_THROWS_WITH_AS(
      algebra_from_json(R"({"atoms":1,"box":{"[]":[]}})"),
      "box table misses element [0]", ValidationError);
  CHECK_THROWS_WITH_AS(
      algebra_from_json(R"({"atoms":2,"box":{"[]":[],"[0]":[],"[1]":[],"[1,0]":[]}})"),
      "box key \"[1,0]\" is not in sorted form [0,1]", ValidationError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"atoms":2,"box":{"[]":[],"[0]":[],"[1]":[],"x":[]}})"),
      ValidationError);
  CHECK_THROWS_AS(algebra_from_json(R"({"atoms":0,"box":{}})"),
                  ValidationError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"atoms":1,"box":{"[]":[],"[0]":[0,1]}})"),
      ValidationError);
  CHECK_THROWS_AS(algebra_from_json(R"({"atoms":1})"), ValidationError);
}

TEST_CASE("random round-trips are identities") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Space s = random_space(rng, 1 + int(rng.below(5)));
    CHECK(space_from_json(space_to_json(s)) == s);

    const Model m = random_model_on(rng, s, int(rng.below(3)), int(rng.below(2)));
    const std::string text = model_to_json(m);
    CHECK(same_model(model_from_json(text), m));
    CHECK(model_to_json(model_from_json(text)) == text);

    const InteriorAlgebra b = complex_algebra(s);
    CHECK(algebra_from_json(algebra_to_json(b)) == b);
  }
}
