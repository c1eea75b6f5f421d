#include <doctest.h>

#include "edr/text.hpp"

using namespace edr;

TEST_CASE("json round trip") {
  const std::string src = R"({"a": [1, -2, "x\"y"], "b": {"c": true, "d": null}, "e": 123456789012345678901234567890})";
  const Json j = parse_json(src);
  CHECK(dump_json(j) == src);
  CHECK(parse_json(dump_json(j, 2)) == j);
  CHECK(j.find("e")->text() == "123456789012345678901234567890");
  CHECK(j.find("missing") == nullptr);
}

TEST_CASE("json errors carry positions") {
  try {
    parse_json(R"({"a": [1, 2})");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() != std::string::npos);
  }
  CHECK_THROWS_AS(parse_json("[1.5]"), ParseError);
  CHECK_THROWS_AS(parse_json("[1] x"), ParseError);
  CHECK_THROWS_AS(parse_json(""), ParseError);
}

TEST_CASE("rationals") {
  CHECK(format_rational(mpq_class(6, 8)) == "3/4");
  CHECK(format_rational(mpq_class(-4, 2)) == "-2");
  CHECK(parse_rational("-6/8") == mpq_class(-3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
}
