#include <doctest.h>

#include <sstream>

#include "edr/cli.hpp"

using namespace edr;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dispatch examples") {
  auto r = run({"snf", "--ring", "z", "--input", R"({"rows":[[2,4],[6,8]]})"});
  CHECK(r.code == 0);
  const Json doc = parse_json(r.out);
  CHECK(dump_json(*doc.find("D")) == "[[2, 0], [0, 4]]");
  CHECK(doc.find("verified")->as_bool());
  r = run({"check", "--ring", "zmod:30", "--property", "stable-range-1"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out).find("holds")->as_bool());
  r = run({"complete", "--ring", "z", "--row", "4,6", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(dump_json(*parse_json(r.out).find("matrix")) == "[[4, 6], [-1, -1]]");
}

TEST_CASE("exit codes") {
  CHECK(run({"reduce2x2", "--ring", "z", "--input", "2 0\n4 6"}).code == 1);
  CHECK(run({"snf", "--ring", "z", "--input", "1 2\n3"}).code == 2);
  CHECK(run({"snf", "--ring", "z", "--input", "[[1, 2]"}).code == 2);
  CHECK(run({"snf", "--ring", "gfpoly:4", "--input", "1"}).code == 1);
  CHECK(run({"snf", "--ring", "qq", "--input", "1"}).code == 2);
  CHECK(run({"snf", "--ring", "series:3", "--input", "1"}).code == 1);
  CHECK(run({"complete", "--ring", "z", "--row", "4,6", "--d", "5"}).code == 1);
  CHECK(run({"check", "--ring", "z", "--property", "clean"}).code == 1);
  CHECK(run({"check", "--ring", "z", "--property", "nope"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto r = run({"snf", "--ring", "zmod:6", "--input", R"({"ring": "z", "rows": [[1]]})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("zmod:6") != std::string::npos);
  CHECK(r.err.find("payload declares z") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);
}

TEST_CASE("read_matrix") {
  const Matrix m = read_matrix("2 4\n6 8", "z");
  CHECK(m == Matrix::from_integers(Ring::integers(), {{2, 4}, {6, 8}}));
  CHECK(read_matrix("2 4; 6 8", "z") == m);
  CHECK(read_matrix("[[2, 4], [6, 8]]", "z") == m);
  CHECK(read_matrix(R"({"ring": "z", "rows": [[2, 4], [6, 8]]})", "") == m);
  CHECK_THROWS_AS(read_matrix("1 2\n3", "z"), ParseError);
  const Matrix p = read_matrix("[1,2] []\n[0,1] [3]", "gfpoly:5");
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 2);
  CHECK(read_matrix("-1 2", "z")(0, 0).integer() == -1);
  CHECK(split_top_level("[1,2],3,[4]", ',') == std::vector<std::string>{"[1,2]", "3", "[4]"});
}

TEST_CASE("render modes") {
  auto r = run({"snf", "--ring", "z", "--input", "2 4\n6 8", "--output", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("D:\n2 0\n0 4\n", 0) == 0);
  r = run({"complete", "--ring", "z", "--row", "6,10,15", "--output", "json"});
  CHECK(parse_json(r.out).find("trace") != nullptr);
  r = run({"complete", "--ring", "z", "--row", "6,10,15", "--output", "pretty"});
  CHECK(r.out.find("trace") == std::string::npos);
  r = run({"check", "--ring", "z", "--property", "stable-range-1", "--bound", "50"});
  const Json v = parse_json(r.out);
  CHECK(v.find("searchBound")->text() == "50");
  CHECK(v.find("yWindow")->text() == "1000");
  CHECK(run({"rings"}).code == 0);
}

TEST_CASE("json output is deterministic") {
  const std::vector<std::string> args{"snf", "--ring", "zmod:12", "--input", "8 6 3\n4 10 5"};
  CHECK(run(args).out == run(args).out);
}
