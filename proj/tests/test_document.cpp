#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wreg/document.hpp"
#include "wreg/oracle.hpp"

using namespace wreg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE_BEGIN("document");

TEST_CASE("polynomial grammar accepts the documented forms") {
  CHECK(parse_poly("0", 2).is_zero());
  CHECK(parse_poly("x0", 2) == WeightedPoly::variable(0, 2));
  CHECK(parse_poly("-x1", 2) == -WeightedPoly::variable(1, 2));
  CHECK(parse_poly("3*x0*x1^2", 2) ==
        WeightedPoly::monomial(Exponents{1, 2}, 3));
  CHECK(parse_poly("1/2*x0^2", 2) == WeightedPoly::monomial(Exponents{2, 0}, Rat(1, 2)));
  CHECK(parse_poly("+x0", 2) == WeightedPoly::variable(0, 2));
  CHECK(parse_poly("x0+-3/2*x1", 2) ==
        WeightedPoly::variable(0, 2) + WeightedPoly::monomial(Exponents{0, 1}, Rat(-3, 2)));
  // constants are spelled with a zeroth power
  CHECK(parse_poly("5*x0^0", 2) == WeightedPoly::monomial(Exponents{0, 0}, 5));
  // like terms combine and cancel
  CHECK(parse_poly("x0+-x0", 2).is_zero());
  CHECK(parse_poly("x0*x0", 2) == WeightedPoly::monomial(Exponents{2, 0}, 1));
}

TEST_CASE("polynomial grammar rejections carry positions") {
  CHECK_THROWS_AS(parse_poly("x0^", 2), ParseError);
  try {
    parse_poly("x0^", 2);
  } catch (const ParseError& err) {
    CHECK(err.pos == 3);
    CHECK(std::string(err.what()).find("position 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly("x5", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("3x0", 2), ParseError);   // missing '*'
  CHECK_THROWS_AS(parse_poly("x0 + x1", 2), ParseError);  // whitespace is not grammar
  CHECK_THROWS_AS(parse_poly("", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("x0+", 2), ParseError);
  CHECK_THROWS_AS(parse_poly("1/0*x0", 2), ParseError);
}

TEST_CASE("polynomial serialization round-trips") {
  std::vector<std::string> examples = {"0", "x0", "-x1^3", "2*x0*x1", "1/2*x0^2+-3*x1",
                                       "5*x0^0"};
  for (const auto& text : examples) {
    WeightedPoly p = parse_poly(text, 2);
    CHECK(parse_poly(poly_to_string(p), 2) == p);
  }
  // canonical form is deterministic
  WeightedPoly q = parse_poly("x1+x0", 2);
  CHECK(poly_to_string(q) == poly_to_string(parse_poly("x0+x1", 2)));
}

TEST_CASE("shipped documents parse and round-trip") {
  for (const char* name : {"p32_om5.json", "p32_om4.json", "p321_om5.json",
                           "p532_structure.json", "p3221_sharp_monad.json"}) {
    std::string text = slurp(std::string(WREG_DATA_DIR) + "/" + name);
    SheafExpr e = parse_document_text(text);
    SheafExpr back = parse_document(serialize_document(e));
    CHECK_MESSAGE(back == e, name);
  }
}

TEST_CASE("the shipped monad document equals the built-in example") {
  std::string text = slurp(std::string(WREG_DATA_DIR) + "/p3221_sharp_monad.json");
  SheafExpr e = parse_document_text(text);
  CHECK(e == SheafExpr::monad(sharp_example_monad()));
}

TEST_CASE("document validation") {
  CHECK_THROWS_AS(parse_document_text("{\"weights\":[3,2]}"), DocumentError);
  CHECK_THROWS_AS(parse_document_text(
                      "{\"weights\":[3,2],\"sheaf\":{\"type\":\"split\",\"twists\":[0]},"
                      "\"extra\":1}"),
                  DocumentError);
  CHECK_THROWS_AS(parse_document_text(
                      "{\"weights\":[3,2],\"sheaf\":{\"type\":\"split\",\"twuists\":[0]}}"),
                  DocumentError);
  CHECK_THROWS_AS(parse_document_text(
                      "{\"weights\":[2,3],\"sheaf\":{\"type\":\"split\",\"twists\":[0]}}"),
                  NotDecreasing);
  CHECK_THROWS_AS(parse_document_text("not json"), DocumentError);
  // wrong degree in a monad matrix
  std::string bad = R"({"weights":[3,2],"sheaf":{"type":"monad","A":[],"B":[-3],"C":[0],
    "alpha":[[]],"beta":[["x1"]]}})";
  CHECK_THROWS_AS(parse_document_text(bad), DegreeMismatch);
}

TEST_CASE("twist and sum expressions") {
  std::string text = R"({"weights":[3,2],"sheaf":{"type":"sum","of":[
      {"type":"twist","of":{"type":"split","twists":[0,-1]},"by":2},
      {"type":"split","twists":[4]}]}})";
  SheafExpr e = parse_document_text(text);
  CHECK(e == SheafExpr::split(weight_data({3, 2}), {1, 2, 4}));
}

TEST_CASE("csv and json tables carry identical numbers") {
  SheafExpr e = parse_document_text(slurp(std::string(WREG_DATA_DIR) + "/p32_om5.json"));
  CohomologyTable tab = cohomology_table(e, -3, 3);
  Json j = to_json(tab);
  std::string csv = to_csv(tab);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,h0,h1");
  for (const auto& row : j["rows"]) {
    std::string line;
    REQUIRE(std::getline(lines, line));
    std::ostringstream expect;
    expect << row["t"].get<long long>();
    for (const auto& v : row["h"]) expect << ',' << v.dump();
    CHECK(line == expect.str());
  }
}

TEST_CASE("big dimensions serialize as strings") {
  Int big = Int(1) << 80;
  Json j = to_json(big);
  CHECK(j.is_string());
  CHECK(to_json(Int(42)) == Json(42));
}

TEST_SUITE_END();
