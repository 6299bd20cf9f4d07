#include <doctest.h>

#include "engel/io.hpp"
#include "engel/prime_field.hpp"
#include "engel/rational.hpp"

#include "test_util.hpp"

using namespace engel;

TEST_SUITE_BEGIN("io");

namespace {
const std::vector<std::string> XY = {"x", "y"};
}

TEST_CASE("polynomial parsing against hand-built terms") {
  auto h1 = io::parse_int_poly("2*x*y^3*x*y - 5*y*x*y*x*y^2 - 2*y*x*y^3*x + 5*y^2*x*y*x*y", XY);
  CHECK(h1.terms.size() == 4);
  CHECK(h1.terms.at(io::parse_word("x*y^3*x*y", XY)) == 2);
  CHECK(h1.terms.at(io::parse_word("y*x*y*x*y^2", XY)) == -5);
  CHECK(h1.terms.at(io::parse_word("y*x*y^3*x", XY)) == -2);
  CHECK(h1.terms.at(io::parse_word("y^2*x*y*x*y", XY)) == 5);

  auto h2 = io::parse_int_poly("2*y*x*y^3*x*y - 5*y^2*x*y*x*y^2", XY);
  CHECK(h2.terms.size() == 2);

  // like terms collect; cancellation to zero gives the empty polynomial
  CHECK(io::parse_int_poly("x*y + x*y", XY).terms.at(io::parse_word("x*y", XY)) == 2);
  CHECK(io::parse_int_poly("x - x", XY).terms.empty());
  CHECK(io::parse_int_poly("0*x", XY).terms.empty());
}

TEST_CASE("prime-field coefficients reduce on parse") {
  FpRing F5(5);
  auto p = io::parse_poly(F5, "7*x*y - 5*y*x", XY);
  CHECK(p.terms.size() == 1); // -5 = 0 mod 5
  CHECK(F5.eq(p.terms.at(io::parse_word("x*y", XY)), F5.from_int(2)));
}

TEST_CASE("parse errors carry positions") {
  auto expect_error = [&](const std::string& text, std::size_t pos, const char* fragment) {
    try {
      io::parse_int_poly(text, XY);
      FAIL_CHECK("expected parse_error for: " << text);
    } catch (const parse_error& e) {
      CHECK(e.position() == pos);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("x^0", 2, "exponent must be >= 1");
  expect_error("x^-1", 2, "expected an exponent");
  expect_error("", 0, "empty polynomial");
  expect_error("x +", 2, "dangling operator");
  expect_error("x + - y", 4, "expected a generator name");
  expect_error("z*y", 0, "unknown generator");
  expect_error("xy", 0, "unknown generator"); // juxtaposition is one name
  expect_error("5", 0, "constant terms are not allowed");
  expect_error("2*", 2, "expected a generator name");
  expect_error("x @ y", 2, "unexpected character");
  expect_error("x y", 2, "expected '+', '-' or end of input");
  expect_error("x^99999999999999999999", 2, "exponent out of range");
  expect_error("x^100000", 2, "exponent out of range");
}

TEST_CASE("leading sign on the first term") {
  auto p = io::parse_int_poly("-2*x*y + y*x", XY);
  CHECK(p.terms.at(io::parse_word("x*y", XY)) == -2);
  CHECK(p.terms.at(io::parse_word("y*x", XY)) == 1);
  CHECK_THROWS_AS(io::parse_int_poly("-", XY), parse_error);
}

TEST_CASE("word parsing") {
  CHECK(io::parse_word("y*x*y^3*x*y", XY).degree() == 7);
  CHECK_THROWS_AS(io::parse_word("", XY), parse_error);
  CHECK_THROWS_AS(io::parse_word("x + y", XY), parse_error);
  CHECK_THROWS_AS(io::parse_word("2*x", XY), parse_error);
}

TEST_CASE("polynomial render / parse round-trip on random inputs") {
  RatRing Q;
  auto g = testutil::rng(30);
  for (int trial = 0; trial < 40; ++trial) {
    IntFreePoly p;
    int terms = 1 + static_cast<int>(g() % 5);
    for (int t = 0; t < terms; ++t) {
      long c = static_cast<long>(g() % 21) - 10;
      auto w = testutil::random_word(g, 2, 6);
      auto it = p.terms.find(w);
      if (it == p.terms.end()) {
        if (c != 0) p.terms.emplace(w, c);
      } else {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
      }
    }
    if (p.terms.empty()) continue;
    auto text = io::render_int_poly(p, XY);
    auto back = io::parse_int_poly(text, XY);
    CHECK(back == p);
  }
}

TEST_CASE("presentation document parses to the expected clauses") {
  auto spec = testutil::paper_spec();
  CHECK(spec.generators == XY);
  CHECK(spec.characteristic == 0);
  CHECK(spec.relations.size() == 6);
  CHECK_FALSE(spec.outside_theorem_hypotheses());
  CHECK(spec.degree_bound() == 8);
  CHECK(std::holds_alternative<DegreeCap>(spec.relations[0]));
  CHECK(std::holds_alternative<GeneratorDegreeCap>(spec.relations[1]));
  CHECK(std::holds_alternative<DegreeSliceExcept>(spec.relations[2]));
  CHECK(std::holds_alternative<DivisorSupport>(spec.relations[3]));
  CHECK(std::holds_alternative<ExplicitPolynomial>(spec.relations[4]));
  CHECK(std::holds_alternative<ExplicitPolynomial>(spec.relations[5]));
}

TEST_CASE("presentation render / parse round-trip") {
  const auto& spec = testutil::paper_spec();
  auto text = io::render_presentation(spec);
  auto back = io::parse_presentation(text);
  CHECK(back == spec);
  // rendering is canonical: a second round trip is byte-identical
  CHECK(io::render_presentation(back) == text);
}

TEST_CASE("presentation schema violations") {
  CHECK_THROWS_AS(io::parse_presentation("not json"), parse_error);
  CHECK_THROWS_AS(io::parse_presentation("{}"), parse_error);
  CHECK_THROWS_AS(
      io::parse_presentation(
          R"({"generators":["x","y"],"characteristic":0,"relations":[{"kind":"mystery"}]})"),
      parse_error);
  // missing degree cap -> unbounded
  CHECK_THROWS_AS(
      io::parse_presentation(
          R"({"generators":["x","y"],"characteristic":0,"relations":[]})"),
      parse_error);
  // composite characteristic
  CHECK_THROWS_AS(
      io::parse_presentation(
          R"({"generators":["x","y"],"characteristic":4,"relations":[{"kind":"degree_cap","min_total_degree":3}]})"),
      parse_error);
  // duplicate generator names
  CHECK_THROWS_AS(
      io::parse_presentation(
          R"({"generators":["x","x"],"characteristic":0,"relations":[{"kind":"degree_cap","min_total_degree":3}]})"),
      parse_error);
  // missing clause fields surface as parse errors, not internal ones
  CHECK_THROWS_AS(
      io::parse_presentation(
          R"({"generators":["x","y"],"characteristic":0,"relations":[{"kind":"degree_cap"}]})"),
      parse_error);
  // kept word of the wrong degree
  CHECK_THROWS_AS(
      io::parse_presentation(
          R"({"generators":["x","y"],"characteristic":0,"relations":[{"kind":"degree_cap","min_total_degree":8},{"kind":"degree_slice_except","degree":7,"kept_words":["x*y"]}]})"),
      parse_error);
}

TEST_CASE("characteristic 3 parses but is flagged") {
  auto spec = io::parse_presentation(
      R"({"generators":["x","y"],"characteristic":3,"relations":[{"kind":"degree_cap","min_total_degree":3}]})");
  CHECK(spec.characteristic == 3);
  CHECK(spec.outside_theorem_hypotheses());
}

TEST_SUITE_END();
