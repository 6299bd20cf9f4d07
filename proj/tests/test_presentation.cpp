#include <doctest.h>

#include <algorithm>
#include <set>

#include "engel/io.hpp"
#include "engel/presentation.hpp"

#include "test_util.hpp"

using namespace engel;

TEST_SUITE_BEGIN("presentation");

namespace {
const std::vector<std::string> XY = {"x", "y"};
Word W(const std::string& s) { return io::parse_word(s, XY); }

// Independent oracle: the distinct contiguous subwords of the support words.
std::set<Word> subword_closure(const std::vector<Word>& words) {
  std::set<Word> out;
  for (const auto& w : words) {
    const auto& l = w.letters();
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j <= l.size(); ++j)
        out.insert(Word(std::vector<std::uint8_t>(l.begin() + i, l.begin() + j), 2));
  }
  return out;
}
} // namespace

TEST_CASE("monomial ideal membership samples") {
  const auto& spec = testutil::paper_spec();
  CHECK(spec.monomial_member(W("y^4")));
  CHECK_FALSE(spec.monomial_member(W("y^2*x*y*x*y^2")));
  CHECK(spec.monomial_member(W("x^3")));
  CHECK(spec.monomial_member(W("x^2")));
  CHECK(spec.monomial_member(W("x*y^2*x")));
  CHECK(spec.monomial_member(W("y^2*x*y^2")));
  CHECK(spec.monomial_member(W("x*y*x*y^3")));
  CHECK(spec.monomial_member(W("y^3*x*y*x")));
  CHECK(spec.monomial_member(W("y*x*y^3*x*y*x"))); // degree 8
  CHECK_FALSE(spec.monomial_member(W("x*y*x*y"))); // x-degree 2 is fine
  CHECK_THROWS_AS(spec.monomial_member(Word({0}, 3)), domain_error);
}

TEST_CASE("survivor enumeration matches the subword oracle") {
  const auto& spec = testutil::paper_spec();
  auto by_degree = spec.survivors_by_degree();
  std::vector<int> counts;
  for (const auto& level : by_degree) counts.push_back(static_cast<int>(level.size()));
  CHECK(counts == std::vector<int>{2, 3, 5, 6, 6, 4, 2});
  CHECK(spec.survivors().size() == 28);

  auto oracle = subword_closure({W("y*x*y^3*x*y"), W("y^2*x*y*x*y^2")});
  std::set<Word> enumerated;
  for (const auto& w : spec.survivors()) enumerated.insert(w);
  CHECK(enumerated == oracle);
}

TEST_CASE("degree 6 and degree 7 survivor sets") {
  const auto& spec = testutil::paper_spec();
  auto by_degree = spec.survivors_by_degree();
  std::set<Word> d6(by_degree[5].begin(), by_degree[5].end());
  CHECK(d6 == std::set<Word>{W("x*y^3*x*y"), W("y*x*y*x*y^2"), W("y*x*y^3*x"),
                             W("y^2*x*y*x*y")});
  std::set<Word> d7(by_degree[6].begin(), by_degree[6].end());
  CHECK(d7 == std::set<Word>{W("y*x*y^3*x*y"), W("y^2*x*y*x*y^2")});
}

TEST_CASE("membership is upward closed; survivors are divisor closed") {
  const auto& spec = testutil::paper_spec();
  auto g = testutil::rng(20);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = testutil::random_word(g, 2, 5);
    Word m1 = testutil::random_word(g, 2, 2);
    Word m2 = testutil::random_word(g, 2, 2);
    if (spec.monomial_member(w)) {
      CHECK(spec.monomial_member(m1 * w));
      CHECK(spec.monomial_member(w * m2));
      CHECK(spec.monomial_member(m1 * w * m2));
    }
  }
  // divisor closure, exhaustively over the survivors
  for (const auto& w : spec.survivors()) {
    const auto& l = w.letters();
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j <= l.size(); ++j) {
        Word sub(std::vector<std::uint8_t>(l.begin() + i, l.begin() + j), 2);
        CHECK_FALSE(spec.monomial_member(sub));
      }
  }
}

TEST_CASE("every low-degree survivor divides a support word") {
  const auto& spec = testutil::paper_spec();
  auto support = spec.support_words();
  REQUIRE(support.size() == 2);
  for (const auto& w : spec.survivors()) {
    if (w.degree() > 6) continue;
    bool divides_some = false;
    for (const auto& s : support) divides_some = divides_some || word_divides(w, s);
    CHECK(divides_some);
  }
}

TEST_CASE("survivors with x-degree 1 have y-degree at most 4") {
  const auto& spec = testutil::paper_spec();
  for (const auto& w : spec.survivors())
    if (w.degree_in(0) == 1) CHECK(w.degree_in(1) <= 4);
}

TEST_CASE("survivor enumeration is independent of characteristic") {
  auto spec0 = testutil::paper_spec();
  auto spec5 = spec0;
  spec5.characteristic = 5;
  CHECK(spec0.survivors() == spec5.survivors());
}

TEST_CASE("unbounded presentations are rejected") {
  PresentationSpec spec;
  spec.generators = {"x", "y"};
  spec.relations.push_back(GeneratorDegreeCap{0, 3});
  CHECK_THROWS_AS(spec.survivors(), domain_error);
  CHECK_FALSE(spec.degree_bound().has_value());
}

TEST_CASE("ideal membership is upward closed for random bounded presentations") {
  auto g = testutil::rng(21);
  for (int round = 0; round < 12; ++round) {
    PresentationSpec spec;
    spec.generators = {"x", "y"};
    spec.relations.push_back(DegreeCap{6});
    switch (round % 3) {
      case 0:
        spec.relations.push_back(
            DivisorSupport{4, {testutil::random_word(g, 2, 5), testutil::random_word(g, 2, 5)}});
        break;
      case 1: {
        std::vector<Word> kept;
        for (int t = 0; t < 3; ++t) {
          auto w = testutil::random_word(g, 2, 4);
          while (w.degree() != 4) w = testutil::random_word(g, 2, 4);
          kept.push_back(w);
        }
        spec.relations.push_back(DegreeSliceExcept{4, kept});
        break;
      }
      default:
        spec.relations.push_back(GeneratorDegreeCap{static_cast<int>(g() % 2), 2});
        break;
    }
    for (int trial = 0; trial < 120; ++trial) {
      Word w = testutil::random_word(g, 2, 4);
      if (!spec.monomial_member(w)) continue;
      Word m1 = testutil::random_word(g, 2, 2);
      Word m2 = testutil::random_word(g, 2, 2);
      CHECK(spec.monomial_member(m1 * w));
      CHECK(spec.monomial_member(w * m2));
      CHECK(spec.monomial_member(m1 * w * m2));
    }
    // survivors are exactly the divisor-closed complement
    for (const auto& s : spec.survivors()) {
      const auto& l = s.letters();
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j <= l.size(); ++j)
          CHECK_FALSE(spec.monomial_member(
              Word(std::vector<std::uint8_t>(l.begin() + i, l.begin() + j), 2)));
    }
  }
}

TEST_CASE("monomial part strips polynomial clauses only") {
  const auto& spec = testutil::paper_spec();
  auto mono = spec.monomial_part();
  CHECK(mono.relations.size() == 4);
  CHECK(spec.relations.size() == 6);
  CHECK(mono.survivors() == spec.survivors());
  CHECK(spec.polynomial_relations().size() == 2);
  CHECK(mono.polynomial_relations().empty());
}

TEST_SUITE_END();
