#include <doctest.h>

#include "engel/group.hpp"
#include "engel/io.hpp"
#include "engel/rational.hpp"

#include "test_util.hpp"

using namespace engel;

TEST_SUITE_BEGIN("group");

namespace {

RatRing Q;

const QuotientAlgebra<RatRing>& alg() {
  static auto a = QuotientAlgebra<RatRing>::build(Q, testutil::paper_spec());
  return a;
}

Elem<Rat> nf(const std::string& s) {
  return alg().normal_form(Q, io::parse_poly(Q, s, {"x", "y"}));
}

Elem<Rat> gen(int i) { return alg().generator_image(Q, i); }

} // namespace

TEST_CASE("circle product basics") {
  const auto& A = alg();
  auto a = gen(0);
  auto zero = A.zero_elem(Q);
  CHECK(A.eq(Q, circle(A, Q, zero, a), a));
  CHECK(A.eq(Q, circle(A, Q, a, zero), a));
  // a o (-a) = -a^2 = 0
  CHECK(A.is_zero(Q, circle(A, Q, a, A.neg(Q, a))));
}

TEST_CASE("hull dictionary on random elements") {
  const auto& A = alg();
  Hull<RatRing, RatRing> hull(A, Q);
  auto g = testutil::rng(50);
  for (int trial = 0; trial < 15; ++trial) {
    auto u = testutil::random_elem(A, g);
    auto v = testutil::random_elem(A, g);
    auto prod = hull.mul(hull.unit_plus(u), hull.unit_plus(v));
    CHECK(Q.eq(prod.constant, Q.one()));
    CHECK(A.eq(Q, prod.part, circle(A, Q, u, v)));
    auto inv = hull.inv(hull.unit_plus(u));
    CHECK(A.eq(Q, inv.part, quasi_inverse(A, Q, u)));
    CHECK(hull.is_one(hull.mul(hull.unit_plus(u), inv)));
    CHECK(hull.is_one(hull.mul(inv, hull.unit_plus(u))));
  }
}

TEST_CASE("quasi-inverse values and axioms") {
  const auto& A = alg();
  auto a = gen(0), b = gen(1);
  CHECK(A.eq(Q, quasi_inverse(A, Q, a), A.neg(Q, a)));
  CHECK(A.eq(Q, quasi_inverse(A, Q, b), nf("-y + y^2 - y^3")));
  CHECK(A.is_zero(Q, circle(A, Q, b, quasi_inverse(A, Q, b))));
  CHECK(A.is_zero(Q, circle(A, Q, quasi_inverse(A, Q, b), b)));

  auto g = testutil::rng(51);
  for (int trial = 0; trial < 15; ++trial) {
    auto u = testutil::random_elem(A, g);
    auto q = quasi_inverse(A, Q, u);
    CHECK(A.is_zero(Q, circle(A, Q, u, q)));
    CHECK(A.is_zero(Q, circle(A, Q, q, u)));
  }
}

TEST_CASE("circle is associative on random triples") {
  const auto& A = alg();
  auto g = testutil::rng(52);
  for (int trial = 0; trial < 15; ++trial) {
    auto u = testutil::random_elem(A, g);
    auto v = testutil::random_elem(A, g);
    auto w = testutil::random_elem(A, g);
    CHECK(A.eq(Q, circle(A, Q, circle(A, Q, u, v), w), circle(A, Q, u, circle(A, Q, v, w))));
  }
}

TEST_CASE("group commutator of an element with itself is trivial") {
  const auto& A = alg();
  Hull<RatRing, RatRing> hull(A, Q);
  auto g = hull.unit_plus(gen(0));
  CHECK(hull.is_one(hull.commutator(g, g)));
  CHECK_THROWS_AS(hull.inv(Unital<Rat>{Q.zero(), A.zero_elem(Q)}), domain_error);
}

TEST_CASE("commutator chain of the generator units") {
  const auto& A = alg();
  Hull<RatRing, RatRing> hull(A, Q);
  auto g = hull.unit_plus(gen(0));
  auto h = hull.unit_plus(gen(1));

  auto filtered_equal = [&](const Elem<Rat>& lhs, const Elem<Rat>& rhs, int k) {
    auto diff = A.sub(Q, lhs, rhs);
    int lowest = A.min_degree(Q, diff);
    return lowest == 0 || lowest >= k;
  };

  auto c1 = hull.commutator(g, h);
  CHECK(filtered_equal(c1.part, nf("x*y - y*x + x*y*x + y^2*x - y*x*y"), 4));

  auto c2 = hull.commutator(c1, h);
  CHECK(filtered_equal(c2.part,
                       nf("x*y^2 - 2*y*x*y + y^2*x + x*y*x*y - y*x*y*x - 2*y*x*y^2 "
                          "+ 4*y^2*x*y - 2*y^3*x"),
                       5));

  auto c3 = hull.commutator(c2, h);
  CHECK(filtered_equal(c3.part,
                       nf("x*y^3 - 3*y*x*y^2 + 3*y^2*x*y - y^3*x + x*y*x*y^2 "
                          "- 2*y*x*y*x*y + y^2*x*y*x - 3*y*x*y^3 + 9*y^2*x*y^2 "
                          "- 9*y^3*x*y + 3*y^4*x"),
                       6));

  auto c4 = hull.commutator(c3, h);
  CHECK(filtered_equal(c4.part,
                       nf("x*y^4 - 4*y*x*y^3 + 6*y^2*x*y^2 - 4*y^3*x*y + y^4*x "
                          "- 3*y*x*y*x*y^2 + 3*y^2*x*y*x*y - 4*y*x*y^4 + 16*y^2*x*y^3 "
                          "- 24*y^3*x*y^2 + 16*y^4*x*y - 4*y^5*x"),
                       7));

  auto c5 = hull.commutator(c4, h);
  CHECK(Q.eq(c5.constant, Q.one()));
  CHECK(alg().eq(Q, c5.part, A.scale_base(Q, nf("y^2*x*y*x*y^2"), Rat(6))));

  auto c6 = hull.commutator(c5, h);
  CHECK(hull.is_one(c6));

  // engel_word wraps the same chain
  auto w5 = hull.engel_word(gen(0), gen(1), 5);
  CHECK(A.eq(Q, w5.part, c5.part));
}

TEST_CASE("generic group Engel checks") {
  const auto& A = alg();
  auto r5 = group_engel_check(A, 5);
  REQUIRE_FALSE(r5.pass);
  REQUIRE(r5.witness_u.has_value());
  CHECK(A.eq(Q, *r5.witness_u, A.unit_elem(Q, A.basis_index_of(io::parse_word("x", {"x", "y"})))));
  CHECK(A.eq(Q, *r5.witness_v, A.unit_elem(Q, A.basis_index_of(io::parse_word("y", {"x", "y"})))));
  CHECK(A.eq(Q, *r5.witness_value, A.scale_base(Q, nf("y^2*x*y*x*y^2"), Rat(6))));

  CHECK(group_engel_check(A, 6).pass);
  CHECK(group_engel_check(A, 7).pass);
}

TEST_CASE("filtration of commutators") {
  const auto& A = alg();
  CHECK(filtration_check(A, 1, 1));
  CHECK(filtration_check(A, 7, 1));
  CHECK(filtration_check(A, 2, 3));
  CHECK(filtration_check(A, 4, 4));
}

TEST_CASE("group nilpotency class") {
  const auto& A = alg();
  auto r = group_nilpotency(A);
  CHECK(r.nilpotency_class == 7);
  CHECK(r.next_weight_trivial);
  REQUIRE(r.witness_tuple.has_value());
  CHECK(*r.witness_tuple == std::vector<int>{0, 1, 0, 1, 1, 1, 1});
  REQUIRE(r.witness_value.has_value());
  CHECK(A.eq(Q, *r.witness_value, A.scale_base(Q, nf("y^2*x*y*x*y^2"), Rat(12))));
}

TEST_SUITE_END();
