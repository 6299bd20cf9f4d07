#include <doctest.h>

#include "engel/io.hpp"
#include "engel/lie.hpp"
#include "engel/prime_field.hpp"
#include "engel/rational.hpp"

#include "test_util.hpp"

using namespace engel;

TEST_SUITE_BEGIN("lie");

namespace {

RatRing Q;

const QuotientAlgebra<RatRing>& algB() {
  static auto alg = QuotientAlgebra<RatRing>::build(Q, testutil::paper_spec());
  return alg;
}

const QuotientAlgebra<RatRing>& algC() {
  static auto alg = QuotientAlgebra<RatRing>::build(Q, testutil::paper_spec().monomial_part());
  return alg;
}

Elem<Rat> nf(const QuotientAlgebra<RatRing>& alg, const std::string& s) {
  return alg.normal_form(Q, io::parse_poly(Q, s, {"x", "y"}));
}

} // namespace

TEST_CASE("generic elements draw weighted, disjoint indeterminates") {
  const auto& alg = algB();
  PolyRing<RatRing> pr = generic_ring(alg);
  CHECK(pr.cap == 7);
  auto U = generic_element(alg, pr, "u");
  auto V = generic_element(alg, pr, "v");
  CHECK(pr.vars.size() == 52);
  for (int i = 0; i < alg.dim(); ++i) {
    CHECK(U.var_of_coord[i] >= 0);
    CHECK(pr.vars.weight(U.var_of_coord[i]) == alg.degree_of(i));
    CHECK(V.var_of_coord[i] != U.var_of_coord[i]);
  }
  // the coordinate on the top word carries weight 7
  int top = alg.basis_index_of(io::parse_word("y^2*x*y*x*y^2", {"x", "y"}));
  CHECK(pr.vars.weight(U.var_of_coord[top]) == 7);
  // duplicate prefixes collide on names
  CHECK_THROWS_AS(generic_element(alg, pr, "u"), domain_error);
}

TEST_CASE("the 4-fold bracket of the generator images is the stated nonzero value") {
  const auto& alg = algB();
  QuotOps<RatRing, RatRing> ops{alg, Q, ExecPolicy{}};
  auto a = alg.generator_image(Q, 0);
  auto b = alg.generator_image(Q, 1);
  CHECK(alg.eq(Q, engel_bracket(ops, a, b, 4), nf(alg, "-4*y*x*y^3 - 4*y^3*x*y")));
  CHECK(alg.is_zero(Q, engel_bracket(ops, a, b, 5)));
}

TEST_CASE("symbolic Engel check: pass at 5, fail at 4 with witness (a, b)") {
  const auto& alg = algB();
  auto r5 = lie_engel_symbolic(alg, 5);
  CHECK(r5.pass);

  auto r4 = lie_engel_symbolic(alg, 4);
  REQUIRE_FALSE(r4.pass);
  REQUIRE(r4.witness_u.has_value());
  CHECK(alg.eq(Q, *r4.witness_u, alg.unit_elem(Q, alg.basis_index_of(
                                                       io::parse_word("x", {"x", "y"})))));
  CHECK(alg.eq(Q, *r4.witness_v, alg.unit_elem(Q, alg.basis_index_of(
                                                       io::parse_word("y", {"x", "y"})))));
  CHECK(alg.eq(Q, *r4.witness_value, nf(alg, "-4*y*x*y^3 - 4*y^3*x*y")));
}

TEST_CASE("symbolic Engel check over prime fields") {
  for (long p : {5L, 7L}) {
    FpRing F(p);
    auto spec = testutil::paper_spec();
    spec.characteristic = p;
    auto alg = QuotientAlgebra<FpRing>::build(F, spec);
    CHECK(lie_engel_symbolic(alg, 5).pass);
    CHECK_FALSE(lie_engel_symbolic(alg, 4).pass);
  }
}

TEST_CASE("symmetrized strategy agrees with the naive reference on small orders") {
  const auto& alg = algB();
  for (int n : {2, 3}) {
    auto naive = lie_engel_symmetrized_naive(alg, n);
    auto tree = lie_engel_symmetrized(alg, n);
    CHECK(naive.pass == tree.pass);
    if (!naive.pass) {
      REQUIRE(tree.witness_base.has_value());
      CHECK(*naive.witness_base == *tree.witness_base);
      CHECK(*naive.witness_multiset == *tree.witness_multiset);
      CHECK(alg.eq(Q, *naive.witness_sum, *tree.witness_sum));
    }
  }
}

TEST_CASE("symmetrized strategy verdicts at 4 and 5") {
  const auto& alg = algB();
  auto r4 = lie_engel_symmetrized(alg, 4);
  CHECK_FALSE(r4.pass);
  REQUIRE(r4.witness_sum.has_value());
  CHECK_FALSE(alg.is_zero(Q, *r4.witness_sum));
  auto r5 = lie_engel_symmetrized(alg, 5);
  CHECK(r5.pass);
}

TEST_CASE("component decomposition of the 5-fold generic bracket") {
  auto compC = engel5_components(algC());
  auto compB = engel5_components(algB());

  // the degree-rule components vanish already over the monomial quotient
  for (const char* key : {"alpha1*beta2^5", "alpha1*beta2^4*mu2", "beta1*alpha2*beta2^4",
                          "beta1*beta2^4*gamma2", "beta1*beta2^4*delta2",
                          "beta1*alpha2*beta2^3*mu2", "gamma1*beta2^5", "delta1*beta2^5",
                          "mu1*alpha2*beta2^4"}) {
    const auto* e = compC.find(key);
    bool zero = e == nullptr || algC().is_zero(Q, *e);
    CHECK_MESSAGE(zero, "component should vanish: " << key);
  }

  // the alpha1*alpha2*beta2^4 component over the monomial quotient
  const auto* f1 = compC.find("alpha1*alpha2*beta2^4");
  REQUIRE(f1 != nullptr);
  auto expected =
      nf(algC(), "-15*y*x*y*x*y^2 + 15*y^2*x*y*x*y - 6*y*x*y^3*x + 6*x*y^3*x*y");
  CHECK(algC().eq(Q, *f1, expected));
  auto h1_img = nf(algC(), "2*x*y^3*x*y - 5*y*x*y*x*y^2 - 2*y*x*y^3*x + 5*y^2*x*y*x*y");
  CHECK(algC().eq(Q, *f1, algC().scale_base(Q, h1_img, Rat(3))));

  const auto* f7 = compC.find("beta1*alpha2^2*beta2^3");
  REQUIRE(f7 != nullptr);
  CHECK(algC().eq(Q, *f7, algC().neg(Q, *f1)));

  // everything vanishes in the full quotient
  for (const auto& comp : compB.components) CHECK(algB().is_zero(Q, comp));
}

TEST_CASE("lower central series terminates at class 7") {
  auto series = lie_lower_central_series(algB());
  CHECK(series.nilpotency_class == 7);
  CHECK(series.dims.size() == 7);
  CHECK(series.dims.front() == 26);
  CHECK(series.dims.back() == 1);
  for (std::size_t i = 1; i < series.dims.size(); ++i)
    CHECK(series.dims[i] <= series.dims[i - 1]);
}

TEST_CASE("brackets carry no degree-1 component") {
  const auto& alg = algB();
  QuotOps<RatRing, RatRing> ops{alg, Q, ExecPolicy{}};
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      auto br = lie_bracket(ops, alg.unit_elem(Q, i), alg.unit_elem(Q, j));
      CHECK(alg.is_zero(Q, alg.graded_component(Q, br, 1)));
    }
}

TEST_CASE("greedy specialization returns small nonzero assignments") {
  const auto& alg = algB();
  PolyRing<RatRing> pr = generic_ring(alg);
  auto U = generic_element(alg, pr, "u");
  auto V = generic_element(alg, pr, "v");
  QuotOps<RatRing, PolyRing<RatRing>> ops{alg, pr, ExecPolicy{}};
  auto value = engel_bracket(ops, U.elem, V.elem, 4);
  REQUIRE_FALSE(alg.is_zero(pr, value));
  auto assignment = greedy_specialize(alg, pr, value);
  REQUIRE(assignment.has_value());
  auto u = specialize_element(alg, U, *assignment);
  auto v = specialize_element(alg, V, *assignment);
  QuotOps<RatRing, RatRing> base_ops{alg, Q, ExecPolicy{}};
  CHECK_FALSE(alg.is_zero(Q, engel_bracket(base_ops, u, v, 4)));
}

TEST_SUITE_END();
