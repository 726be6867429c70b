#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/exterior_suite.hpp"

using namespace capelli;

TEST_CASE("grassmann products: signs and nilpotency") {
  GrassmannElement e1 = GrassmannElement::generator(4, 1, 0);
  GrassmannElement e2 = GrassmannElement::generator(4, 1, 1);
  CHECK(e1 * e2 == -(e2 * e1));
  CHECK((e1 * e1).is_zero());

  // (e1 (x) x) * (e*1 (x) d) = e1 e*1 (x) x d
  GrassmannElement ex = GrassmannElement::from_weyl(4, WeylElement::variable(1, 0));
  GrassmannElement estar_d(4, 1);
  estar_d.add_term(std::uint64_t{1} << 2, WeylElement::derivative(1, 0));
  GrassmannElement prod = (e1 * ex) * estar_d;
  CHECK(prod.term_count() == 1);
  const auto& [mask, w] = *prod.terms().begin();
  CHECK(mask == 0b101);
  CHECK(w == WeylElement::variable(1, 0) * WeylElement::derivative(1, 0));
}

TEST_CASE("contraction keeps matched subsets only") {
  // generators: e1 e2 | e*1 e*2 (k = 2)
  GrassmannElement a(4, 1);
  a.add_term(0b0101, WeylElement::variable(1, 0) * WeylElement::derivative(1, 0));  // e1 e*1
  a.add_term(0b1001, WeylElement::variable(1, 0));                                  // e1 e*2
  CHECK(a.contract() == WeylElement::variable(1, 0) * WeylElement::derivative(1, 0));
}

TEST_CASE("named builders") {
  auto ctx = make_exterior_context(2, 1, 1);
  CHECK(build_element(ctx, "tau").term_count() == 2);
  CHECK(build_element(ctx, "Xi") == xi_x(ctx) + xi_y(ctx));
  CHECK(build_element(ctx, "gamma", 0, 0) == GrassmannElement::one(ctx.e_gens(), ctx.weyl_vars()));
  CHECK(gamma(ctx, -1, 0).is_zero());
  CHECK(gamma(ctx, 0, -2).is_zero());
  CHECK(gamma(ctx, 1, 0) == xi(ctx));
  CHECK(gamma(ctx, 0, 1) == xi_tilde(ctx));
  CHECK_THROWS_AS(build_element(ctx, "nope"), std::invalid_argument);
}

TEST_CASE("spec instances: alpha-beta relation and gamma recurrence at m=2, p=q=1") {
  auto ctx = make_exterior_context(2, 1, 1);
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      GrassmannElement lhs = alpha(ctx, i) * beta(ctx, j) + beta(ctx, j) * alpha(ctx, i);
      GrassmannElement expected(ctx.e_gens(), ctx.weyl_vars());
      if (i == j) expected = tau(ctx).scaled(Scalar(ctx.eps(i)));
      CHECK(lhs == expected);
    }
  }
  CHECK(gamma(ctx, 1, 0) * xi(ctx) ==
        gamma(ctx, 2, 0) + (tau(ctx) * gamma(ctx, 0, 1)).scaled(Scalar(1)));
}

TEST_CASE("full lemma suite at small sizes") {
  for (auto [m, p, q] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}}) {
    auto reports = run_exterior_suite(m, p, q);
    CHECK(reports.size() == lemma_ids().size());
    for (const auto& rep : reports) {
      INFO("m=", m, " p=", p, " q=", q, " lemma ", rep.id, ": ", rep.detail);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("verify_lemma dispatch") {
  CHECK(verify_lemma("tau-central", 2, 1, 1).ok);
  CHECK_THROWS_AS(verify_lemma("no-such-lemma", 2, 1, 1), std::invalid_argument);
}
