#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "rhofourier/sym_laurent.hpp"
#include "rhofourier/wd.hpp"

using namespace rhofourier;

namespace {

ExactScalar rand_unit_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5), vp(-2, 2);
  std::uniform_int_distribution<int> sgn(0, 1);
  ExactScalar c(Rational(num(rng)));
  if (sgn(rng)) c = ExactScalar(1) / c;
  return c * ExactScalar::v_pow(vp(rng));
}

UnramWDRep rand_rep(std::mt19937_64& rng, int max_blocks = 3, int max_a = 3) {
  std::uniform_int_distribution<int> nb(1, max_blocks), aa(1, max_a);
  UnramWDRep r;
  int k = nb(rng);
  for (int i = 0; i < k; ++i) r.blocks.push_back({rand_unit_scalar(rng), aa(rng)});
  return r;
}

}  // namespace

TEST_CASE("standard representation acts as identity on parameters") {
  ExactScalar x1(2), x2(Rational(1, 3));
  UnramWDRep r = rho_compose(AlgebraicRep::gl2_std(), {x1, x2});
  CHECK(r == UnramWDRep{{{x1, 1}, {x2, 1}}});
  CHECK(r.dim() == 2);
}

TEST_CASE("Sym^2 composition matches the h-polynomial character") {
  ExactScalar x1 = ExactScalar::v(), x2(3);
  UnramWDRep r = rho_compose(AlgebraicRep::gl2_sym(2), {x1, x2});
  CHECK(r == UnramWDRep{{{x1 * x1, 1}, {x1 * x2, 1}, {x2 * x2, 1}}});
  // oracle: block scalars are the monomials of h_2 evaluated term by term
  SymLaurent h2 = complete_homogeneous(2, 2);
  UnramWDRep expect;
  for (const auto& [e, c] : h2.terms()) {
    CHECK(c == ExactScalar(1));
    expect.blocks.push_back({x1.pow(e[0]) * x2.pow(e[1]), 1});
  }
  CHECK(r == expect);
}

TEST_CASE("det composition") {
  ExactScalar x1(2), x2(5);
  UnramWDRep r = rho_compose(AlgebraicRep::gl2_det(), {x1, x2});
  CHECK(r == UnramWDRep{{{x1 * x2, 1}}});
}

TEST_CASE("arity mismatch is rejected") {
  CHECK_THROWS_AS(rho_compose(AlgebraicRep::gl2_std(), {ExactScalar(1)}), ArityMismatch);
}

TEST_CASE("diagonal restriction") {
  CHECK(diagonal_restriction({ExactScalar(1), 1}) == UnramWDRep{{{ExactScalar(1), 1}}});
  CHECK(diagonal_restriction({ExactScalar(1), 2}) ==
        UnramWDRep{{{ExactScalar::v_pow(-1), 1}, {ExactScalar::v(), 1}}});
  ExactScalar x(7);
  CHECK(diagonal_restriction({x, 3}) ==
        UnramWDRep{{{x * ExactScalar::v_pow(-2), 1}, {x, 1}, {x * ExactScalar::v_pow(2), 1}}});
  // oracle: the scalars are the weights of Sym^{a-1} of diag(v, v^-1) times x
  for (int a = 1; a <= 5; ++a) {
    UnramWDRep r = diagonal_restriction({x, a});
    UnramWDRep expect;
    for (int j = 0; j <= a - 1; ++j)
      expect.blocks.push_back({x * ExactScalar::v().pow(a - 1 - j) * ExactScalar::v_pow(-j), 1});
    CHECK(r == expect);
  }
}

TEST_CASE("dual, twist, direct sum") {
  CHECK(dual(UnramWDRep{{{ExactScalar(2), 1}}}) == UnramWDRep{{{ExactScalar(Rational(1, 2)), 1}}});
  CHECK(twist(UnramWDRep{{{ExactScalar(1), 1}}}, 1) == UnramWDRep{{{ExactScalar::v_pow(-1), 1}}});
  CHECK_THROWS_AS(dual(UnramWDRep{{{ExactScalar(0), 1}}}), ZeroScalar);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    UnramWDRep r = rand_rep(rng);
    CHECK(dual(dual(r)) == r);
    UnramWDRep s = rand_rep(rng);
    CHECK(direct_sum(r, s).dim() == r.dim() + s.dim());
  }
}

TEST_CASE("rho_compose is additive over summands") {
  AlgebraicRep rho;
  rho.group = Group::GL2;
  rho.n = 2;
  rho.gl2 = {{1, 0}, {2, 1}};
  ExactScalar x1(2), x2 = ExactScalar::v_pow(-1);
  UnramWDRep whole = rho_compose(rho, {x1, x2});
  UnramWDRep parts = direct_sum(rho_compose(AlgebraicRep::gl2_std(), {x1, x2}),
                                rho_compose(AlgebraicRep::gl2_sym(2, 1), {x1, x2}));
  CHECK(whole == parts);
}

TEST_CASE("duality compatibility for a self-dual representation") {
  // Sym^2 (x) det^-1 is self-dual
  AlgebraicRep rho = AlgebraicRep::gl2_sym(2, -1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    ExactScalar x1 = rand_unit_scalar(rng), x2 = rand_unit_scalar(rng);
    CHECK(dual(rho_compose(rho, {x1, x2})) == rho_compose(rho, {x1.inv(), x2.inv()}));
  }
}

TEST_CASE("central weights predict central twisting") {
  std::mt19937_64 rng(17);
  for (int m = 0; m <= 3; ++m)
    for (int r = -2; r <= 2; ++r) {
      AlgebraicRep rho = AlgebraicRep::gl2_sym(m, r);
      int chi = rho.central_weights()[0][0];
      CHECK(chi == m + 2 * r);
      ExactScalar x1 = rand_unit_scalar(rng), x2 = rand_unit_scalar(rng);
      ExactScalar z = rand_unit_scalar(rng);
      UnramWDRep twisted = rho_compose(rho, {x1 * z, x2 * z});
      UnramWDRep scaled = rho_compose(rho, {x1, x2});
      for (auto& b : scaled.blocks) b.x *= z.pow(chi);
      CHECK(twisted == scaled);
    }
}

TEST_CASE("line exponents and dimensions") {
  AlgebraicRep rho = AlgebraicRep::gl2_sym(2, 1);
  CHECK(rho.dim() == 3);
  auto exps = rho.line_exponents();
  REQUIRE(exps.size() == 3);
  CHECK(exps[0] == std::vector<int>{3, 1});
  CHECK(exps[1] == std::vector<int>{2, 2});
  CHECK(exps[2] == std::vector<int>{1, 3});

  AlgebraicRep tor;
  tor.group = Group::GL1n;
  tor.n = 2;
  tor.weights = {{1, 0}, {0, 1}};
  CHECK(tor.dim() == 2);
  CHECK(tor.central_weights() == tor.weights);
}
