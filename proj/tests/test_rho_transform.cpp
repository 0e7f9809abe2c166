#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "rhofourier/section.hpp"

using namespace rhofourier;

namespace {

SphericalFunction rand_function(std::mt19937_64& rng, Group g) {
  std::uniform_int_distribution<int> nc(1, 3), co(-2, 2), mv(-3, 3);
  SphericalFunction f;
  f.group = g;
  int n = nc(rng);
  for (int i = 0; i < n; ++i) {
    int c = co(rng);
    if (c == 0) continue;
    if (g == Group::GL1) {
      f.add_cell({mv(rng)}, ExactScalar(c));
    } else {
      int m2 = mv(rng);
      int m1 = m2 + static_cast<int>(rng() % 3);
      if (std::abs(m1) > 3) continue;
      f.add_cell({m1, m2}, ExactScalar(c));
    }
  }
  return f;
}

std::vector<AlgebraicRep> battery() {
  return {AlgebraicRep::gl1_std(), AlgebraicRep::gl2_std(), AlgebraicRep::gl2_sym(2, 1)};
}

}  // namespace

TEST_CASE("gamma kernel cancels against its reflection") {
  for (const auto& rho : battery()) {
    RationalSection g = gamma_section(rho);
    CHECK(g * g.reflect() == RationalSection::one(rho.n));
    CHECK(fourier_section(fourier_section(RationalSection::one(rho.n), rho), rho) ==
          RationalSection::one(rho.n));
  }
}

TEST_CASE("graded expansion of rational sections") {
  // geometric series in one variable
  RationalSection T = RationalSection::one(1);
  T.den.push_back({ExactScalar(1), {1}});
  GradedSeries G = T.expand(4);
  REQUIRE(G.components.size() == 5);
  for (int k = 0; k <= 4; ++k) CHECK(G.components.at(k) == SymLaurent::monomial(1, {k}, ExactScalar(1)));
  // negative direction
  RationalSection R = T.reflect();
  GradedSeries H = R.expand(3);
  for (int k = 0; k <= 3; ++k)
    CHECK(H.components.at(-k) == SymLaurent::monomial(1, {-k}, ExactScalar(1)));
  // numerator terms below the window still climb back in
  RationalSection S = RationalSection::one(1);
  S.scalar = SymLaurent::monomial(1, {-6}, ExactScalar(1));
  S.den.push_back({ExactScalar(1), {1}});
  GradedSeries W = S.expand(2);
  for (int k = -2; k <= 2; ++k) {
    REQUIRE(W.components.count(k) == 1);
    CHECK(W.components.at(k) == SymLaurent::monomial(1, {k}, ExactScalar(1)));
  }
  // opposing or degree-zero poles have no graded expansion
  RationalSection M = RationalSection::one(2);
  M.den.push_back({ExactScalar(1), {1, 0}});
  M.den.push_back({ExactScalar(1), {0, -1}});
  CHECK_THROWS_AS(M.expand(3), MixedPoleDirections);
  RationalSection Z = RationalSection::one(2);
  Z.den.push_back({ExactScalar(1), {1, -1}});
  CHECK_THROWS_AS(Z.expand(3), MixedPoleDirections);
}

TEST_CASE("basic function cell values") {
  SphericalFunction b1 = basic_function(AlgebraicRep::gl1_std(), 5);
  for (int k = 0; k <= 5; ++k) CHECK(b1.cell({k}) == ExactScalar::v_pow(-k));
  CHECK(b1.cells.size() == 6);

  SphericalFunction b2 = basic_function(AlgebraicRep::gl2_std(), 2);
  CHECK(b2.cell({0, 0}) == ExactScalar(1));
  CHECK(b2.cell({1, 0}) == ExactScalar::q_pow(-1));
  CHECK(b2.cell({2, 0}) == ExactScalar::q_pow(-2));
  CHECK(b2.cell({1, 1}) == ExactScalar::q_pow(-2));
  CHECK(b2.cells.size() == 4);
}

TEST_CASE("zeta integral of the basic function recovers the L-expansion") {
  for (const auto& rho : battery()) {
    int trunc = rho.group == Group::GL2 && rho.gl2[0].m == 2 ? 16 : 8;
    SphericalFunction b = basic_function(rho, trunc);
    GradedSeries Z = zeta_integral(b, trunc);
    GradedSeries L = l_section(rho).expand(trunc);
    CHECK(graded_mismatch(Z, L) == -1);
    // numeric spot check of low grades at q = 2 and 3
    for (double q : {2.0, 3.0}) {
      std::vector<std::complex<double>> x(static_cast<size_t>(rho.n));
      for (int i = 0; i < rho.n; ++i) x[static_cast<size_t>(i)] = std::polar(1.0, 0.9 + 0.7 * i);
      for (const auto& [a, comp] : L.components) {
        auto it = Z.components.find(a);
        REQUIRE(it != Z.components.end());
        CHECK(std::abs(comp.eval_c(x, std::sqrt(q)) - it->second.eval_c(x, std::sqrt(q))) <
              1e-10);
      }
    }
  }
}

TEST_CASE("Fourier transform fixes the L-section") {
  for (const auto& rho : battery()) {
    RationalSection L = l_section(rho);
    RationalSection FL = fourier_section(L, rho);
    CHECK(FL == L);
    int trunc = rho.group == Group::GL2 && rho.gl2[0].m == 2 ? 16 : 8;
    CHECK(graded_mismatch(FL.expand(trunc), L.expand(trunc)) == -1);
  }
}

TEST_CASE("Fourier involution on random functions") {
  std::mt19937_64 rng(73);
  for (const auto& rho : battery()) {
    Group g = section_group(rho);
    for (int i = 0; i < 50; ++i) {
      SphericalFunction f = rand_function(rng, g);
      RationalSection T = section_of_function(f);
      RationalSection FF = fourier_section(fourier_section(T, rho), rho);
      CHECK(FF == T);
      CHECK(function_of_section(FF, g, 10) == f);
    }
  }
}

TEST_CASE("functional equation residual vanishes") {
  std::mt19937_64 rng(79);
  for (const auto& rho : battery()) {
    Group g = section_group(rho);
    for (int i = 0; i < 50; ++i) {
      SphericalFunction f = rand_function(rng, g);
      CHECK(functional_equation_residual(f, rho, 10) == -1);
    }
  }
}

TEST_CASE("asymptotic Schwartz detection") {
  for (const auto& rho : battery()) {
    int spread = l_inverse_poly(rho).max_total_degree();
    GradedSeries G = l_section(rho).expand(spread + 8);
    CHECK(is_asymptotic_schwartz(G, rho, 0));
  }
  // a section with the wrong pole is not rho-Schwartz
  AlgebraicRep rho = AlgebraicRep::gl1_std();
  RationalSection T = RationalSection::one(1);
  T.den.push_back({ExactScalar(2), {1}});
  CHECK_FALSE(is_asymptotic_schwartz(T.expand(20), rho, 0));
  // window guard
  GradedSeries tiny = l_section(rho).expand(1);
  CHECK_THROWS_AS(is_asymptotic_schwartz(tiny, rho, 1), WindowTooSmall);
}

TEST_CASE("L-expansion times inverse polynomial is the constant 1") {
  for (const auto& rho : battery()) {
    SymLaurent P = l_inverse_poly(rho);
    int spread = P.is_zero() ? 0 : P.max_total_degree();
    int trunc = 8 + spread;
    GradedSeries G = l_section(rho).expand(trunc);
    SymLaurent whole = G.recombine(rho.n) * P;
    // inside the safe window the product is exactly the unit
    for (const auto& [e, c] : whole.terms()) {
      int a = 0;
      for (int k : e) a += k;
      if (a > trunc - spread) continue;  // truncation boundary artifacts
      if (a == 0) {
        CHECK(e == std::vector<int>(static_cast<size_t>(rho.n), 0));
        CHECK(c == ExactScalar(1));
      } else {
        INFO("unexpected grade " << a);
        CHECK(a > trunc - spread);
      }
    }
    CHECK(whole.coeff(std::vector<int>(static_cast<size_t>(rho.n), 0)) == ExactScalar(1));
  }
}

TEST_CASE("gamma kernel cell realization") {
  // F(unit) for the GL1 standard kernel: reflect(gamma) expanded
  SphericalFunction k = kernel_gamma_K(AlgebraicRep::gl1_std(), 6);
  // reflect((1 - v^-1 X)/(1 - v^-1 X^-1)) = (1 - v^-1 X^-1)/(1 - v^-1 X):
  // expansion (1 - v^-1 X^-1) sum v^-j X^j
  CHECK(k.cell({0}) == ExactScalar(1) - ExactScalar::q_pow(-1));
  CHECK(k.cell({1}) == ExactScalar::v_pow(-1) - ExactScalar::v_pow(-3));
  CHECK(k.cell({-1}) == -ExactScalar::v_pow(-1));
  CHECK(k.cell({-2}) == ExactScalar(0));
}
