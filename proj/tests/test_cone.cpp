#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "rhofourier/cone.hpp"

using namespace rhofourier;

namespace {

bool functional_certifies(const ConeReport& rep, const std::vector<std::vector<int>>& chis) {
  if (!rep.strongly_convex) return false;
  for (const auto& chi : chis) {
    cpp_int dot = 0;
    for (size_t k = 0; k < chi.size(); ++k) dot += rep.functional[k] * chi[k];
    if (dot < 1) return false;
  }
  return true;
}

bool witness_certifies(const ConeReport& rep, const std::vector<std::vector<int>>& chis) {
  if (rep.strongly_convex) return false;
  bool nonzero = false;
  size_t n = chis.empty() ? 0 : chis[0].size();
  std::vector<cpp_int> sum(n, 0);
  for (size_t j = 0; j < chis.size(); ++j) {
    if (rep.witness[j] < 0) return false;
    if (rep.witness[j] > 0) nonzero = true;
    for (size_t k = 0; k < n; ++k) sum[k] += rep.witness[j] * chis[j][k];
  }
  for (const auto& s : sum)
    if (s != 0) return false;
  return nonzero;
}

// exhaustive search for a nonzero nonnegative relation with coefficients <= 3
bool small_relation_exists(const std::vector<std::vector<int>>& chis) {
  size_t N = chis.size(), n = chis[0].size();
  std::vector<int> c(N, 0);
  for (;;) {
    size_t i = 0;
    while (i < N && c[i] == 3) c[i++] = 0;
    if (i == N) return false;
    ++c[i];
    std::vector<long> sum(n, 0);
    for (size_t j = 0; j < N; ++j)
      for (size_t k = 0; k < n; ++k) sum[k] += static_cast<long>(c[j]) * chis[j][k];
    bool zero = true;
    for (long s : sum) zero = zero && s == 0;
    if (zero) return true;
  }
}

}  // namespace

TEST_CASE("cone checker battery") {
  struct Case {
    std::vector<std::vector<int>> chis;
    bool convex;
  };
  std::vector<Case> cases = {
      {{{1, 0}, {0, 1}}, true},
      {{{1, 0}, {-1, 1}, {0, -1}}, false},
      {{{1}}, true},
      {{{1}, {-1}}, false},
      {{{2, 1}, {1, 2}}, true},
      {{{1, 1}, {-1, 1}}, true},
      {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, true},
      {{{1, 2, 3}, {-1, 0, 1}, {0, -2, -4}}, false},
      {{{0, 0}}, false},
      {{{3, -1}, {2, -1}, {5, -2}, {1, 0}}, true},
  };
  for (size_t i = 0; i < cases.size(); ++i) {
    INFO("case " << i);
    ConeReport rep = cone_check(cases[i].chis);
    CHECK(rep.strongly_convex == cases[i].convex);
    if (cases[i].convex)
      CHECK(functional_certifies(rep, cases[i].chis));
    else
      CHECK(witness_certifies(rep, cases[i].chis));
    // exhaustive small-coefficient oracle agrees on these small instances
    CHECK(small_relation_exists(cases[i].chis) == !cases[i].convex);
  }
}

TEST_CASE("certified random instances") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> coord(-4, 4), dim(1, 4), cnt(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int n = dim(rng), N = cnt(rng);
    std::vector<std::vector<int>> chis;
    if (trial % 2 == 0) {
      // built to lie in an open half-space: first coordinate positive
      for (int j = 0; j < N; ++j) {
        std::vector<int> chi(n);
        chi[0] = 1 + (static_cast<int>(rng() % 3));
        for (int k = 1; k < n; ++k) chi[k] = coord(rng);
        chis.push_back(chi);
      }
    } else {
      // built to contain a circuit: include x, y and -(x + y)
      std::vector<int> x(n), y(n), z(n);
      for (int k = 0; k < n; ++k) {
        x[k] = coord(rng);
        y[k] = coord(rng);
        z[k] = -(x[k] + y[k]);
      }
      chis = {x, y, z};
      for (int j = 3; j < N; ++j) {
        std::vector<int> chi(n);
        for (int k = 0; k < n; ++k) chi[k] = coord(rng);
        chis.push_back(chi);
      }
    }
    ConeReport rep = cone_check(chis);
    if (rep.strongly_convex)
      CHECK(functional_certifies(rep, chis));
    else
      CHECK(witness_certifies(rep, chis));
    if (trial % 2 == 0) CHECK(rep.strongly_convex);
    if (trial % 2 == 1) CHECK_FALSE(rep.strongly_convex);
  }
}

TEST_CASE("convergence functional") {
  auto ell = convergence_cone({{1, 0}, {0, 1}, {2, 3}});
  REQUIRE(ell.size() == 2);
  CHECK(ell[0] >= 1);
  CHECK(ell[1] >= 1);
  CHECK_THROWS_AS(convergence_cone({{1, 1}, {-1, -1}}), NotStronglyConvex);
  CHECK_THROWS_AS(cone_check({{1, 0}, {1}}), ShapeMismatch);
  CHECK(cone_check({}).strongly_convex);
}
