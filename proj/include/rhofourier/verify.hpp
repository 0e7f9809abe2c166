#pragma once

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arch.hpp"
#include "cone.hpp"
#include "factors.hpp"
#include "gl1.hpp"
#include "section.hpp"

namespace rhofourier {

struct VerifyEntry {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct VerifyConfig {
  std::vector<double> qs = {3.0};
  unsigned long seed = 1;
  double precision = 1e-9;
};

namespace verify_detail {

inline ExactScalar rand_unit_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 5), vp(-2, 2), sgn(0, 1);
  ExactScalar c(Rational(num(rng)));
  if (sgn(rng)) c = ExactScalar(1) / c;
  return c * ExactScalar::v_pow(vp(rng));
}

inline UnramWDRep rand_rep(std::mt19937_64& rng, int max_dim) {
  std::uniform_int_distribution<int> aa(1, 3);
  UnramWDRep r;
  int d = 0;
  while (d < max_dim) {
    int a = std::min(aa(rng), max_dim - d);
    r.blocks.push_back({rand_unit_scalar(rng), a});
    d += a;
  }
  return r;
}

inline SphericalFunction rand_function(std::mt19937_64& rng, Group g) {
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
      if (std::abs(m1) <= 3) f.add_cell({m1, m2}, ExactScalar(c));
    }
  }
  return f;
}

inline std::vector<AlgebraicRep> rho_battery() {
  return {AlgebraicRep::gl1_std(), AlgebraicRep::gl2_std(), AlgebraicRep::gl2_sym(2, 1)};
}

}  // namespace verify_detail

using VerifyTask = std::function<VerifyEntry()>;

inline std::vector<VerifyTask> gamma_suite(const VerifyConfig& cfg) {
  using namespace verify_detail;
  std::vector<VerifyTask> tasks;
  tasks.push_back([] {
    VerifyEntry e{"sym-gamma identity across block sizes", false, 0.0};
    std::vector<ExactScalar> xs = {ExactScalar(1),   ExactScalar(-1),
                                   ExactScalar::v(), ExactScalar::v_pow(3),
                                   ExactScalar(2),   ExactScalar(Rational(1, 3))};
    e.pass = true;
    for (const auto& x : xs)
      for (int a = 1; a <= 5; ++a) e.pass = e.pass && check_sym_gamma_identity(x, a);
    return e;
  });
  tasks.push_back([cfg] {
    VerifyEntry e{"gamma reflection product is 1", false, 0.0};
    std::mt19937_64 rng(cfg.seed);
    e.pass = true;
    for (int i = 0; i < 20; ++i) e.pass = e.pass && check_gamma_reflection(rand_rep(rng, 4));
    return e;
  });
  for (double q : cfg.qs)
    tasks.push_back([cfg, q] {
      VerifyEntry e{"gamma unitarity at the center, q=" + std::to_string(static_cast<int>(q)),
                    false, 0.0};
      std::mt19937_64 rng(cfg.seed + 17);
      std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
      std::uniform_int_distribution<int> aa(1, 3);
      for (int i = 0; i < 100; ++i) {
        std::vector<std::pair<std::complex<double>, int>> blocks;
        int nb = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < nb; ++j) blocks.push_back({std::polar(1.0, ang(rng)), aa(rng)});
        e.residual = std::max(e.residual, check_gamma_unitarity(blocks, q));
      }
      e.pass = e.residual <= 1e-10;
      return e;
    });
  return tasks;
}

inline std::vector<VerifyTask> fourier_suite(const VerifyConfig& cfg) {
  using namespace verify_detail;
  std::vector<VerifyTask> tasks;
  for (const auto& rho : rho_battery()) {
    tasks.push_back([rho] {
      VerifyEntry e{"Fourier fixes the L-section: " + rho.name(), false, 0.0};
      RationalSection L = l_section(rho);
      e.pass = fourier_section(L, rho) == L &&
               graded_mismatch(fourier_section(L, rho).expand(8), L.expand(8)) == -1;
      return e;
    });
    tasks.push_back([rho, cfg] {
      VerifyEntry e{"Fourier involution: " + rho.name(), false, 0.0};
      std::mt19937_64 rng(cfg.seed + 5);
      Group g = section_group(rho);
      e.pass = true;
      for (int i = 0; i < 10; ++i) {
        SphericalFunction f = rand_function(rng, g);
        RationalSection T = section_of_function(f);
        RationalSection FF = fourier_section(fourier_section(T, rho), rho);
        e.pass = e.pass && FF == T && function_of_section(FF, g, 10) == f;
      }
      return e;
    });
    tasks.push_back([rho, cfg] {
      VerifyEntry e{"functional-equation residual: " + rho.name(), false, 0.0};
      std::mt19937_64 rng(cfg.seed + 7);
      Group g = section_group(rho);
      e.pass = true;
      for (int i = 0; i < 10; ++i)
        e.pass = e.pass && functional_equation_residual(rand_function(rng, g), rho, 10) == -1;
      return e;
    });
  }
  tasks.push_back([cfg] {
    VerifyEntry e{"GL1 spectral vs direct transform", false, 0.0};
    std::mt19937_64 rng(cfg.seed + 11);
    std::uniform_int_distribution<int> kv(-3, 3), co(-2, 2);
    for (int trial = 0; trial < 5; ++trial) {
      SphericalFunction f;
      f.group = Group::GL1;
      for (int i = 0; i < 2; ++i) {
        int c = co(rng);
        if (c != 0) f.add_cell({kv(rng)}, ExactScalar(c));
      }
      e.residual = std::max(e.residual, compare_spectral_direct(f, 8, 3.0));
    }
    e.pass = e.residual <= cfg.precision;
    return e;
  });
  return tasks;
}

inline std::vector<VerifyTask> zeta_suite(const VerifyConfig&) {
  using namespace verify_detail;
  std::vector<VerifyTask> tasks;
  for (const auto& rho : rho_battery()) {
    tasks.push_back([rho] {
      VerifyEntry e{"zeta of basic function equals L: " + rho.name(), false, 0.0};
      SphericalFunction b = basic_function(rho, 8);
      e.pass = graded_mismatch(zeta_integral(b, 8), l_section(rho).expand(8)) == -1;
      return e;
    });
    tasks.push_back([rho] {
      VerifyEntry e{"L-expansion times inverse polynomial: " + rho.name(), false, 0.0};
      SymLaurent P = l_inverse_poly(rho);
      int spread = P.max_total_degree();
      GradedSeries G = l_section(rho).expand(8 + spread);
      SymLaurent whole = G.recombine(rho.n) * P;
      e.pass = whole.coeff(std::vector<int>(static_cast<size_t>(rho.n), 0)) == ExactScalar(1);
      for (const auto& [exp, c] : whole.terms()) {
        int a = 0;
        for (int k : exp) a += k;
        if (a != 0 && a <= 8) e.pass = false;
      }
      return e;
    });
  }
  return tasks;
}

inline std::vector<VerifyTask> arch_suite(const VerifyConfig& cfg) {
  std::vector<VerifyTask> tasks;
  tasks.push_back([] {
    VerifyEntry e{"Gamma-ratio bound on the strip grid", false, 0.0};
    std::vector<double> Qs;
    for (double Q = 0.0; Q <= 10.0 + 1e-9; Q += 1.0) Qs.push_back(Q);
    std::vector<cplx> ss;
    for (double re = -0.5; re <= 0.5 + 1e-9; re += 0.25)
      for (double im = -20.0; im <= 20.0 + 1e-9; im += 2.0) ss.push_back({re, im});
    double min_slack = std::numeric_limits<double>::infinity();
    for (int d : {1, 2}) min_slack = std::min(min_slack, verify_moreno(d, Qs, ss).min_slack);
    e.residual = min_slack;
    e.pass = min_slack >= 0.0;
    return e;
  });
  tasks.push_back([cfg] {
    VerifyEntry e{"pole-killing polynomial on random components", false, 0.0};
    std::mt19937_64 rng(cfg.seed + 13);
    std::uniform_int_distribution<int> dd(1, 2), nn(1, 4), par(0, 1), half(0, 6), im(-2, 2);
    e.pass = true;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<ArchComponent> comps;
      int n = nn(rng);
      for (int i = 0; i < n; ++i) {
        int d = dd(rng);
        comps.emplace_back(d, d == 1 ? Rational(par(rng)) : Rational(half(rng), 2),
                           Rational(im(rng)));
      }
      for (int beta = 1; beta <= 3; ++beta)
        e.pass = e.pass && check_pole_killing(comps, Rational(beta));
    }
    return e;
  });
  return tasks;
}

inline std::vector<VerifyTask> cone_suite(const VerifyConfig&) {
  std::vector<VerifyTask> tasks;
  tasks.push_back([] {
    VerifyEntry e{"cone checker hand battery", false, 0.0};
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
    e.pass = true;
    for (const auto& cs : cases) e.pass = e.pass && cone_check(cs.chis).strongly_convex == cs.convex;
    return e;
  });
  return tasks;
}

inline std::vector<VerifyTask> make_suite(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<VerifyTask> tasks;
  auto append = [&tasks](std::vector<VerifyTask> more) {
    for (auto& t : more) tasks.push_back(std::move(t));
  };
  if (suite == "gamma" || suite == "all") append(gamma_suite(cfg));
  if (suite == "fourier" || suite == "all") append(fourier_suite(cfg));
  if (suite == "zeta" || suite == "all") append(zeta_suite(cfg));
  if (suite == "arch" || suite == "all") append(arch_suite(cfg));
  if (suite == "cone" || suite == "all") append(cone_suite(cfg));
  if (tasks.empty()) throw ParseError("unknown suite: " + suite);
  return tasks;
}

}  // namespace rhofourier
