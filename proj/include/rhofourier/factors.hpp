#pragma once

#include <complex>

#include "laurent.hpp"
#include "wd.hpp"

namespace rhofourier {

/// L(s, phi) as a function of t = q^{-s}.  Monodromy kernel convention:
/// block (x, a) keeps its highest line, contributing (1 - x v^{-(a-1)} t)^{-1}.
inline LaurentRational l_factor(const UnramWDRep& rep) {
  LaurentRational L(1);
  for (const auto& b : rep.blocks) {
    if (b.x.is_zero()) throw ZeroScalar("l_factor: zero Satake scalar");
    L = L / LaurentRational::one_minus(b.x * ExactScalar::v_pow(-(b.a - 1)), 1);
  }
  return L;
}

inline int conductor_exponent(const UnramWDRep& rep) {
  int c = 0;
  for (const auto& b : rep.blocks) c += b.a - 1;
  return c;
}

/// epsilon(1/2, phi, psi) for unramified psi: prod (-x)^{a-1}.
inline ExactScalar epsilon_half(const UnramWDRep& rep) {
  ExactScalar e(1);
  for (const auto& b : rep.blocks) {
    if (b.x.is_zero()) throw ZeroScalar("epsilon_half: zero Satake scalar");
    e *= (-b.x).pow(b.a - 1);
  }
  return e;
}

/// epsilon(s, phi, psi) = eps(1/2) * (q^{1/2-s})^{cond} = eps(1/2) * (v t)^{cond}.
inline LaurentRational epsilon_factor(const UnramWDRep& rep) {
  int c = conductor_exponent(rep);
  return LaurentRational(epsilon_half(rep) * ExactScalar::v_pow(c)) * LaurentRational::t_pow(c);
}

struct FactorTriple {
  LaurentRational L;
  ExactScalar eps_half;
  int conductor = 0;
};

inline FactorTriple factor_triple(const UnramWDRep& rep) {
  return {l_factor(rep), epsilon_half(rep), conductor_exponent(rep)};
}

/// gamma(s, phi, psi) = eps(s) L(1-s, phi^vee) / L(s, phi), reduced as a
/// rational function of t before any evaluation.
inline LaurentRational gamma_factor(const UnramWDRep& rep) {
  LaurentRational Ldual_rev = l_factor(dual(rep)).subst_one_minus_s();
  return epsilon_factor(rep) * Ldual_rev / l_factor(rep);
}

/// gamma at s = 1/2, i.e. t = v^{-1}, after full simplification.
inline ExactScalar gamma_at_half(const UnramWDRep& rep) {
  return gamma_factor(rep).eval(ExactScalar::v_pow(-1));
}

/// The displayed closed form for one block:
/// (-x)^{a-1} (1 - x q^{-a/2}) / (1 - x^{-1} q^{-a/2}).
inline ExactScalar gamma_half_display(const WDBlock& b) {
  if (b.x.is_zero()) throw ZeroScalar("gamma_half_display: zero Satake scalar");
  ExactScalar qa = ExactScalar::v_pow(-b.a);
  return (-b.x).pow(b.a - 1) * (ExactScalar(1) - b.x * qa) / (ExactScalar(1) - b.x.inv() * qa);
}

/// gamma(1/2, (x,a)) equals gamma(1/2, diagonal restriction of (x,a)), with
/// all pole/zero pairs cancelled in exact arithmetic before specialization.
inline bool check_sym_gamma_identity(const ExactScalar& x, int a) {
  WDBlock b{x, a};
  ExactScalar lhs = gamma_at_half(UnramWDRep{{b}});
  ExactScalar rhs = gamma_at_half(diagonal_restriction(b));
  return lhs == rhs && lhs == gamma_half_display(b);
}

/// gamma(s, phi, psi) gamma(1-s, phi^vee, psi) = 1 for unramified phi.
inline bool check_gamma_reflection(const UnramWDRep& rep) {
  LaurentRational g = gamma_factor(rep);
  LaurentRational gdual_rev = gamma_factor(dual(rep)).subst_one_minus_s();
  return g * gdual_rev == LaurentRational(1);
}

/// Numeric gamma(1/2) for a unitary block (|x| = 1), closed form.
inline std::complex<double> gamma_half_numeric(std::complex<double> x, int a, double q) {
  double qa = std::pow(q, -0.5 * a);
  std::complex<double> num = 1.0 - x * qa;
  std::complex<double> den = 1.0 - qa / x;
  if (std::abs(den) < 1e-14) throw NumericPole("gamma_half_numeric: pole at s = 1/2");
  std::complex<double> sign = std::pow(-x, a - 1);
  return sign * num / den;
}

/// Max deviation of |gamma(1/2)| from 1 over the blocks of a unitary rep.
inline double check_gamma_unitarity(const std::vector<std::pair<std::complex<double>, int>>& blocks,
                                    double q) {
  std::complex<double> g = 1.0;
  for (const auto& [x, a] : blocks) g *= gamma_half_numeric(x, a, q);
  return std::abs(std::abs(g) - 1.0);
}

}  // namespace rhofourier
