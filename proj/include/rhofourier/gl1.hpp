#pragma once

#include <complex>

#include "section.hpp"

namespace rhofourier {

/// Additive Fourier transform (unramified character, self-dual measure) of
/// the valuation-k shell indicator, evaluated on the valuation-j shell:
/// (1 - q^{-1}) q^{-k} for j >= -k, -q^{-k-1} at j = -k-1, 0 below.
inline ExactScalar additive_fourier_cell(int k, int j) {
  if (j >= -k) return (ExactScalar(1) - ExactScalar::q_pow(-1)) * ExactScalar::q_pow(-k);
  if (j == -k - 1) return -ExactScalar::q_pow(-k - 1);
  return ExactScalar(0);
}

/// Riemann-sum oracle for the same value: integrate the additive character
/// over unit representatives at a level that resolves it exactly.
inline std::complex<double> additive_fourier_oracle(int k, int j, int q,
                                                    long budget = 1000000) {
  int r = std::max(0, -(k + j));
  int M = r + 2;
  long qM = 1, qr = 1;
  for (int i = 0; i < M; ++i) {
    qM *= q;
    if (qM > budget) throw QuadratureBudget("additive_fourier_oracle");
  }
  for (int i = 0; i < r; ++i) qr *= q;
  const double two_pi = 6.283185307179586476925;
  // Kahan-compensated sum over units mod q^M
  double sre = 0.0, sim = 0.0, cre = 0.0, cim = 0.0;
  for (long u = 0; u < qM; ++u) {
    if (u % q == 0) continue;
    double phase = two_pi * static_cast<double>(u % qr) / static_cast<double>(qr);
    double tre = std::cos(phase), tim = std::sin(phase);
    double yre = tre - cre, yim = tim - cim;
    double nre = sre + yre, nim = sim + yim;
    cre = (nre - sre) - yre;
    cim = (nim - sim) - yim;
    sre = nre;
    sim = nim;
  }
  double scale = std::pow(static_cast<double>(q), -k - M);
  return {scale * sre, scale * sim};
}

/// GL1 rho-Fourier by direct integration: F f = |.|^{1/2} * hat(f |.|^{-1/2}),
/// realized on the valuation shells inside the window.
inline SphericalFunction gl1_fourier_direct(const SphericalFunction& f, int window) {
  if (f.group != Group::GL1) throw ShapeMismatch("gl1_fourier_direct: GL1 only");
  SphericalFunction out;
  out.group = Group::GL1;
  for (int j = -window; j <= window; ++j) {
    ExactScalar acc(0);
    for (const auto& [mu, c] : f.cells)
      acc += c * ExactScalar::v_pow(mu[0]) * additive_fourier_cell(mu[0], j);
    acc *= ExactScalar::v_pow(-j);
    if (!acc.is_zero()) out.add_cell({j}, acc);
  }
  return out;
}

/// Worst cell deviation between the spectral transform (gamma-kernel route)
/// and the direct shell integration, inside the window.
inline double compare_spectral_direct(const SphericalFunction& f, int window, double q) {
  SphericalFunction direct = gl1_fourier_direct(f, window);
  SphericalFunction spectral = function_of_section(
      fourier_section(section_of_function(f), AlgebraicRep::gl1_std()), Group::GL1, window);
  double worst = 0.0;
  for (int j = -window; j <= window; ++j) {
    double d = direct.cell({j}).eval(std::sqrt(q));
    double s = spectral.cell({j}).eval(std::sqrt(q));
    worst = std::max(worst, std::abs(d - s));
  }
  return worst;
}

}  // namespace rhofourier
