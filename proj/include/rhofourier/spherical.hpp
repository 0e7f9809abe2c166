#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "sym_laurent.hpp"
#include "wd.hpp"

namespace rhofourier {

/// Finitely supported bi-K-invariant function, stored by Cartan cell.
/// GL1 cells are {k} (the shell of valuation k); GL2 cells are dominant
/// pairs {m1, m2} with m1 >= m2.
struct SphericalFunction {
  Group group = Group::GL2;
  std::map<std::vector<int>, ExactScalar> cells;

  int rank() const { return group == Group::GL1 ? 1 : 2; }

  void add_cell(std::vector<int> mu, const ExactScalar& c) {
    if (static_cast<int>(mu.size()) != rank()) throw ShapeMismatch("SphericalFunction: cell rank");
    if (rank() == 2 && mu[0] < mu[1]) throw NonDominant("SphericalFunction: cell not dominant");
    auto it = cells.find(mu);
    if (it == cells.end()) {
      if (!c.is_zero()) cells.emplace(std::move(mu), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) cells.erase(it);
    }
  }
  ExactScalar cell(const std::vector<int>& mu) const {
    auto it = cells.find(mu);
    return it == cells.end() ? ExactScalar(0) : it->second;
  }
  friend bool operator==(const SphericalFunction& a, const SphericalFunction& b) {
    return a.group == b.group && a.cells == b.cells;
  }

  static SphericalFunction indicator(Group g, std::vector<int> mu) {
    SphericalFunction f;
    f.group = g;
    f.add_cell(std::move(mu), ExactScalar(1));
    return f;
  }
  static SphericalFunction unit(Group g) {
    return indicator(g, std::vector<int>(g == Group::GL1 ? 1 : 2, 0));
  }
};

/// Number of right K-cosets in the double coset of diag(pi^m1, pi^m2):
/// 1 if m1 = m2, else q^{m-1}(q+1) with m = m1 - m2.
inline ExactScalar cartan_volume(int m1, int m2) {
  int m = m1 - m2;
  if (m < 0) throw NonDominant("cartan_volume: m1 < m2");
  if (m == 0) return ExactScalar(1);
  return ExactScalar::q_pow(m - 1) * (ExactScalar::q_pow(1) + ExactScalar(1));
}

/// Satake transform of the cell indicator:
/// v^m (X1 X2)^{m2} (h_m - q^{-1} X1 X2 h_{m-2}), m = m1 - m2.
inline SymLaurent satake_basis(int m1, int m2) {
  if (m1 < m2) throw NonDominant("satake_basis: m1 < m2");
  int m = m1 - m2;
  SymLaurent P = complete_homogeneous(m, 2);
  if (m >= 2) {
    SymLaurent corr = complete_homogeneous(m - 2, 2);
    corr = SymLaurent::monomial(2, {1, 1}, ExactScalar::q_pow(-1)) * corr;
    P = P - corr;
  }
  return SymLaurent::monomial(2, {m2, m2}, ExactScalar::v_pow(m)) * P;
}

inline SymLaurent satake_transform(const SphericalFunction& f) {
  if (f.group == Group::GL1) {
    SymLaurent P(1);
    for (const auto& [mu, c] : f.cells) P = P + SymLaurent::monomial(1, {mu[0]}, c);
    return P;
  }
  SymLaurent P(2);
  for (const auto& [mu, c] : f.cells) P = P + c * satake_basis(mu[0], mu[1]);
  return P;
}

/// Triangular solve against the basis transforms, peeling the
/// lexicographically largest exponent (always dominant for an invariant
/// input) at each step.
inline SphericalFunction inverse_satake(const SymLaurent& P, Group group) {
  SphericalFunction f;
  f.group = group;
  if (group == Group::GL1) {
    for (const auto& [e, c] : P.terms()) f.add_cell(e, c);
    return f;
  }
  if (!P.is_weyl_invariant()) throw NotWeylInvariant("inverse_satake: not symmetric");
  SymLaurent R = P;
  for (long guard = 0; !R.terms().empty(); ++guard) {
    if (guard > 100000) throw EnumerationBudgetExceeded("inverse_satake: no convergence");
    auto it = std::prev(R.terms().end());  // lex-max exponent
    std::vector<int> mu = it->first;
    if (mu[0] < mu[1]) throw NotWeylInvariant("inverse_satake: lex-max not dominant");
    ExactScalar c = it->second * ExactScalar::v_pow(-(mu[0] - mu[1]));
    f.add_cell(mu, c);
    R = R - c * satake_basis(mu[0], mu[1]);
  }
  return f;
}

/// Convolution via the Satake isomorphism.
inline SphericalFunction convolve(const SphericalFunction& a, const SphericalFunction& b) {
  if (a.group != b.group) throw ShapeMismatch("convolve: mixed groups");
  return inverse_satake(satake_transform(a) * satake_transform(b), a.group);
}

// ---- numeric spectral side ----

/// Harish-Chandra c-function c(x1, x2) = (1 - q^{-1} x2/x1) / (1 - x2/x1).
inline std::complex<double> c_function(std::complex<double> x1, std::complex<double> x2,
                                       double q) {
  std::complex<double> r = x2 / x1;
  if (std::abs(1.0 - r) < 1e-12) throw DegenerateSatake("c_function: coincident parameters");
  return (1.0 - r / q) / (1.0 - r);
}

/// Macdonald's formula for the zonal spherical function on the cell
/// (m1, m2), at an unramified character with Satake parameters (x1, x2).
inline std::complex<double> zonal_value(int m1, int m2, std::complex<double> x1,
                                        std::complex<double> x2, double q) {
  if (m1 < m2) throw NonDominant("zonal_value: m1 < m2");
  int m = m1 - m2;
  if (m == 0) return std::pow(x1 * x2, m2);
  double vq = std::sqrt(q);
  std::complex<double> term1 = c_function(x1, x2, q) * std::pow(x1, m1) * std::pow(x2, m2);
  std::complex<double> term2 = c_function(x2, x1, q) * std::pow(x2, m1) * std::pow(x1, m2);
  return std::pow(vq, -m) / (1.0 + 1.0 / q) * (term1 + term2);
}

/// Spherical transform = Satake polynomial evaluated at the parameters;
/// computed here from the cell data and Macdonald values.
inline std::complex<double> spherical_transform_numeric(const SphericalFunction& f,
                                                        std::complex<double> x1,
                                                        std::complex<double> x2, double q) {
  std::complex<double> s = 0.0;
  for (const auto& [mu, c] : f.cells) {
    double vol = mu[0] == mu[1] ? 1.0 : std::pow(q, mu[0] - mu[1] - 1) * (q + 1.0);
    s += c.eval_c(std::sqrt(q)) * vol * zonal_value(mu[0], mu[1], x1, x2, q);
  }
  return s;
}

/// Direct double-coset enumeration: Hermite cells [[pi^a, b], [0, pi^d]]
/// with a + d = m1 + m2 and min(a, d, val(b)) = m2, each weighted by
/// q^{(a-d)/2} x1^a x2^d.  Requires m2 >= 0.
inline std::complex<double> lattice_count_oracle(int m1, int m2, std::complex<double> x1,
                                                 std::complex<double> x2, int q,
                                                 long budget = 100000) {
  if (m1 < m2 || m2 < 0) throw NonDominant("lattice_count_oracle: need m1 >= m2 >= 0");
  int N = m1 + m2;
  long total = 0;
  std::complex<double> sum = 0.0;
  for (int a = 0; a <= N; ++a) {
    int d = N - a;
    long qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    total += qd;
    if (total > budget) throw EnumerationBudgetExceeded("lattice_count_oracle");
    for (long b = 0; b < qd; ++b) {
      int val = d;  // v(0) capped at d, enough for the min below
      if (b != 0) {
        val = 0;
        long bb = b;
        while (bb % q == 0) {
          bb /= q;
          ++val;
        }
      }
      if (std::min(std::min(a, d), val) != m2) continue;
      sum += std::pow(std::sqrt(static_cast<double>(q)), a - d) * std::pow(x1, a) *
             std::pow(x2, d);
    }
  }
  return sum;
}

/// Constant term along the Borel, geometric route: integrate over the
/// unipotent with the exact Haar shell measures.  Returns the function on
/// the torus cells (k1, k2) as a map.
inline std::map<std::vector<int>, ExactScalar> constant_term_geometric(
    const SphericalFunction& f) {
  if (f.group != Group::GL2) throw ShapeMismatch("constant_term_geometric: GL2 only");
  int lo = 0, hi = 0;
  for (const auto& [mu, c] : f.cells) {
    lo = std::min(lo, mu[1]);
    hi = std::max(hi, mu[0]);
  }
  std::map<std::vector<int>, ExactScalar> out;
  for (int k1 = lo; k1 <= hi; ++k1)
    for (int k2 = lo; k2 <= hi; ++k2) {
      ExactScalar acc(0);
      // diag(pi^k1, pi^k2) n(x) lies in the cell with lower elementary
      // divisor min(k1, k2, k1 + v(x)); shells v(x) = c have measure
      // q^{-c}(1 - q^{-1}), and the tail v(x) >= C has measure q^{-C}
      int cap = k2 - k1;  // from here on the min no longer involves v(x)
      int cmin = lo - k1 - 1;
      for (int c = cmin; c < cap; ++c) {
        int m2 = std::min(std::min(k1, k2), k1 + c);
        int m1 = k1 + k2 - m2;
        ExactScalar val = f.cell({m1, m2});
        if (val.is_zero()) continue;
        acc += ExactScalar::q_pow(-c) * (ExactScalar(1) - ExactScalar::q_pow(-1)) * val;
      }
      int m2 = std::min(k1, k2);
      int m1 = k1 + k2 - m2;
      ExactScalar stable = f.cell({m1, m2});
      if (!stable.is_zero()) acc += ExactScalar::q_pow(-cap) * stable;
      acc *= ExactScalar::v_pow(k2 - k1);  // delta^{1/2}
      if (!acc.is_zero()) out[{k1, k2}] = acc;
    }
  return out;
}

/// Spectral route: the constant term values are the monomial coefficients
/// of the Satake polynomial.
inline std::map<std::vector<int>, ExactScalar> constant_term(const SphericalFunction& f) {
  std::map<std::vector<int>, ExactScalar> out;
  SymLaurent S = satake_transform(f);
  for (const auto& [e, c] : S.terms()) out[e] = c;
  return out;
}

/// Plancherel inversion residual: recover each stored cell value from the
/// spherical transform over the unitary spectrum.  Offset trapezoid grids
/// keep the parameters away from the Weyl walls; the overall constant is
/// calibrated on the unit of the algebra.
inline double plancherel_inversion_check(const SphericalFunction& f, double q, int points) {
  if (points < 2) throw QuadratureBudget("plancherel_inversion_check: too few points");
  const double two_pi = 6.283185307179586476925;
  std::vector<std::complex<double>> x1s(points), x2s(points);
  for (int j = 0; j < points; ++j) {
    x1s[j] = std::polar(1.0, two_pi * j / points);
    x2s[j] = std::polar(1.0, two_pi * (j + 0.5) / points);
  }
  auto density = [&](int j, int k) {
    double m = std::abs(c_function(x1s[j], x2s[k], q));
    return 1.0 / (m * m);
  };
  double norm = 0.0;
  for (int j = 0; j < points; ++j)
    for (int k = 0; k < points; ++k) norm += density(j, k);
  double worst = 0.0;
  for (const auto& [mu, cval] : f.cells) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < points; ++j)
      for (int k = 0; k < points; ++k) {
        std::complex<double> hat = spherical_transform_numeric(f, x1s[j], x2s[k], q);
        acc += hat * std::conj(zonal_value(mu[0], mu[1], x1s[j], x2s[k], q)) * density(j, k);
      }
    acc /= norm;
    worst = std::max(worst, std::abs(acc - cval.eval_c(std::sqrt(q))));
  }
  return worst;
}

}  // namespace rhofourier
