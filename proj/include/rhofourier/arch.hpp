#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "exact.hpp"

namespace rhofourier {

using cplx = std::complex<double>;

/// log Gamma for complex arguments (Lanczos, g = 7).  Only the real part is
/// branch-independent; magnitude bounds use exclusively Re(lgamma).
inline cplx lgamma_complex(cplx z) {
  static const double g = 7.0;
  static const double coef[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                 771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6,
                                 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection: log pi - log sin(pi z) - lgamma(1-z)
    cplx s = std::sin(M_PI * z);
    if (std::abs(s) == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
    return std::log(M_PI) - std::log(s) - lgamma_complex(1.0 - z);
  }
  z -= 1.0;
  cplx x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
  cplx t = z + g + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline double log_abs_gamma(cplx z) {
  // |Gamma(conj z)| = |Gamma(z)|: normalize so conjugate pairs cancel exactly
  z = {z.real(), std::abs(z.imag())};
  // pole detection for real nonpositive integers
  if (std::abs(z.imag()) < 1e-13) {
    double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z.real() - r) < 1e-12)
      return std::numeric_limits<double>::infinity();
  }
  return lgamma_complex(z).real();
}

/// One Gamma_R / Gamma_C factor: d = 1 gives
/// pi^{-(s+s0+shift)/2} Gamma((s+s0+shift)/2), d = 2 gives
/// 2 (2 pi)^{-(s+s0+shift)} Gamma(s+s0+shift), with s0 = i * s0_im.
struct ArchComponent {
  int d = 1;
  Rational shift;   // e in {0,1} for d = 1; f in (1/2) Z_{>=0} for d = 2
  Rational s0_im;   // purely imaginary twist s0 = i * s0_im

  ArchComponent() = default;
  ArchComponent(int dd, Rational sh, Rational s0) : d(dd), shift(std::move(sh)), s0_im(std::move(s0)) {
    if (d != 1 && d != 2) throw ShapeMismatch("ArchComponent: d must be 1 or 2");
    if (d == 1 && !(shift == 0 || shift == 1))
      throw ShapeMismatch("ArchComponent: d = 1 requires shift in {0,1}");
    if (d == 2 && (shift < 0 || !(Rational(2) * shift == Rational(numerator(Rational(2) * shift)))))
      throw ShapeMismatch("ArchComponent: d = 2 requires shift in (1/2)Z_{>=0}");
  }

  int kappa() const { return d == 1 ? 2 : 1; }
};

inline cplx l_factor_arch(const ArchComponent& c, cplx s) {
  cplx z = s + cplx(to_double(c.shift), to_double(c.s0_im));
  if (c.d == 1) {
    cplx h = z / 2.0;
    if (std::isinf(log_abs_gamma(h))) throw PoleEvaluation("l_factor_arch: pole");
    return std::pow(M_PI, -h) * std::exp(lgamma_complex(h));
  }
  if (std::isinf(log_abs_gamma(z))) throw PoleEvaluation("l_factor_arch: pole");
  return 2.0 * std::pow(2.0 * M_PI, -z) * std::exp(lgamma_complex(z));
}

/// Exact pole: s = -s0 - shift - kappa * n, n >= 0.
struct ArchPole {
  Rational re;  // -shift - kappa n
  Rational im;  // -s0_im
  friend bool operator<(const ArchPole& a, const ArchPole& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
  friend bool operator==(const ArchPole& a, const ArchPole& b) { return a.re == b.re && a.im == b.im; }
};

/// Poles with Re in [-beta, beta], exactly (the progression route).
inline std::vector<ArchPole> poles_in_strip(const ArchComponent& c, const Rational& beta) {
  std::vector<ArchPole> out;
  for (int n = 0;; ++n) {
    Rational re = -c.shift - Rational(c.kappa() * n);
    if (re < -beta) break;
    if (re <= beta) out.push_back({re, -c.s0_im});
  }
  return out;
}

/// First few poles of the full progression (for reporting).
inline std::vector<ArchPole> pole_set(const ArchComponent& c, int count) {
  std::vector<ArchPole> out;
  for (int n = 0; n < count; ++n) out.push_back({-c.shift - Rational(c.kappa() * n), -c.s0_im});
  return out;
}

/// Polynomial in s given by its exact root multiset.
struct RootPoly {
  std::vector<ArchPole> roots;

  cplx eval(cplx s) const {
    cplx p = 1.0;
    for (const auto& r : roots) p *= s - cplx(to_double(r.re), to_double(r.im));
    return p;
  }
  std::string to_string() const {
    if (roots.empty()) return "1";
    std::string out;
    for (const auto& r : roots) {
      std::string term = "s";
      auto app = [&term](const Rational& x, const std::string& suffix) {
        if (x == 0) return;
        std::ostringstream os;
        if (x > 0) os << "+";
        os << x << suffix;
        term += os.str();
      };
      app(-r.re, "");
      app(-r.im, "i");
      out += "(" + term + ")";
    }
    return out;
  }
};

/// Interval-lattice construction of the strip pole-killing polynomial.  For
/// d = 1 the zero set is {s0... } built from n in [-beta, 0] meeting the
/// parity class of the shift; for d = 2 from n in [-beta, -shift] on the
/// lattice shift + Z.  Multiplicities add over components.
inline RootPoly pole_killing_poly(const std::vector<ArchComponent>& comps, const Rational& beta) {
  RootPoly p;
  for (const auto& c : comps) {
    if (c.d == 1) {
      // n in [-beta, 0] with n = -shift mod 2: root at s = -s0 + n
      for (int j = 0;; ++j) {
        Rational n = -c.shift - Rational(2 * j);
        if (n < -beta) break;
        p.roots.push_back({n, -c.s0_im});
      }
    } else {
      // n in [-beta, -shift] on the lattice -shift - Z_{>=0}
      for (int j = 0;; ++j) {
        Rational n = -c.shift - Rational(j);
        if (n < -beta) break;
        p.roots.push_back({n, -c.s0_im});
      }
    }
  }
  std::sort(p.roots.begin(), p.roots.end());
  return p;
}

/// Exact check: zeros of p match the strip poles of prod L with
/// multiplicity, so p * prod L has neither pole nor zero in the strip.
inline bool check_pole_killing(const std::vector<ArchComponent>& comps, const Rational& beta) {
  RootPoly p = pole_killing_poly(comps, beta);
  std::vector<ArchPole> poles;
  for (const auto& c : comps) {
    auto ps = poles_in_strip(c, beta);
    poles.insert(poles.end(), ps.begin(), ps.end());
  }
  std::sort(poles.begin(), poles.end());
  if (!(poles == p.roots)) return false;
  for (const auto& r : p.roots)
    if (r.re < -beta || r.re > beta) return false;
  return true;
}

// ---- torus data and composition ----

struct RealTorusDatum {
  std::vector<int> eps;     // {0,1}^a
  std::vector<int> k;       // Z^b
  std::vector<int> kprime;  // Z^c
};

/// Irreducible representation of the L-group of the torus: either a
/// character (parity e) or the induction of a Weil-restriction character
/// (weight m).
struct ArchIrrRep {
  bool two_dim = false;
  std::vector<int> ell;     // Z^a
  std::vector<int> ellp;    // Z^b
  std::vector<int> ellpp;   // Z^b  (two_dim only)
  std::vector<int> ellppp;  // Z^c  (two_dim only)
  Rational s0_im;           // s0 = i * s0_im
  int e = 0;                // parity, one-dim only
  int m = 0;                // two_dim only
};

inline ArchComponent arch_compose_one(const ArchIrrRep& rho, const RealTorusDatum& phi) {
  if (rho.ell.size() != phi.eps.size() || rho.ellp.size() != phi.k.size())
    throw ShapeMismatch("arch_compose: component shape mismatch");
  if (!rho.two_dim) {
    // parity from evaluating the character on the j-image of phi
    long par = rho.e;
    for (size_t i = 0; i < phi.eps.size(); ++i) par += static_cast<long>(phi.eps[i]) * rho.ell[i];
    for (size_t i = 0; i < phi.k.size(); ++i) par += static_cast<long>(phi.k[i]) * rho.ellp[i];
    int ee = static_cast<int>(((par % 2) + 2) % 2);
    return ArchComponent(1, Rational(ee), rho.s0_im);
  }
  if (rho.ellpp.size() != phi.k.size() || rho.ellppp.size() != phi.kprime.size())
    throw ShapeMismatch("arch_compose: component shape mismatch");
  bool irr = rho.m != 0;
  for (size_t i = 0; i < rho.ellp.size(); ++i)
    if (rho.ellp[i] != rho.ellpp[i]) irr = true;
  for (int l3 : rho.ellppp)
    if (l3 != 0) irr = true;
  if (!irr) throw ShapeMismatch("arch_compose: reducible two-dimensional datum");
  long M = rho.m;
  for (size_t i = 0; i < phi.k.size(); ++i)
    M += static_cast<long>(phi.k[i]) * (rho.ellp[i] - rho.ellpp[i]);
  for (size_t i = 0; i < phi.kprime.size(); ++i)
    M += static_cast<long>(phi.kprime[i]) * rho.ellppp[i];
  Rational f = Rational(M < 0 ? -M : M, 2);
  return ArchComponent(2, f, rho.s0_im);
}

inline std::vector<ArchComponent> arch_compose(const std::vector<ArchIrrRep>& rho,
                                               const RealTorusDatum& phi) {
  std::vector<ArchComponent> out;
  for (const auto& r : rho) out.push_back(arch_compose_one(r, phi));
  return out;
}

/// Weight of the restriction to the complex Weil group: z acts by
/// |z|^{s0} (z/|z|)^M.  Independent route to f = |M|/2 for the two-dim case.
inline long weil_restriction_weight(const ArchIrrRep& rho, const RealTorusDatum& phi) {
  if (!rho.two_dim) return 0;
  long M = rho.m;
  for (size_t i = 0; i < phi.k.size(); ++i)
    M += static_cast<long>(phi.k[i]) * (rho.ellp[i] - rho.ellpp[i]);
  for (size_t i = 0; i < phi.kprime.size(); ++i)
    M += static_cast<long>(phi.kprime[i]) * rho.ellppp[i];
  return M;
}

// ---- Gamma-ratio bounds ----

struct BoundReport {
  double min_slack = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;  // fitted constant C for the corollary shape
  long points = 0;
};

/// |Gamma(d/2 (Q+1-s)) / Gamma(d/2 (Q+s))| <= ((d/2)|Q+1+s|)^{d/2 - d Re s}
/// for Q >= 0, |Re s| <= 1/2.
inline std::pair<double, double> moreno_values(int d, double Q, cplx s) {
  double hd = d / 2.0;
  double lhs;
  double gap = hd * (1.0 - 2.0 * s.real());
  double kint = std::round(gap);
  if (kint >= 0.0 && std::abs(gap - kint) < 1e-12) {
    // the two arguments differ by an integer: telescope by Gamma(z+1) =
    // z Gamma(z) so the boundary cases Re s = 1/2 (and Q = 0, Re s = -1/2,
    // where the bound is an identity) come out exact
    cplx w = hd * (Q + std::conj(s));
    lhs = 1.0;
    bool pole = false;
    for (int j = 0; j < static_cast<int>(kint); ++j) {
      double m = std::abs(w + static_cast<double>(j));
      if (m == 0.0) pole = true;
      lhs *= m;
    }
    if (pole) lhs = 0.0;  // Gamma pole in the denominator kills the ratio
  } else {
    double la = log_abs_gamma(hd * (Q + 1.0 - s));
    double lb = log_abs_gamma(hd * (Q + s));
    lhs = std::isinf(lb) ? 0.0 : (std::isinf(la) ? std::numeric_limits<double>::infinity()
                                                 : std::exp(la - lb));
  }
  double rhs = std::pow(hd * std::abs(Q + 1.0 + s), hd - d * s.real());
  return {lhs, rhs};
}

inline double moreno_slack(int d, double Q, cplx s) {
  auto [lhs, rhs] = moreno_values(d, Q, s);
  return rhs - lhs;
}

inline BoundReport verify_moreno(int d, const std::vector<double>& Q_grid,
                                 const std::vector<cplx>& s_grid) {
  BoundReport rep;
  for (double Q : Q_grid)
    for (cplx s : s_grid) {
      double sl = moreno_slack(d, Q, s);
      if (std::isnan(sl)) continue;
      rep.min_slack = std::min(rep.min_slack, sl);
      ++rep.points;
    }
  return rep;
}

/// Monic p with p(s) Gamma((d/2)(Q+1/2-s)) entire on |Re s| <= n: roots at
/// s = Q + 1/2 + 2j/d inside [-n, n]; p_vee mirrors them on the left.
inline std::vector<double> corollary_p_roots(int d, double Q, int n) {
  std::vector<double> roots;
  for (int j = 0;; ++j) {
    double r = Q + 0.5 + 2.0 * j / d;
    if (r > n) break;
    roots.push_back(r);
  }
  return roots;
}

/// LHS / RHS of the Gamma-ratio corollary at one point.
inline double corollary_ratio(int d, double Q, int n, cplx s) {
  auto proots = corollary_p_roots(d, Q, n);
  cplx p = 1.0, pv = 1.0;
  for (double r : proots) {
    p *= s - r;
    pv *= s + r;
  }
  double hd = d / 2.0;
  double la = log_abs_gamma(hd * (Q + 0.5 - s));
  double lb = log_abs_gamma(hd * (Q + 0.5 + s));
  // grid points landing exactly on a Gamma pole are removable (a root of p
  // or p_vee cancels them); signal them as NaN so callers skip the point
  if (std::isinf(la) || std::isinf(lb)) return std::nan("");
  double lhs = std::abs(p) * std::exp(la - lb) / std::abs(pv);
  double rhs = (1.0 + std::abs(p)) * std::pow(std::abs(Q + 1.0 + s + 2.0 * n),
                                              static_cast<double>(n * d + 2));
  return lhs / rhs;
}

inline BoundReport verify_ratio_bound(int n, int d, const std::vector<double>& Q_grid,
                                      const std::vector<cplx>& s_grid) {
  BoundReport rep;
  rep.min_slack = 0.0;
  for (double Q : Q_grid)
    for (cplx s : s_grid) {
      double r = corollary_ratio(d, Q, n, s);
      if (std::isnan(r) || std::isinf(r)) continue;
      rep.max_ratio = std::max(rep.max_ratio, r);
      ++rep.points;
    }
  return rep;
}

}  // namespace rhofourier
