#pragma once

#include <algorithm>
#include <vector>

#include "spherical.hpp"

namespace rhofourier {

/// One pole factor (1 - c X^e) of a spectral section.
struct SectionFactor {
  ExactScalar c;
  std::vector<int> e;

  int direction() const {
    int d = 0;
    for (int k : e) d += k;
    return d;
  }
  SymLaurent as_poly(int n) const {
    return SymLaurent(n, ExactScalar(1)) - SymLaurent::monomial(n, e, c);
  }
  SectionFactor reflected() const {
    SectionFactor r{c, e};
    for (int& k : r.e) k = -k;
    return r;
  }
  friend bool operator==(const SectionFactor& a, const SectionFactor& b) {
    return a.e == b.e && a.c == b.c;
  }
};

namespace detail {
inline bool factor_less(const SectionFactor& a, const SectionFactor& b) {
  if (a.e != b.e) return a.e < b.e;
  return a.c.to_string() < b.c.to_string();
}
}  // namespace detail

/// scalar * prod(num) / prod(den): a rational section of the spectral
/// torus, with the pole factors kept in factored form so that reflection
/// and kernel multiplication cancel exactly.
struct RationalSection {
  SymLaurent scalar;
  std::vector<SectionFactor> num;
  std::vector<SectionFactor> den;

  explicit RationalSection(SymLaurent s) : scalar(std::move(s)) {}
  static RationalSection one(int n) { return RationalSection(SymLaurent(n, ExactScalar(1))); }

  int vars() const { return scalar.nvars(); }

  /// Remove factors shared between numerator and denominator.
  void cancel() {
    std::sort(num.begin(), num.end(), detail::factor_less);
    std::sort(den.begin(), den.end(), detail::factor_less);
    std::vector<SectionFactor> n2, d2;
    size_t i = 0, j = 0;
    while (i < num.size() && j < den.size()) {
      if (num[i] == den[j]) {
        ++i;
        ++j;
      } else if (detail::factor_less(num[i], den[j])) {
        n2.push_back(num[i++]);
      } else {
        d2.push_back(den[j++]);
      }
    }
    n2.insert(n2.end(), num.begin() + i, num.end());
    d2.insert(d2.end(), den.begin() + j, den.end());
    num = std::move(n2);
    den = std::move(d2);
  }

  RationalSection reflect() const {
    RationalSection r(scalar.reflect());
    for (const auto& f : num) r.num.push_back(f.reflected());
    for (const auto& f : den) r.den.push_back(f.reflected());
    r.cancel();
    return r;
  }

  friend RationalSection operator*(const RationalSection& a, const RationalSection& b) {
    RationalSection r(a.scalar * b.scalar);
    r.num = a.num;
    r.num.insert(r.num.end(), b.num.begin(), b.num.end());
    r.den = a.den;
    r.den.insert(r.den.end(), b.den.begin(), b.den.end());
    r.cancel();
    return r;
  }

  /// Equality of the cancelled factored form.
  friend bool operator==(const RationalSection& a, const RationalSection& b) {
    RationalSection x = a, y = b;
    x.cancel();
    y.cancel();
    return x.scalar == y.scalar && x.num == y.num && x.den == y.den;
  }

  /// Expand into total-degree grades on the window |alpha| <= trunc.  The
  /// pole factors must all point the same way; a factor with zero total
  /// degree has no graded expansion at all.
  GradedSeries expand(int trunc) const {
    int dir = 0;
    for (const auto& f : den) {
      int d = f.direction();
      if (d == 0) throw MixedPoleDirections("expand: pole factor of total degree zero");
      int s = d > 0 ? 1 : -1;
      if (dir == 0) dir = s;
      if (dir != s) throw MixedPoleDirections("expand: opposing pole directions");
    }
    // grades on the climbing side of the window may still re-enter it, so
    // only prune on the side the pole factors move away from
    auto keep = [&](int a) {
      if (dir > 0) return a <= trunc;
      if (dir < 0) return a >= -trunc;
      return a >= -trunc && a <= trunc;
    };
    SymLaurent P = scalar;
    for (const auto& f : num) P = P * f.as_poly(vars());
    GradedSeries G;
    G.trunc = trunc;
    for (const auto& [e, c] : P.terms()) {
      int a = 0;
      for (int k : e) a += k;
      if (keep(a)) G.components.try_emplace(a, SymLaurent(vars())).first->second.add_term(e, c);
    }
    for (const auto& f : den) {
      if (G.components.empty()) break;
      int d = f.direction();
      int kmax = d > 0 ? (trunc - G.components.begin()->first) / d
                       : (G.components.rbegin()->first + trunc) / (-d);
      GradedSeries H;
      H.trunc = trunc;
      ExactScalar ck(1);
      for (int k = 0; k <= kmax; ++k) {
        if (k > 0) ck *= f.c;
        std::vector<int> ke(f.e.size());
        for (size_t t = 0; t < f.e.size(); ++t) ke[t] = k * f.e[t];
        SymLaurent M = SymLaurent::monomial(vars(), ke, ck);
        for (const auto& [a, comp] : G.components) {
          int na = a + k * d;
          if (!keep(na)) continue;
          SymLaurent prod = comp * M;
          auto it = H.components.find(na);
          if (it == H.components.end())
            H.components[na] = prod;
          else
            it->second = it->second + prod;
        }
      }
      G = std::move(H);
    }
    for (auto it = G.components.begin(); it != G.components.end();) {
      if (it->second.is_zero() || it->first < -trunc || it->first > trunc)
        it = G.components.erase(it);
      else
        ++it;
    }
    return G;
  }
};

namespace detail {
inline void drop_zero_grades(GradedSeries& G) {
  for (auto it = G.components.begin(); it != G.components.end();)
    it = it->second.is_zero() ? G.components.erase(it) : std::next(it);
}
}  // namespace detail

/// The multiplicative gamma-kernel of rho on the spectral side:
/// prod_b (1 - v^{-1} X^{e_b}) / (1 - v^{-1} X^{-e_b}) over the lines of rho.
inline RationalSection gamma_section(const AlgebraicRep& rho) {
  RationalSection g = RationalSection::one(rho.n);
  for (const auto& e : rho.line_exponents()) {
    g.num.push_back({ExactScalar::v_pow(-1), e});
    g.den.push_back({ExactScalar::v_pow(-1), [&] {
                       std::vector<int> r = e;
                       for (int& k : r) k = -k;
                       return r;
                     }()});
  }
  g.cancel();
  return g;
}

/// The unramified L-section 1 / prod_b (1 - v^{-1} X^{e_b}).
inline RationalSection l_section(const AlgebraicRep& rho) {
  RationalSection L = RationalSection::one(rho.n);
  for (const auto& e : rho.line_exponents()) L.den.push_back({ExactScalar::v_pow(-1), e});
  return L;
}

/// The inverse of the L-section as a plain polynomial.
inline SymLaurent l_inverse_poly(const AlgebraicRep& rho) {
  SymLaurent P(rho.n, ExactScalar(1));
  for (const auto& e : rho.line_exponents())
    P = P * (SymLaurent(rho.n, ExactScalar(1)) - SymLaurent::monomial(rho.n, e, ExactScalar::v_pow(-1)));
  return P;
}

/// rho-Fourier transform on sections: T -> reflect(gamma * T).
inline RationalSection fourier_section(const RationalSection& T, const AlgebraicRep& rho) {
  return (gamma_section(rho) * T).reflect();
}

inline RationalSection section_of_function(const SphericalFunction& f) {
  return RationalSection(satake_transform(f));
}

inline Group section_group(const AlgebraicRep& rho) {
  return rho.group == Group::GL2 ? Group::GL2 : Group::GL1;
}

/// Truncated cell realization of a section expansion.
inline SphericalFunction function_of_section(const RationalSection& T, Group g, int trunc) {
  GradedSeries G = T.expand(trunc);
  SphericalFunction f;
  f.group = g;
  for (const auto& [a, comp] : G.components) {
    SphericalFunction part = inverse_satake(comp, g);
    for (const auto& [mu, c] : part.cells) f.add_cell(mu, c);
  }
  return f;
}

/// The basic function b_rho: cell realization of the L-section expansion.
inline SphericalFunction basic_function(const AlgebraicRep& rho, int trunc) {
  return function_of_section(l_section(rho), section_group(rho), trunc);
}

/// The gamma-kernel paired against the unit: cell realization of
/// F(unit) = reflect(gamma).
inline SphericalFunction kernel_gamma_K(const AlgebraicRep& rho, int trunc) {
  RationalSection T = fourier_section(
      RationalSection::one(rho.n), rho);
  return function_of_section(T, section_group(rho), trunc);
}

/// Total-degree grading of the Satake transform; grade alpha pairs with
/// t^alpha in the unramified zeta integral.
inline GradedSeries zeta_integral(const SphericalFunction& f, int trunc) {
  GradedSeries G;
  G.trunc = trunc;
  SymLaurent S = satake_transform(f);
  for (const auto& [e, c] : S.terms()) {
    int a = 0;
    for (int k : e) a += k;
    if (a >= -trunc && a <= trunc)
      G.components.try_emplace(a, SymLaurent(S.nvars())).first->second.add_term(e, c);
  }
  detail::drop_zero_grades(G);
  return G;
}

/// Largest absolute grade that differs between two graded series inside
/// the shared window; -1 when they agree everywhere.
inline int graded_mismatch(const GradedSeries& A, const GradedSeries& B) {
  int trunc = std::min(A.trunc, B.trunc);
  int worst = -1;
  for (int a = -trunc; a <= trunc; ++a) {
    auto ia = A.components.find(a);
    auto ib = B.components.find(a);
    bool za = ia == A.components.end() || ia->second.is_zero();
    bool zb = ib == B.components.end() || ib->second.is_zero();
    if (za && zb) continue;
    if (za != zb || !(ia->second == ib->second)) worst = std::max(worst, std::abs(a));
  }
  return worst;
}

/// Functional-equation residual for a finitely supported f: expand
/// reflect(gamma S_f) forward and gamma S_f backward, then compare grade
/// alpha of the first with the reflection of grade -alpha of the second.
/// Zero means the two expansion orders agree exactly.
inline int functional_equation_residual(const SphericalFunction& f, const AlgebraicRep& rho,
                                        int trunc) {
  RationalSection T = gamma_section(rho) * section_of_function(f);
  GradedSeries A = T.reflect().expand(trunc);
  GradedSeries B = T.expand(trunc);
  GradedSeries Brev;
  Brev.trunc = trunc;
  for (const auto& [a, comp] : B.components) Brev.components[-a] = comp.reflect();
  return graded_mismatch(A, Brev);
}

/// A graded expansion is asymptotically rho-Schwartz when multiplying by
/// the inverse L-polynomial leaves only finitely many grades, i.e. the
/// product vanishes on the upper part of the window.  `settle` is the
/// grade after which the product must be zero; the window must extend far
/// enough past it to make the check meaningful.
inline bool is_asymptotic_schwartz(const GradedSeries& G, const AlgebraicRep& rho, int settle) {
  SymLaurent P = l_inverse_poly(rho);
  int spread = 0;
  if (!P.is_zero()) spread = P.max_total_degree();
  if (G.trunc - spread <= settle) throw WindowTooSmall("is_asymptotic_schwartz");
  SymLaurent whole = G.recombine(P.nvars()) * P;
  for (const auto& [e, c] : whole.terms()) {
    int a = 0;
    for (int k : e) a += k;
    if (a > settle && a <= G.trunc - spread && !c.is_zero()) return false;
  }
  return true;
}

}  // namespace rhofourier
