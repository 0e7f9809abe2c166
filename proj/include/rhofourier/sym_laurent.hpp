#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "exact.hpp"

namespace rhofourier {

/// Laurent polynomial in X_1..X_n with ExactScalar coefficients, stored as a
/// sparse exponent-vector map.  Zero has an empty term map.
class SymLaurent {
public:
  using Exp = std::vector<int>;

  SymLaurent() : n_(1) {}
  explicit SymLaurent(int n) : n_(n) {}
  SymLaurent(int n, const ExactScalar& c) : n_(n) {
    if (!c.is_zero()) terms_[Exp(static_cast<size_t>(n), 0)] = c;
  }

  static SymLaurent monomial(int n, Exp e, ExactScalar c) {
    SymLaurent p(n);
    if (!c.is_zero()) p.terms_[std::move(e)] = std::move(c);
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, ExactScalar>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  ExactScalar coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactScalar(0) : it->second;
  }

  void add_term(const Exp& e, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend SymLaurent operator+(const SymLaurent& a, const SymLaurent& b) {
    SymLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend SymLaurent operator-(const SymLaurent& a, const SymLaurent& b) {
    SymLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  SymLaurent operator-() const {
    SymLaurent r(n_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
    SymLaurent r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e = ea;
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend SymLaurent operator*(const ExactScalar& c, const SymLaurent& a) {
    SymLaurent r(a.n_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : a.terms_) r.terms_[e] = c * cc;
    return r;
  }
  friend bool operator==(const SymLaurent& a, const SymLaurent& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymLaurent& a, const SymLaurent& b) { return !(a == b); }

  /// X_i -> X_i^{-1} for all i.
  SymLaurent reflect() const {
    SymLaurent r(n_);
    for (const auto& [e, c] : terms_) {
      Exp f = e;
      for (auto& x : f) x = -x;
      r.terms_[std::move(f)] = c;
    }
    return r;
  }

  bool is_weyl_invariant() const {
    for (const auto& [e, c] : terms_) {
      Exp p = e;
      std::sort(p.begin(), p.end());
      do {
        if (!(coeff(p) == c)) return false;
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return true;
  }

  int total_degree(const Exp& e) const { return std::accumulate(e.begin(), e.end(), 0); }

  /// Degree of the zero polynomial is undefined.
  int max_total_degree() const {
    if (is_zero()) throw std::logic_error("SymLaurent: degree of zero");
    int m = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) m = std::max(m, total_degree(e));
    return m;
  }
  int min_total_degree() const {
    if (is_zero()) throw std::logic_error("SymLaurent: degree of zero");
    int m = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) m = std::min(m, total_degree(e));
    return m;
  }

  /// Homogeneous part of total degree alpha.
  SymLaurent grade(int alpha) const {
    SymLaurent r(n_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == alpha) r.terms_[e] = c;
    return r;
  }

  std::complex<double> eval_c(const std::vector<std::complex<double>>& x, double sqrt_q) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> m = c.eval_c(sqrt_q);
      for (size_t i = 0; i < e.size(); ++i) m *= std::pow(x[i], e[i]);
      acc += m;
    }
    return acc;
  }

  ExactScalar eval_exact(const std::vector<ExactScalar>& x) const {
    ExactScalar acc(0);
    for (const auto& [e, c] : terms_) {
      ExactScalar m = c;
      for (size_t i = 0; i < e.size(); ++i) m *= x[i].pow(e[i]);
      acc += m;
    }
    return acc;
  }

  /// Exact division in the Laurent ring: returns the quotient if divisor
  /// divides *this exactly, std::nullopt otherwise.  Lex order on exponent
  /// vectors; sound because Q's monomial support is confined to the lex
  /// window [trail(P)-trail(D), lead(P)-lead(D)].
  std::optional<SymLaurent> try_divide(const SymLaurent& divisor) const {
    if (divisor.is_zero()) throw ZeroDenominator("SymLaurent: division by zero");
    if (is_zero()) return SymLaurent(n_);
    const Exp lead_d = divisor.terms_.rbegin()->first;
    const Exp trail_d = divisor.terms_.begin()->first;
    const ExactScalar lead_c = divisor.terms_.rbegin()->second;
    Exp window_lo = terms_.begin()->first;
    for (size_t i = 0; i < window_lo.size(); ++i) window_lo[i] -= trail_d[i];
    SymLaurent rem = *this, quot(n_);
    long guard = 0;
    while (!rem.is_zero()) {
      if (++guard > 2000000) return std::nullopt;
      Exp m = rem.terms_.rbegin()->first;
      ExactScalar c = rem.terms_.rbegin()->second / lead_c;
      for (size_t i = 0; i < m.size(); ++i) m[i] -= lead_d[i];
      if (std::lexicographical_compare(m.begin(), m.end(), window_lo.begin(), window_lo.end()))
        return std::nullopt;
      SymLaurent mono = monomial(n_, m, c);
      quot = quot + mono;
      rem = rem - mono * divisor;
    }
    return quot;
  }

private:
  int n_;
  std::map<Exp, ExactScalar> terms_;
};

/// Total-degree-graded container of homogeneous SymLaurent components.
struct GradedSeries {
  std::map<int, SymLaurent> components;
  int trunc = 0;

  SymLaurent recombine(int n) const {
    SymLaurent r(n);
    for (const auto& [a, p] : components) r = r + p;
    return r;
  }
};

/// h_k(X_1..X_n): sum of all degree-k monomials.
inline SymLaurent complete_homogeneous(int k, int n) {
  if (k < 0 || n < 1) throw std::invalid_argument("complete_homogeneous: k >= 0, n >= 1 required");
  SymLaurent r(n);
  std::vector<int> e(static_cast<size_t>(n), 0);
  // enumerate compositions of k into n parts
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      e[static_cast<size_t>(pos)] = rem;
      r.add_term(e, ExactScalar(1));
      return;
    }
    for (int i = 0; i <= rem; ++i) {
      e[static_cast<size_t>(pos)] = i;
      self(self, pos + 1, rem - i);
    }
  };
  rec(rec, 0, k);
  return r;
}

inline GradedSeries grade_by_alpha(const SymLaurent& p) {
  GradedSeries g;
  for (const auto& [e, c] : p.terms()) {
    int a = 0;
    for (int x : e) a += x;
    SymLaurent& comp = g.components.try_emplace(a, SymLaurent(p.nvars())).first->second;
    comp.add_term(e, c);
  }
  if (!g.components.empty())
    g.trunc = std::max(std::abs(g.components.begin()->first), std::abs(g.components.rbegin()->first));
  return g;
}

}  // namespace rhofourier
