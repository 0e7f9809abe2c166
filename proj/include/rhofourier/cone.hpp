#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "exact.hpp"

namespace rhofourier {

using cpp_int = boost::multiprecision::cpp_int;

namespace detail {

/// Phase-1 simplex with Bland's rule over exact rationals.  Returns a basic
/// feasible point of {A x = b, x >= 0} or nullopt if the system is infeasible.
inline std::optional<std::vector<Rational>> lp_feasible(std::vector<std::vector<Rational>> A,
                                                        std::vector<Rational> b) {
  const size_t m = A.size();
  const size_t n = m == 0 ? 0 : A[0].size();
  if (m == 0) return std::vector<Rational>(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& v : A[i]) v = -v;
    }
  // tableau: n original columns, m artificial columns, rhs
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(n + m + 1, Rational(0)));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
    basis[i] = n + i;
  }
  // cost row for min(sum of artificials), expressed over the nonbasic columns
  for (size_t j = 0; j <= n + m; ++j) {
    Rational s(0);
    for (size_t i = 0; i < m; ++i) s += T[i][j];
    T[m][j] = (j >= n && j < n + m) ? Rational(0) : -s;
  }
  for (;;) {
    size_t enter = n + m;
    for (size_t j = 0; j < n + m; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    size_t leave = m;
    for (size_t i = 0; i < m; ++i) {
      if (!(T[i][enter] > 0)) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rational cur = T[i][n + m] / T[i][enter];
      Rational best = T[leave][n + m] / T[leave][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase 1
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rational f = T[i][enter];
      if (f == 0) continue;
      for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (T[m][n + m] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][n + m];
  return x;
}

/// Scale a rational vector to coprime integers.
inline std::vector<cpp_int> to_integer_vector(const std::vector<Rational>& v) {
  cpp_int L = 1;
  for (const auto& r : v) L = lcm(L, denominator(r));
  std::vector<cpp_int> out;
  cpp_int G = 0;
  for (const auto& r : v) {
    out.push_back(numerator(r) * (L / denominator(r)));
    G = gcd(G, out.back());
  }
  if (G > 1)
    for (auto& x : out) x /= G;
  return out;
}

}  // namespace detail

/// Verdict for a finite exponent set: either an integral linear functional
/// ell with <ell, chi_i> >= 1 for all i (the cone is strongly convex and the
/// chi_i sit in an open half-space), or a nonzero nonnegative integral
/// relation sum c_i chi_i = 0 witnessing the failure.
struct ConeReport {
  bool strongly_convex = false;
  std::vector<cpp_int> functional;  // set when strongly_convex
  std::vector<cpp_int> witness;     // set otherwise
};

inline ConeReport cone_check(const std::vector<std::vector<int>>& chis) {
  ConeReport rep;
  const size_t N = chis.size();
  if (N == 0) {
    rep.strongly_convex = true;
    return rep;
  }
  const size_t n = chis[0].size();
  for (const auto& c : chis)
    if (c.size() != n) throw ShapeMismatch("cone_check: mixed dimensions");

  // LP 1: c >= 0, sum c = 1, sum c_i chi_i = 0
  {
    std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(N, Rational(0)));
    std::vector<Rational> b(n + 1, Rational(0));
    for (size_t j = 0; j < N; ++j) {
      A[0][j] = 1;
      for (size_t k = 0; k < n; ++k) A[1 + k][j] = chis[j][k];
    }
    b[0] = 1;
    if (auto c = detail::lp_feasible(A, b)) {
      rep.strongly_convex = false;
      rep.witness = detail::to_integer_vector(*c);
      return rep;
    }
  }

  // LP 2: <ell, chi_j> - s_j = 1, s_j >= 0, ell = ell+ - ell- free
  {
    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(2 * n + N, Rational(0)));
    std::vector<Rational> b(N, Rational(1));
    for (size_t j = 0; j < N; ++j) {
      for (size_t k = 0; k < n; ++k) {
        A[j][k] = chis[j][k];
        A[j][n + k] = -chis[j][k];
      }
      A[j][2 * n + j] = -1;
    }
    auto x = detail::lp_feasible(A, b);
    if (!x) throw NotStronglyConvex("cone_check: dual certificate search failed");
    std::vector<Rational> ell(n);
    for (size_t k = 0; k < n; ++k) ell[k] = (*x)[k] - (*x)[n + k];
    // clear denominators only; keep <ell, chi> >= 1 by scaling up
    cpp_int L = 1;
    for (const auto& r : ell) L = lcm(L, denominator(r));
    rep.functional.resize(n);
    for (size_t k = 0; k < n; ++k) rep.functional[k] = numerator(ell[k]) * (L / denominator(ell[k]));
    rep.strongly_convex = true;
  }
  return rep;
}

/// The functional certifying convergence, or a NotStronglyConvex throw
/// carrying no certificate (use cone_check for the witness).
inline std::vector<cpp_int> convergence_cone(const std::vector<std::vector<int>>& chis) {
  ConeReport rep = cone_check(chis);
  if (!rep.strongly_convex) throw NotStronglyConvex("convergence_cone: exponents span a line");
  return rep.functional;
}

}  // namespace rhofourier
