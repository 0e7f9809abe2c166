#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "exact.hpp"

namespace rhofourier {

/// One unramified Weil-Deligne block chi_x (x) Sym^{a-1}.
struct WDBlock {
  ExactScalar x;
  int a = 1;
};

struct UnramWDRep {
  std::vector<WDBlock> blocks;

  int dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.a;
    return d;
  }

  UnramWDRep sorted() const {
    UnramWDRep r = *this;
    std::sort(r.blocks.begin(), r.blocks.end(), [](const WDBlock& p, const WDBlock& q) {
      if (p.a != q.a) return p.a < q.a;
      return p.x.to_string() < q.x.to_string();
    });
    return r;
  }
  friend bool operator==(const UnramWDRep& p, const UnramWDRep& q) {
    auto ps = p.sorted(), qs = q.sorted();
    if (ps.blocks.size() != qs.blocks.size()) return false;
    for (size_t i = 0; i < ps.blocks.size(); ++i)
      if (ps.blocks[i].a != qs.blocks[i].a || !(ps.blocks[i].x == qs.blocks[i].x)) return false;
    return true;
  }
};

enum class Group { GL1, GL2, GL1n };

inline int group_rank(Group g, int n) {
  switch (g) {
    case Group::GL1: return 1;
    case Group::GL2: return 2;
    default: return n;
  }
}

/// Algebraic representation of the dual group.  GL2 summands are
/// Sym^m (x) det^r; GL1^n summands are weight vectors.
struct AlgebraicRep {
  Group group = Group::GL1;
  int n = 1;  // rank for GL1n
  struct GL2Summand {
    int m = 0, r = 0;
  };
  std::vector<GL2Summand> gl2;
  std::vector<std::vector<int>> weights;

  int rank() const { return group_rank(group, n); }

  int dim() const {
    if (group == Group::GL2) {
      int d = 0;
      for (const auto& s : gl2) d += s.m + 1;
      return d;
    }
    return static_cast<int>(weights.size());
  }

  /// Weight-vector exponents of all lines after restriction to the diagonal
  /// torus: the Satake scalar of each block is the corresponding monomial.
  std::vector<std::vector<int>> line_exponents() const {
    std::vector<std::vector<int>> out;
    if (group == Group::GL2) {
      for (const auto& s : gl2)
        for (int j = 0; j <= s.m; ++j) out.push_back({s.m - j + s.r, j + s.r});
    } else {
      out = weights;
    }
    return out;
  }

  /// Central weights chi_i per irreducible summand.
  std::vector<std::vector<int>> central_weights() const {
    std::vector<std::vector<int>> out;
    if (group == Group::GL2) {
      for (const auto& s : gl2) out.push_back({s.m + 2 * s.r});
    } else {
      out = weights;
    }
    return out;
  }

  std::string name() const {
    if (group == Group::GL1) return weights.empty() ? "GL1 trivial" : "GL1 rep";
    if (group == Group::GL2) {
      std::string s = "GL2";
      for (const auto& p : gl2)
        s += " Sym^" + std::to_string(p.m) + "*det^" + std::to_string(p.r);
      return s;
    }
    return "GL1^" + std::to_string(n) + " rep";
  }

  static AlgebraicRep gl1_std() {
    AlgebraicRep r;
    r.group = Group::GL1;
    r.n = 1;
    r.weights = {{1}};
    return r;
  }
  static AlgebraicRep gl1_trivial() {
    AlgebraicRep r;
    r.group = Group::GL1;
    r.n = 1;
    return r;
  }
  static AlgebraicRep gl2_sym(int m, int rr = 0) {
    AlgebraicRep r;
    r.group = Group::GL2;
    r.n = 2;
    r.gl2.push_back({m, rr});
    return r;
  }
  static AlgebraicRep gl2_std() { return gl2_sym(1, 0); }
  static AlgebraicRep gl2_det() { return gl2_sym(0, 1); }
};

/// rho o LL(pi) for an unramified principal-series Satake parameter.
inline UnramWDRep rho_compose(const AlgebraicRep& rho, const std::vector<ExactScalar>& satake) {
  if (static_cast<int>(satake.size()) != rho.rank())
    throw ArityMismatch("rho_compose: Satake parameter arity mismatch");
  UnramWDRep out;
  for (const auto& e : rho.line_exponents()) {
    ExactScalar s(1);
    for (size_t i = 0; i < e.size(); ++i) s *= satake[i].pow(e[i]);
    out.blocks.push_back({s, 1});
  }
  return out;
}

/// (x, a) -> direct sum of a twisted characters x * v^{-(a-1)+2i}.
inline UnramWDRep diagonal_restriction(const WDBlock& b) {
  UnramWDRep out;
  for (int i = 0; i < b.a; ++i)
    out.blocks.push_back({b.x * ExactScalar::v_pow(-(b.a - 1) + 2 * i), 1});
  return out;
}

inline UnramWDRep dual(const UnramWDRep& rep) {
  UnramWDRep out;
  for (const auto& b : rep.blocks) {
    if (b.x.is_zero()) throw ZeroScalar("dual: zero Satake scalar");
    out.blocks.push_back({b.x.inv(), b.a});
  }
  return out;
}

/// Twist by |.|^u with u = twice_u / 2: multiplies each scalar by v^{-2u}.
inline UnramWDRep twist(const UnramWDRep& rep, int twice_u) {
  UnramWDRep out;
  for (const auto& b : rep.blocks) out.blocks.push_back({b.x * ExactScalar::v_pow(-twice_u), b.a});
  return out;
}

inline UnramWDRep direct_sum(const UnramWDRep& p, const UnramWDRep& q) {
  UnramWDRep out = p;
  out.blocks.insert(out.blocks.end(), q.blocks.begin(), q.blocks.end());
  return out;
}

}  // namespace rhofourier
