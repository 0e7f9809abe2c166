#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rhofourier {

/// Dense univariate polynomial over a field K.  Coefficients are stored
/// lowest degree first; the representation is normalized so that the
/// leading coefficient is nonzero (the zero polynomial has no
/// coefficients).
template <class K>
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(K constant) {
    if (!(constant == K(0))) coeffs_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly monomial(K c, int degree) {
    if (degree < 0) throw std::invalid_argument("UPoly: negative degree");
    if (c == K(0)) return UPoly();
    std::vector<K> v(static_cast<size_t>(degree) + 1, K(0));
    v.back() = std::move(c);
    return UPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of zero is undefined; calling degree() on zero is an error.
  int degree() const {
    if (is_zero()) throw std::logic_error("UPoly: degree of zero");
    return static_cast<int>(coeffs_.size()) - 1;
  }
  const std::vector<K>& coeffs() const { return coeffs_; }
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return K(0);
    return coeffs_[static_cast<size_t>(i)];
  }
  const K& leading() const {
    if (is_zero()) throw std::logic_error("UPoly: leading of zero");
    return coeffs_.back();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    std::vector<K> v = coeffs_;
    for (auto& c : v) c = -c;
    UPoly r;
    r.coeffs_ = std::move(v);
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(v));
  }
  friend UPoly operator*(const K& c, const UPoly& a) {
    if (c == K(0)) return UPoly();
    std::vector<K> v = a.coeffs_;
    for (auto& x : v) x = c * x;
    return UPoly(std::move(v));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    UPoly rem = a;
    UPoly quot;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int d = rem.degree() - b.degree();
      K c = rem.leading() / b.leading();
      UPoly m = UPoly::monomial(c, d);
      quot = quot + m;
      rem = rem - m * b;
    }
    return {quot, rem};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / leading();
    return inv * *this;
  }

  /// Monic gcd via the Euclidean algorithm.  Remainders are rescaled to
  /// monic at every step to limit coefficient growth.
  friend UPoly gcd(UPoly a, UPoly b) {
    if (!a.is_zero() && a.degree() == 0) return UPoly(K(1));
    if (!b.is_zero() && b.degree() == 0) return UPoly(K(1));
    while (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      (void)q;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + V(*it);
    return acc;
  }

  /// Evaluation where the point lives in a different ring than K and a
  /// conversion functor lifts coefficients into that ring.
  template <class V, class Lift>
  V eval_with(const V& x, Lift lift) const {
    V acc = V(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + lift(*it);
    return acc;
  }

  std::string to_string(const std::string& var) const;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
  }
  std::vector<K> coeffs_;
};

/// Reduced fraction of two UPoly<K>.  Denominator is monic and coprime to
/// the numerator.
template <class K>
class RationalFunc {
public:
  RationalFunc() : num_(), den_(K(1)) {}
  RationalFunc(K c) : num_(std::move(c)), den_(K(1)) {}
  RationalFunc(UPoly<K> num, UPoly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
  }

  const UPoly<K>& num() const { return num_; }
  const UPoly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RationalFunc operator-() const {
    RationalFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
    return RationalFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunc: division by zero");
    return RationalFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunc& a, const RationalFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("RationalFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly<K>(K(1));
      return;
    }
    UPoly<K> g = gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    K lead = den_.leading();
    if (!(lead == K(1))) {
      K inv = K(1) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }
  UPoly<K> num_, den_;
};

}  // namespace rhofourier
