#pragma once

#include <complex>
#include <map>
#include <vector>

#include "exact.hpp"

namespace rhofourier {

enum class ExpandDirection { positive, negative };

namespace detail {

// Fraction-free gcd of polynomials in t over Q(v), via the primitive
// polynomial remainder sequence in Q[v][t].  The naive Euclidean algorithm
// over the fraction field blows up badly here.
using VPoly = UPoly<Rational>;

inline std::vector<VPoly> clear_denominators(const UPoly<ExactScalar>& p) {
  VPoly lcm(Rational(1));
  for (const auto& c : p.coeffs()) {
    const VPoly& d = c.rf().den();
    VPoly g = gcd(lcm, d);
    lcm = divmod(lcm * d, g).first;
  }
  std::vector<VPoly> out;
  for (const auto& c : p.coeffs())
    out.push_back(c.rf().num() * divmod(lcm, c.rf().den()).first);
  return out;
}

inline VPoly coeff_content(const std::vector<VPoly>& cs) {
  VPoly g;
  for (const auto& c : cs) g = gcd(g, c);
  return g.is_zero() ? VPoly(Rational(1)) : g;
}

inline void make_primitive(std::vector<VPoly>& cs) {
  VPoly g = coeff_content(cs);
  if (!g.is_zero() && g.degree() > 0)
    for (auto& c : cs) c = divmod(c, g).first;
  // strip rational content to keep cpp_rational sizes bounded
  using boost::multiprecision::cpp_int;
  cpp_int gn = 0, dl = 1;
  for (const auto& c : cs)
    for (const auto& r : c.coeffs()) {
      if (r == 0) continue;
      gn = boost::multiprecision::gcd(gn, boost::multiprecision::abs(numerator(r)));
      dl = dl / boost::multiprecision::gcd(dl, denominator(r)) * denominator(r);
    }
  if (gn == 0) return;
  Rational scale(dl, gn);
  if (scale == 1) return;
  for (auto& c : cs) c = scale * c;
}

inline void trim_top(std::vector<VPoly>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// exact pseudo-remainder: returns lb^{da-db+1} * a mod b
inline std::vector<VPoly> pseudo_rem(std::vector<VPoly> a, const std::vector<VPoly>& b) {
  trim_top(a);
  const int db = static_cast<int>(b.size()) - 1;
  const VPoly& lb = b.back();
  int e = static_cast<int>(a.size()) - 1 - db + 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    VPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j)
      a[static_cast<size_t>(da - db + j)] =
          a[static_cast<size_t>(da - db + j)] - la * b[static_cast<size_t>(j)];
    trim_top(a);
    --e;
  }
  for (int i = 0; i < e; ++i)
    for (auto& c : a) c = c * lb;
  return a;
}

inline UPoly<ExactScalar> gcd_over_qv(const UPoly<ExactScalar>& pa, const UPoly<ExactScalar>& pb) {
  if (pa.is_zero() || pb.is_zero() || pa.degree() == 0 || pb.degree() == 0)
    return UPoly<ExactScalar>(ExactScalar(1));
  std::vector<VPoly> a = clear_denominators(pa), b = clear_denominators(pb);
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  // subresultant polynomial remainder sequence
  VPoly g(Rational(1)), h(Rational(1));
  while (!b.empty()) {
    int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
    std::vector<VPoly> r = pseudo_rem(a, b);
    a = b;
    if (r.empty()) {
      b.clear();
      break;
    }
    VPoly divisor = g;
    for (int i = 0; i < delta; ++i) divisor = divisor * h;
    b.clear();
    for (const auto& c : r) b.push_back(divmod(c, divisor).first);
    g = a.back();
    // h = g^delta h^{1-delta}
    VPoly gpow(Rational(1));
    for (int i = 0; i < delta; ++i) gpow = gpow * g;
    if (delta == 0) {
      h = h;  // unchanged times h^1 / nothing: h stays for delta 0
    } else {
      VPoly hpow(Rational(1));
      for (int i = 0; i < delta - 1; ++i) hpow = hpow * h;
      h = divmod(gpow, hpow).first;
    }
  }
  make_primitive(a);
  std::vector<ExactScalar> cs;
  for (const auto& c : a) cs.emplace_back(c, VPoly(Rational(1)));
  UPoly<ExactScalar> out(std::move(cs));
  return out.monic();
}

}  // namespace detail

/// Ratio of Laurent polynomials in t with ExactScalar coefficients, kept in
/// the canonical form t^shift * num(t) / den(t) with num(0) != 0 (unless the
/// value is zero), den(0) = 1, gcd(num, den) = 1.
class LaurentRational {
public:
  LaurentRational() : shift_(0), num_(), den_(ExactScalar(1)) {}
  LaurentRational(ExactScalar c) : shift_(0), num_(std::move(c)), den_(ExactScalar(1)) {
    normalize();
  }
  LaurentRational(int c) : LaurentRational(ExactScalar(c)) {}

  /// From Laurent polynomials given as exponent -> coefficient maps.
  static LaurentRational from_laurent(const std::map<int, ExactScalar>& num,
                                      const std::map<int, ExactScalar>& den) {
    auto [ns, np] = pack(num);
    auto [ds, dp] = pack(den);
    if (dp.is_zero()) throw ZeroDenominator("LaurentRational: zero denominator");
    LaurentRational r;
    r.shift_ = ns - ds;
    r.num_ = std::move(np);
    r.den_ = std::move(dp);
    r.normalize();
    return r;
  }

  static LaurentRational t_pow(int k) {
    LaurentRational r(ExactScalar(1));
    r.shift_ = k;
    return r;
  }
  /// 1 - c * t^k  (k may be negative).
  static LaurentRational one_minus(const ExactScalar& c, int k) {
    std::map<int, ExactScalar> num{{0, ExactScalar(1)}, {k, -c}};
    return from_laurent(num, {{0, ExactScalar(1)}});
  }

  bool is_zero() const { return num_.is_zero(); }
  int shift() const { return shift_; }
  const UPoly<ExactScalar>& num() const { return num_; }
  const UPoly<ExactScalar>& den() const { return den_; }
  bool is_laurent_polynomial() const { return den_ == UPoly<ExactScalar>(ExactScalar(1)); }

  friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b) {
    LaurentRational r;
    r.shift_ = a.shift_ + b.shift_;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b) {
    if (b.is_zero()) throw ZeroDenominator("LaurentRational: division by zero");
    LaurentRational r;
    r.shift_ = a.shift_ - b.shift_;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.normalize();
    return r;
  }
  friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b) {
    LaurentRational r;
    int sh = std::min(a.shift_, b.shift_);
    UPoly<ExactScalar> ta = UPoly<ExactScalar>::monomial(ExactScalar(1), a.shift_ - sh);
    UPoly<ExactScalar> tb = UPoly<ExactScalar>::monomial(ExactScalar(1), b.shift_ - sh);
    r.shift_ = sh;
    r.num_ = ta * a.num_ * b.den_ + tb * b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b) {
    return a + (-b);
  }
  LaurentRational operator-() const {
    LaurentRational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const LaurentRational& a, const LaurentRational& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const LaurentRational& a, const LaurentRational& b) { return !(a == b); }

  LaurentRational inv() const { return LaurentRational(ExactScalar(1)) / *this; }

  /// t -> t^{-1}.
  LaurentRational reverse() const {
    if (is_zero()) return *this;
    LaurentRational r;
    int dn = num_.degree(), dd = den_.degree();
    r.shift_ = -shift_ - dn + dd;
    r.num_ = reverse_poly(num_);
    r.den_ = reverse_poly(den_);
    r.normalize();
    return r;
  }

  /// t -> q^{-1} t^{-1}, realizing s -> 1-s on functions of t = q^{-s}.
  LaurentRational subst_one_minus_s() const {
    if (is_zero()) return *this;
    LaurentRational r;
    int dn = num_.degree(), dd = den_.degree();
    ExactScalar qinv = ExactScalar::q_pow(-1);
    r.shift_ = -shift_ - dn + dd;
    r.num_ = reverse_poly(scale_arg(num_, qinv)) * UPoly<ExactScalar>(qinv.pow(shift_));
    r.den_ = reverse_poly(scale_arg(den_, qinv));
    r.normalize();
    return r;
  }

  /// Exact evaluation at t = t0; throws PoleAtHalf if the reduced
  /// denominator vanishes there.
  ExactScalar eval(const ExactScalar& t0) const {
    if (is_zero()) return ExactScalar(0);
    ExactScalar d = den_.eval(t0);
    if (d.is_zero()) throw PoleAtHalf("LaurentRational: pole at evaluation point");
    return t0.pow(shift_) * num_.eval(t0) / d;
  }

  std::complex<double> eval_c(std::complex<double> t0, double sqrt_q) const {
    if (is_zero()) return {0.0, 0.0};
    auto lift = [&](const ExactScalar& c) { return c.eval_c(sqrt_q); };
    std::complex<double> n = num_.template eval_with<std::complex<double>>(t0, lift);
    std::complex<double> d = den_.template eval_with<std::complex<double>>(t0, lift);
    if (std::abs(d) < 1e-14) throw NumericPole("LaurentRational: numeric pole");
    return std::pow(t0, shift_) * n / d;
  }

  /// One-sided series expansion.  Positive direction returns coefficients of
  /// t^0..t^N; negative direction coefficients of t^0..t^{-N}.
  std::vector<ExactScalar> series_expand(ExpandDirection dir, int N) const {
    if (dir == ExpandDirection::negative) return reverse().series_expand(ExpandDirection::positive, N);
    std::vector<ExactScalar> out(static_cast<size_t>(N) + 1, ExactScalar(0));
    if (is_zero()) return out;
    if (shift_ < 0)
      throw MixedPoleDirections(
          "series_expand: expansion in the requested direction has opposite-direction poles");
    // num/den power series; den(0) = 1.
    std::vector<ExactScalar> c(static_cast<size_t>(N) + 1, ExactScalar(0));
    for (int k = 0; k <= N; ++k) {
      ExactScalar acc = num_.coeff(k);
      for (int j = 1; j <= k; ++j) acc -= den_.coeff(j) * c[static_cast<size_t>(k - j)];
      c[static_cast<size_t>(k)] = acc;
    }
    for (int k = shift_; k <= N; ++k) out[static_cast<size_t>(k)] = c[static_cast<size_t>(k - shift_)];
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    auto poly_str = [](const UPoly<ExactScalar>& p, int off) {
      std::string s;
      for (int i = 0; i <= p.degree(); ++i) {
        ExactScalar c = p.coeff(i);
        if (c.is_zero()) continue;
        int e = i + off;
        std::string cs = c.to_string();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
          neg = true;
          cs = cs.substr(1);
        }
        std::string tpart = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
        std::string term;
        if (tpart.empty())
          term = cs;
        else if (cs == "1")
          term = tpart;
        else {
          if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos ||
              cs.find('/') != std::string::npos)
            cs = "(" + cs + ")";
          term = cs + "*" + tpart;
        }
        if (s.empty())
          s = (neg ? "-" : "") + term;
        else
          s += (neg ? "-" : "+") + term;
      }
      return s.empty() ? std::string("0") : s;
    };
    std::string ns = poly_str(num_, shift_);
    if (is_laurent_polynomial()) return ns;
    std::string ds = poly_str(den_, 0);
    bool simple = ns.find('+', 1) == std::string::npos && ns.find('-', 1) == std::string::npos &&
                  ns.find('*') == std::string::npos && ns.find('/') == std::string::npos &&
                  ns[0] != '-';
    return (simple ? ns : "(" + ns + ")") + "/(" + ds + ")";
  }

private:
  static std::pair<int, UPoly<ExactScalar>> pack(const std::map<int, ExactScalar>& m) {
    int lo = 0;
    bool any = false;
    for (const auto& [e, c] : m)
      if (!c.is_zero()) {
        if (!any || e < lo) lo = e;
        any = true;
      }
    if (!any) return {0, UPoly<ExactScalar>()};
    std::vector<ExactScalar> coeffs;
    for (const auto& [e, c] : m) {
      if (c.is_zero()) continue;
      size_t idx = static_cast<size_t>(e - lo);
      if (coeffs.size() <= idx) coeffs.resize(idx + 1, ExactScalar(0));
      coeffs[idx] = c;
    }
    return {lo, UPoly<ExactScalar>(std::move(coeffs))};
  }

  static UPoly<ExactScalar> reverse_poly(const UPoly<ExactScalar>& p) {
    std::vector<ExactScalar> c(p.coeffs().rbegin(), p.coeffs().rend());
    return UPoly<ExactScalar>(std::move(c));
  }
  // p(t) -> p(a*t)
  static UPoly<ExactScalar> scale_arg(const UPoly<ExactScalar>& p, const ExactScalar& a) {
    std::vector<ExactScalar> c = p.coeffs();
    ExactScalar pw(1);
    for (size_t i = 0; i < c.size(); ++i) {
      c[i] = c[i] * pw;
      pw *= a;
    }
    return UPoly<ExactScalar>(std::move(c));
  }

  void normalize() {
    if (den_.is_zero()) throw ZeroDenominator("LaurentRational: zero denominator");
    if (num_.is_zero()) {
      shift_ = 0;
      den_ = UPoly<ExactScalar>(ExactScalar(1));
      return;
    }
    // strip t-powers
    auto strip = [](UPoly<ExactScalar>& p) {
      int k = 0;
      while (p.coeff(k).is_zero()) ++k;
      if (k > 0) {
        std::vector<ExactScalar> c(p.coeffs().begin() + k, p.coeffs().end());
        p = UPoly<ExactScalar>(std::move(c));
      }
      return k;
    };
    shift_ += strip(num_);
    shift_ -= strip(den_);
    UPoly<ExactScalar> g = detail::gcd_over_qv(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    ExactScalar d0 = den_.coeff(0);
    ExactScalar inv = d0.inv();
    num_ = inv * num_;
    den_ = inv * den_;
  }

  int shift_;
  UPoly<ExactScalar> num_, den_;
};

}  // namespace rhofourier
