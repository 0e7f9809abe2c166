#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "upoly.hpp"

namespace rhofourier {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

/// Element of Q(v).  v is treated as an independent transcendental; the
/// residue size enters as q = v^2, so everything stays exact until a
/// numeric specialization v = sqrt(q) is requested.
class ExactScalar {
public:
  ExactScalar() : rf_() {}
  ExactScalar(int c) : rf_(Rational(c)) {}
  ExactScalar(const Rational& c) : rf_(c) {}
  ExactScalar(UPoly<Rational> num, UPoly<Rational> den) : rf_(std::move(num), std::move(den)) {}
  explicit ExactScalar(RationalFunc<Rational> rf) : rf_(std::move(rf)) {}

  static ExactScalar v_pow(long k) {
    if (k >= 0)
      return ExactScalar(UPoly<Rational>::monomial(1, static_cast<int>(k)), UPoly<Rational>(Rational(1)));
    return ExactScalar(UPoly<Rational>(Rational(1)), UPoly<Rational>::monomial(1, static_cast<int>(-k)));
  }
  static ExactScalar v() { return v_pow(1); }
  /// q = v^2.
  static ExactScalar q_pow(long k) { return v_pow(2 * k); }

  bool is_zero() const { return rf_.is_zero(); }
  bool is_one() const { return *this == ExactScalar(1); }
  const RationalFunc<Rational>& rf() const { return rf_; }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.rf_ + b.rf_);
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.rf_ - b.rf_);
  }
  ExactScalar operator-() const { return ExactScalar(-rf_); }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    return ExactScalar(a.rf_ * b.rf_);
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.is_zero()) throw ZeroDenominator("ExactScalar: division by zero");
    return ExactScalar(a.rf_ / b.rf_);
  }
  ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
  ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
  ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
  ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.rf_ == b.rf_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  ExactScalar inv() const {
    if (is_zero()) throw ZeroDenominator("ExactScalar: inverse of zero");
    return ExactScalar(1) / *this;
  }

  ExactScalar pow(long k) const {
    if (k == 0) return ExactScalar(1);
    ExactScalar base = k > 0 ? *this : inv();
    long e = k > 0 ? k : -k;
    ExactScalar acc(1);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Numeric specialization at v = sqrt(q).
  double eval(double sqrt_q) const {
    auto lift = [](const Rational& r) { return to_double(r); };
    double n = rf_.num().template eval_with<double>(sqrt_q, lift);
    double d = rf_.den().template eval_with<double>(sqrt_q, lift);
    return n / d;
  }
  std::complex<double> eval_c(double sqrt_q) const { return {eval(sqrt_q), 0.0}; }

  std::string to_string() const;
  static ExactScalar parse(const std::string& s);

private:
  RationalFunc<Rational> rf_;
};

namespace detail {

inline std::string rat_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Prints a Laurent polynomial in v given coefficients (lowest first) and a
// base exponent offset.
inline std::string laurent_v_to_string(const std::vector<Rational>& coeffs, int offset) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs[static_cast<size_t>(i)];
    if (c == 0) continue;
    Rational ac = c < 0 ? Rational(-c) : c;
    bool neg = c < 0;
    int e = i + offset;
    std::string term;
    if (e == 0) {
      term = rat_to_string(ac);
    } else {
      std::string vpart = e == 1 ? "v" : "v^" + std::to_string(e);
      term = (ac == 1) ? vpart : rat_to_string(ac) + "*" + vpart;
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

inline std::string ExactScalar::to_string() const {
  const auto& num = rf_.num();
  const auto& den = rf_.den();
  if (num.is_zero()) return "0";
  // Monomial denominator v^m: fold into a Laurent polynomial.
  bool den_monomial = true;
  for (int i = 0; i < den.degree(); ++i)
    if (!(den.coeff(i) == 0)) den_monomial = false;
  if (den_monomial) {
    int m = den.degree();
    Rational lead = den.leading();
    std::vector<Rational> cs;
    for (int i = 0; i <= num.degree(); ++i) cs.push_back(num.coeff(i) / lead);
    return detail::laurent_v_to_string(cs, -m);
  }
  std::string ns = detail::laurent_v_to_string(num.coeffs(), 0);
  std::string ds = detail::laurent_v_to_string(den.coeffs(), 0);
  std::string left = (num.degree() > 0 && num.coeffs().size() > 1) ? "(" + ns + ")" : ns;
  return left + "/(" + ds + ")";
}

namespace detail {

// Recursive-descent parser for expressions over Q(v): numbers, v, + - * / ^
// and parentheses.  Accepts everything to_string produces plus inputs like
// "v^-1" or "2/3*v".
class ScalarParser {
public:
  explicit ScalarParser(const std::string& s) : s_(s), pos_(0) {}

  ExactScalar parse() {
    ExactScalar r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input in scalar: " + s_);
    return r;
  }

private:
  ExactScalar expr() {
    ExactScalar acc = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  ExactScalar term() {
    ExactScalar acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else if (peek() == '/') {
        ++pos_;
        acc /= factor();
      } else {
        return acc;
      }
    }
  }
  ExactScalar factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '-' || peek() == '+') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    ExactScalar a = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      long e = parse_int();
      a = a.pow(e);
    }
    return neg ? -a : a;
  }
  ExactScalar atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExactScalar r = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')' in scalar: " + s_);
      ++pos_;
      return r;
    }
    if (c == 'v') {
      ++pos_;
      return ExactScalar::v();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return ExactScalar(Rational(parse_digits()));
    }
    throw ParseError("unexpected character in scalar: " + s_);
  }
  long parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    std::string d = parse_digits();
    long x = std::stol(d);
    return neg ? -x : x;
  }
  std::string parse_digits() {
    skip_ws();
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    if (d.empty()) throw ParseError("expected digits in scalar: " + s_);
    return d;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  const std::string& s_;
  size_t pos_;
};

}  // namespace detail

inline ExactScalar ExactScalar::parse(const std::string& s) {
  return detail::ScalarParser(s).parse();
}

}  // namespace rhofourier
