#pragma once

#include <json.hpp>

#include <string>
#include <utility>

#include "bottres/error.hpp"
#include "bottres/numeric.hpp"
#include "bottres/polynomial.hpp"

namespace bottres {

/// Exact univariate rational function over Q in the variable h, held as a
/// canonical fraction of integer polynomials: gcd(num, den) = 1 (integer
/// contents included), positive leading coefficient in the denominator, and
/// (0, 1) for the zero function. Equal functions therefore have identical
/// representations.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::constant(1)) {}

  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::DivisionByZeroFunction, "zero denominator");
    normalize();
  }

  static RationalFunction from_poly(Poly p) { return RationalFunction(std::move(p), Poly::constant(1)); }
  static RationalFunction constant(Int v) { return from_poly(Poly::constant(std::move(v))); }
  static RationalFunction from_rational(const Rat& q) {
    return RationalFunction(Poly::constant(numerator(q)), Poly::constant(denominator(q)));
  }

  /// h^k for any integer k; negative powers land in the denominator.
  static RationalFunction h_power(long k) {
    if (k >= 0) return from_poly(Poly::monomial(1, static_cast<int>(k)));
    return RationalFunction(Poly::constant(1), Poly::monomial(1, static_cast<int>(-k)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  Rat constant_value() const {
    if (!is_constant()) fail(Errc::BadParams, "rational function is not constant");
    if (num_.is_zero()) return Rat(0);
    return make_rat(num_.coeff(0), den_.coeff(0));
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  RationalFunction operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) fail(Errc::DivisionByZeroFunction, "division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction pow(unsigned e) const {
    RationalFunction acc = constant(1);
    RationalFunction base = *this;
    while (e > 0) {
      if (e & 1u) acc = acc * base;
      base = base * base;
      e >>= 1u;
    }
    return acc;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rat eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) fail(Errc::BadParams, "evaluation at a pole");
    return num_.eval(x) / d;
  }

  /// Factors the full function as h^shift * reduced with the reduced
  /// numerator and denominator both nonzero at h = 0 (shift 0 for the zero
  /// function).
  struct Split;
  Split split_h_power() const;

  // { "shift": <int>, "num": [c0, c1, ...], "den": [...] } with the h-power
  // split off and coefficients as decimal strings.
  nlohmann::ordered_json to_json() const;

  std::string str() const {
    if (den_ == Poly::constant(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!(g == Poly::constant(1))) {
      num_ = Poly::div_exact(num_, g);
      den_ = Poly::div_exact(den_, g);
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Poly num_;
  Poly den_;
};

struct RationalFunction::Split {
  long shift = 0;
  RationalFunction reduced;
};

inline RationalFunction::Split RationalFunction::split_h_power() const {
  if (is_zero()) return {};
  const int vn = num_.valuation();
  const int vd = den_.valuation();
  Split out;
  out.shift = static_cast<long>(vn) - static_cast<long>(vd);
  out.reduced.num_ = num_.unshifted(vn);
  out.reduced.den_ = den_.unshifted(vd);
  return out;
}

inline nlohmann::ordered_json RationalFunction::to_json() const {
  Split s = split_h_power();
  nlohmann::ordered_json j;
  j["shift"] = s.shift;
  nlohmann::ordered_json num = nlohmann::ordered_json::array();
  for (const Int& c : s.reduced.num_.coefficients()) num.push_back(c.str());
  if (s.reduced.num_.is_zero()) num.push_back("0");
  nlohmann::ordered_json den = nlohmann::ordered_json::array();
  for (const Int& c : s.reduced.den_.coefficients()) den.push_back(c.str());
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  return j;
}

}  // namespace bottres
