#pragma once

#include <string>
#include <vector>

#include "bottres/error.hpp"
#include "bottres/numeric.hpp"

namespace bottres {

/// Dense univariate polynomial over the integers in the variable h.
/// Coefficient i is the coefficient of h^i; no trailing zeros are stored and
/// the zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Int value) {
    Poly p;
    if (value != 0) p.c_.push_back(std::move(value));
    return p;
  }

  static Poly monomial(Int coeff, int degree) {
    if (degree < 0) fail(Errc::BadParams, "monomial degree must be >= 0");
    Poly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(degree) + 1, Int(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero -> -1
  const std::vector<Int>& coefficients() const { return c_; }

  const Int& coeff(int i) const {
    static const Int zero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
  }

  const Int& leading() const {
    static const Int zero = 0;
    return c_.empty() ? zero : c_.back();
  }

  /// Index of the lowest nonzero coefficient (the h-adic valuation); 0 for
  /// the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) return static_cast<int>(i);
    }
    return 0;
  }

  /// Multiplies by h^k, k >= 0.
  Poly shifted(int k) const {
    if (k < 0) fail(Errc::BadParams, "shift must be >= 0");
    if (is_zero() || k == 0) return *this;
    Poly out;
    out.c_.assign(static_cast<std::size_t>(k), Int(0));
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
  }

  /// Divides by h^k assuming the k lowest coefficients vanish.
  Poly unshifted(int k) const {
    if (k <= 0) return *this;
    if (valuation() < k && !is_zero()) fail(Errc::BadParams, "unshift below valuation");
    if (is_zero()) return *this;
    Poly out;
    out.c_.assign(c_.begin() + k, c_.end());
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.coeff(int(i)) + b.coeff(int(i));
    out.trim();
    return out;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.coeff(int(i)) - b.coeff(int(i));
    out.trim();
    return out;
  }

  Poly operator-() const {
    Poly out = *this;
    for (Int& v : out.c_) v = -v;
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
  }

  friend Poly operator*(const Poly& a, const Int& s) {
    if (s == 0) return Poly();
    Poly out = a;
    for (Int& v : out.c_) v *= s;
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
  }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const {
    Int g = 0;
    for (const Int& v : c_) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) break;
    }
    return g;
  }

  Poly primitive_part() const {
    if (is_zero()) return Poly();
    Int g = content();
    Poly out = *this;
    for (Int& v : out.c_) v /= g;
    return out;
  }

  /// Exact quotient a / b; requires b | a in Z[h].
  static Poly div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(Errc::DivisionByZeroFunction, "division by the zero polynomial");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) fail(Errc::BadParams, "inexact polynomial division");
    std::vector<Int> rem = a.c_;
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Int(0));
    const Int& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Int top = rem[static_cast<std::size_t>(k + b.degree())];
      if (top == 0) continue;
      Int q = top / lead;
      if (q * lead != top) fail(Errc::BadParams, "inexact polynomial division");
      quot[static_cast<std::size_t>(k)] = q;
      for (int j = 0; j <= b.degree(); ++j) {
        rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
      }
    }
    for (const Int& v : rem) {
      if (v != 0) fail(Errc::BadParams, "inexact polynomial division");
    }
    return Poly(std::move(quot));
  }

  /// Fraction-free pseudo-remainder of a by b (b nonzero).
  static Poly pseudo_rem(Poly a, const Poly& b) {
    const int d = b.degree();
    const Int& lead = b.leading();
    while (!a.is_zero() && a.degree() >= d) {
      const int k = a.degree() - d;
      const Int top = a.leading();
      a = a * lead - b.shifted(k) * top;
    }
    return a;
  }

  /// Polynomial gcd over Z by the primitive polynomial remainder sequence;
  /// the result includes the integer content gcd and has a positive leading
  /// coefficient.
  static Poly gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Int content_gcd = boost::multiprecision::gcd(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
      Poly r = pseudo_rem(a, b);
      if (!r.is_zero()) r = r.primitive_part();
      a = std::move(b);
      b = std::move(r);
    }
    if (a.leading() < 0) a = -a;
    return a * content_gcd;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Int& v = c_[i];
      if (v == 0) continue;
      if (!out.empty()) out += v > 0 ? " + " : " - ";
      else if (v < 0) out += "-";
      Int a = abs(v);
      if (a != 1 || i == 0) out += a.str();
      if (i >= 1) {
        if (a != 1) out += "*";
        out += "h";
        if (i >= 2) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

}  // namespace bottres
