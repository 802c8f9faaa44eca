#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bottres/error.hpp"
#include "bottres/numeric.hpp"
#include "bottres/partition.hpp"
#include "bottres/profile.hpp"

namespace bottres {

/// All elementary symmetric values e_0..e_n of a weight multiset at once,
/// read off the coefficients of prod_j (1 + w_j z). O(n^2), exact.
inline std::vector<Int> elementary_all(const std::vector<Int>& weights) {
  std::vector<Int> e(weights.size() + 1);
  e[0] = 1;
  std::size_t used = 0;
  for (const Int& w : weights) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += w * e[k - 1];
  }
  return e;
}

inline Int elementary(int k, const std::vector<Int>& weights) {
  if (k < 0 || k > static_cast<int>(weights.size())) {
    fail(Errc::IndexOutOfRange, "elementary symmetric index " + std::to_string(k) +
                                    " out of range for " + std::to_string(weights.size()) +
                                    " weights");
  }
  return elementary_all(weights)[static_cast<std::size_t>(k)];
}

inline std::vector<Int> squared_weights(const std::vector<Int>& weights) {
  std::vector<Int> sq;
  sq.reserve(weights.size());
  for (const Int& w : weights) sq.push_back(w * w);
  return sq;
}

namespace detail {
inline Int elementary_product(const std::vector<Int>& weights, const Partition& lambda) {
  const std::vector<Int> e = elementary_all(weights);
  Int result = 1;
  for (int part : lambda.parts()) {
    if (part > static_cast<int>(weights.size())) {
      fail(Errc::PartTooLarge, "partition part " + std::to_string(part) + " exceeds " +
                                   std::to_string(weights.size()) + " weights");
    }
    result *= e[static_cast<std::size_t>(part)];
  }
  return result;
}
}  // namespace detail

/// c_lambda(i) = prod_t e_{lambda_t}(k_1,...,k_n) at one fixed point.
inline Int c_lambda_at_point(const FixedPoint& point, const Partition& lambda) {
  return detail::elementary_product(point.weights, lambda);
}

/// sigma_lambda(i) = prod_t sigma_{lambda_t}(k_1^2,...,k_n^2): the same
/// e-product evaluated on the squared weights.
inline Int sigma_at_point(const FixedPoint& point, const Partition& lambda) {
  return detail::elementary_product(squared_weights(point.weights), lambda);
}

/// A symmetric polynomial to feed through a residue sum:
/// f = (prod_t e_{lambda_t})^power. lambda == nullopt (or power == 0) is the
/// constant 1. The degree in the x-variables, with deg(x_i) = 1, is
/// weight(lambda) * power (doubled on the squared-variable path).
struct SymmetricFunctionSpec {
  std::optional<Partition> lambda;
  int power = 1;

  static SymmetricFunctionSpec one() { return {std::nullopt, 1}; }
  static SymmetricFunctionSpec elementary_product(Partition p) { return {std::move(p), 1}; }
  static SymmetricFunctionSpec power_of(Partition p, int i) { return {std::move(p), i}; }

  int base_degree() const { return lambda && power > 0 ? lambda->weight() * power : 0; }

  std::string label() const {
    if (!lambda || power == 0) return "1";
    if (power == 1) return "e(" + lambda->str() + ")";
    return "e(" + lambda->str() + ")^" + std::to_string(power);
  }
};

/// Evaluates the spec at one point; squared = true substitutes the squared
/// weights (the sigma path of the smooth formula).
inline Int spec_value_at(const FixedPoint& point, const SymmetricFunctionSpec& spec, bool squared) {
  if (!spec.lambda || spec.power == 0) return 1;
  if (spec.power < 0) fail(Errc::BadParams, "spec power must be >= 0");
  Int base = squared ? sigma_at_point(point, *spec.lambda) : c_lambda_at_point(point, *spec.lambda);
  return int_pow(base, static_cast<unsigned>(spec.power));
}

}  // namespace bottres
