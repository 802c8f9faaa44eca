#pragma once

#include <vector>

#include "bottres/error.hpp"
#include "bottres/numeric.hpp"
#include "bottres/polynomial.hpp"
#include "bottres/profile.hpp"
#include "bottres/ratfunc.hpp"
#include "bottres/semifree.hpp"

namespace bottres {

namespace detail {

// Dense polynomial degrees scale with d * sum |k_j|; refuse absurd inputs
// instead of exhausting memory.
constexpr long kMaxSummandDegree = 1 << 20;

struct SummandShape {
  long cleared_numerator_degree = 0;  // exponent of h after clearing negatives
  long denominator_degree = 0;        // d * sum_j |k_j|
};

inline SummandShape summand_shape(const FixedPoint& point, int d) {
  Int weight_sum = 0;
  Int abs_sum = 0;
  Int neg_sum = 0;
  for (const Int& w : point.weights) {
    weight_sum += w;
    abs_sum += abs(w);
    if (w < 0) neg_sum += -w;
  }
  Int den_degree = Int(d) * abs_sum;
  if (den_degree > kMaxSummandDegree) {
    fail(Errc::BadParams, "weights too large for the dense rational-function engine");
  }
  Int num_degree = weight_sum + Int(d) * neg_sum;
  return {num_degree.convert_to<long>(), den_degree.convert_to<long>()};
}

/// One fixed point's term h^{sum k_j} / prod_j (1 - h^{d k_j}) with negative
/// exponents cleared by the minimal power of h: multiplying through by
/// h^{d |k_j|} turns each negative-weight factor into (h^{d|k_j|} - 1).
inline RationalFunction rigidity_summand(const FixedPoint& point, int d) {
  const SummandShape shape = summand_shape(point, d);
  Poly den = Poly::constant(1);
  for (const Int& w : point.weights) {
    const int e = (Int(d) * abs(w)).convert_to<int>();
    Poly factor = w > 0 ? Poly::constant(1) - Poly::monomial(1, e)   // 1 - h^{dk}
                        : Poly::monomial(1, e) - Poly::constant(1);  // h^{d|k|} - 1
    den = den * factor;
  }
  return RationalFunction(Poly::monomial(1, static_cast<int>(shape.cleared_numerator_degree)), den);
}

}  // namespace detail

/// The fixed-point sum of the twisted equivariant index, written in the
/// variable h with g = h^d:
///   sum_i h^{sum_j k_j^(i)} / prod_j (1 - h^{d k_j^(i)}).
/// When the first Chern class is divisible by d > 1 this function is
/// identically zero for genuine manifolds; the value is kept as a canonical
/// rational function with the h-power factored into laurent_shift.
struct RigiditySum {
  int divisor = 1;
  RationalFunction value;  // numerator and denominator nonzero at h = 0
  long laurent_shift = 0;  // full sum = h^laurent_shift * value

  RationalFunction total() const { return RationalFunction::h_power(laurent_shift) * value; }
};

inline RigiditySum rigidity_sum(const FixedPointProfile& profile, int d) {
  if (profile.structure != Structure::AlmostComplex) {
    fail(Errc::WrongStructure, "rigidity_sum requires an almost-complex profile");
  }
  if (d < 1) fail(Errc::BadParams, "divisor must be >= 1");
  RationalFunction total;
  for (const FixedPoint& p : profile.points) total = total + detail::rigidity_summand(p, d);
  RationalFunction::Split split = total.split_h_power();
  return {d, split.reduced, split.shift};
}

inline bool is_identically_zero(const RigiditySum& sum) { return sum.value.is_zero(); }

/// Closed form of the sum for a semi-free profile with rho-profile
/// rho_0 * C(n, t): rho_0 * h^n * (1 - h^{d-2})^n / (1 - h^d)^n. Identically
/// zero exactly when d = 2 (or rho_0 = 0); d = 1 collapses to the constant
/// rho_0 * (-1)^n.
inline RationalFunction semifree_closed_form(const Int& rho0, int n, int d) {
  if (n < 1) fail(Errc::BadDimension, "n must be >= 1");
  if (d < 1) fail(Errc::BadParams, "divisor must be >= 1");
  if (rho0 == 0) return RationalFunction();
  RationalFunction base =
      RationalFunction::constant(1) - RationalFunction::h_power(static_cast<long>(d) - 2);
  RationalFunction denom =
      RationalFunction::from_poly(Poly::constant(1) - Poly::monomial(1, d));
  return RationalFunction::constant(rho0) * RationalFunction::h_power(n) *
         base.pow(static_cast<unsigned>(n)) / denom.pow(static_cast<unsigned>(n));
}

/// Scans d = 2..d_max and returns every d for which the rigidity sum is
/// identically zero. On data from a genuine semi-free action with nonempty
/// fixed set the answer is exactly {2}: the divisibility obstruction on the
/// first Chern class.
inline std::vector<int> divisibility_obstruction(const FixedPointProfile& profile, int d_max) {
  if (profile.structure != Structure::AlmostComplex) {
    fail(Errc::WrongStructure, "divisibility_obstruction requires an almost-complex profile");
  }
  require_semifree(profile, "divisibility_obstruction");
  if (profile.points.empty()) {
    fail(Errc::EmptyProfile, "divisibility_obstruction requires nonempty fixed-point data");
  }
  if (d_max < 2) fail(Errc::BadParams, "d_max must be >= 2");
  std::vector<int> admissible;
  for (int d = 2; d <= d_max; ++d) {
    if (is_identically_zero(rigidity_sum(profile, d))) admissible.push_back(d);
  }
  return admissible;
}

/// Exact-arithmetic form of the vanishing-at-infinity claim, per summand:
/// after clearing negative exponents the numerator degree stays below the
/// denominator degree. Strict for d >= 2; for d = 1 positive-weight factors
/// tend to -1 rather than 0, so only boundedness (<=) holds.
struct SummandDegreeCheck {
  int point_index = 0;
  long numerator_degree = 0;
  long denominator_degree = 0;
  bool ok = false;
};

struct LimitCheck {
  bool pass = true;
  std::vector<SummandDegreeCheck> summands;
};

inline LimitCheck limit_at_infinity_check(const FixedPointProfile& profile, int d) {
  if (profile.structure != Structure::AlmostComplex) {
    fail(Errc::WrongStructure, "limit_at_infinity_check requires an almost-complex profile");
  }
  if (d < 1) fail(Errc::BadParams, "divisor must be >= 1");
  LimitCheck result;
  for (std::size_t i = 0; i < profile.points.size(); ++i) {
    detail::SummandShape shape = detail::summand_shape(profile.points[i], d);
    bool ok = d >= 2 ? shape.cleared_numerator_degree < shape.denominator_degree
                     : shape.cleared_numerator_degree <= shape.denominator_degree;
    if (!ok) result.pass = false;
    result.summands.push_back({static_cast<int>(i), shape.cleared_numerator_degree,
                               shape.denominator_degree, ok});
  }
  return result;
}

}  // namespace bottres
