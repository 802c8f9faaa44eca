#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bottres/error.hpp"
#include "bottres/numeric.hpp"
#include "bottres/partition.hpp"
#include "bottres/profile.hpp"
#include "bottres/symfunc.hpp"

namespace bottres {

enum class Flavor { Chern, Pontrjagin };

inline const char* flavor_name(Flavor f) { return f == Flavor::Chern ? "chern" : "pontrjagin"; }

/// The raw Bott residue sum sum_i f(weights_i) / prod_j k_j^(i). No degree
/// restriction: callers that interpret the result as a characteristic number
/// must check deg f <= n themselves. Empty profiles sum to 0.
inline Rat residue_sum(const FixedPointProfile& profile, const SymmetricFunctionSpec& spec,
                       Flavor flavor) {
  Rat total = 0;
  const bool squared = flavor == Flavor::Pontrjagin;
  for (const FixedPoint& p : profile.points) {
    total += make_rat(spec_value_at(p, spec, squared), weight_product(p));
  }
  return total;
}

struct CharacteristicNumber {
  Partition partition;
  Rat value;
  Flavor flavor;
  bool integral;
};

/// c_lambda[M] for an almost-complex profile. Defined for weight(lambda) <= n;
/// the formula is meaningless above the top degree (DegreeTooHigh). Below the
/// top degree a genuine manifold forces the value 0; the computation does not
/// assume that, the audits check it.
inline CharacteristicNumber chern_number(const FixedPointProfile& profile, const Partition& lambda) {
  if (profile.structure != Structure::AlmostComplex) {
    fail(Errc::WrongStructure, "chern_number requires an almost-complex profile");
  }
  if (lambda.weight() > profile.half_dimension) {
    fail(Errc::DegreeTooHigh, "partition weight " + std::to_string(lambda.weight()) +
                                  " exceeds half dimension " +
                                  std::to_string(profile.half_dimension));
  }
  Rat value = residue_sum(profile, SymmetricFunctionSpec::elementary_product(lambda), Flavor::Chern);
  return {lambda, value, Flavor::Chern, is_integral(value)};
}

/// p_lambda[N] for a smooth profile; the sigma-spec of lambda has degree
/// 2*weight(lambda), so weight(lambda) <= n/2 is required at top degree and
/// 2*weight(lambda) <= n overall.
inline CharacteristicNumber pontrjagin_number(const FixedPointProfile& profile,
                                              const Partition& lambda) {
  if (profile.structure != Structure::Smooth) {
    fail(Errc::WrongStructure, "pontrjagin_number requires a smooth profile");
  }
  if (2 * lambda.weight() > profile.half_dimension) {
    fail(Errc::DegreeTooHigh, "sigma degree " + std::to_string(2 * lambda.weight()) +
                                  " exceeds half dimension " +
                                  std::to_string(profile.half_dimension));
  }
  Rat value =
      residue_sum(profile, SymmetricFunctionSpec::elementary_product(lambda), Flavor::Pontrjagin);
  return {lambda, value, Flavor::Pontrjagin, is_integral(value)};
}

/// One Chern number per partition of n, in reverse-lexicographic order.
inline std::vector<CharacteristicNumber> all_chern_numbers(const FixedPointProfile& profile) {
  if (profile.structure != Structure::AlmostComplex) {
    fail(Errc::WrongStructure, "all_chern_numbers requires an almost-complex profile");
  }
  std::vector<CharacteristicNumber> out;
  for (const Partition& lambda : partitions_of(profile.half_dimension)) {
    out.push_back(chern_number(profile, lambda));
  }
  return out;
}

/// Top Pontrjagin numbers exist only for even n; for odd n the list is empty.
inline std::vector<CharacteristicNumber> all_pontrjagin_numbers(const FixedPointProfile& profile) {
  if (profile.structure != Structure::Smooth) {
    fail(Errc::WrongStructure, "all_pontrjagin_numbers requires a smooth profile");
  }
  std::vector<CharacteristicNumber> out;
  if (profile.half_dimension % 2 != 0) return out;
  for (const Partition& lambda : partitions_of(profile.half_dimension / 2)) {
    out.push_back(pontrjagin_number(profile, lambda));
  }
  return out;
}

/// A residue sum that contradicts a theorem: the spec that produced it
/// (nullopt partition = the constant f = 1) and the offending exact value.
struct AuditViolation {
  std::optional<Partition> partition;
  Rat value;

  std::string spec_label() const {
    return partition ? "e(" + partition->str() + ")" : std::string("1");
  }
};

namespace detail {
/// Deficiency specs for the audit: the constant 1 plus every e-product (or
/// sigma-product) of total degree strictly below n.
inline std::vector<SymmetricFunctionSpec> deficiency_specs(const FixedPointProfile& profile) {
  std::vector<SymmetricFunctionSpec> specs;
  specs.push_back(SymmetricFunctionSpec::one());
  const int n = profile.half_dimension;
  const int degree_per_weight = profile.structure == Structure::AlmostComplex ? 1 : 2;
  for (int m = 1; m * degree_per_weight < n; ++m) {
    for (const Partition& lambda : partitions_of(m)) {
      specs.push_back(SymmetricFunctionSpec::elementary_product(lambda));
    }
  }
  return specs;
}
}  // namespace detail

/// Every residue sum of degree < n must vanish on data coming from a genuine
/// manifold. Any nonzero sum is returned with its exact value: a certificate
/// that no manifold realizes the profile.
inline std::vector<AuditViolation> vanishing_audit(const FixedPointProfile& profile) {
  const Flavor flavor =
      profile.structure == Structure::AlmostComplex ? Flavor::Chern : Flavor::Pontrjagin;
  std::vector<AuditViolation> violations;
  for (const SymmetricFunctionSpec& spec : detail::deficiency_specs(profile)) {
    Rat value = residue_sum(profile, spec, flavor);
    if (value != 0) violations.push_back({spec.lambda, value});
  }
  return violations;
}

/// Top-degree characteristic numbers of genuine manifolds are integers; any
/// non-integral exact value is reported.
inline std::vector<AuditViolation> integrality_audit(const FixedPointProfile& profile) {
  std::vector<AuditViolation> violations;
  const auto numbers = profile.structure == Structure::AlmostComplex
                           ? all_chern_numbers(profile)
                           : all_pontrjagin_numbers(profile);
  for (const CharacteristicNumber& cn : numbers) {
    if (!cn.integral) violations.push_back({cn.partition, cn.value});
  }
  return violations;
}

}  // namespace bottres
