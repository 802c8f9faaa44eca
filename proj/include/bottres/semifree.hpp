#pragma once

#include <string>
#include <vector>

#include "bottres/error.hpp"
#include "bottres/localization.hpp"
#include "bottres/numeric.hpp"
#include "bottres/partition.hpp"
#include "bottres/profile.hpp"

namespace bottres {

/// Semi-free actions are free away from the fixed set, which forces every
/// isotropy weight to be +1 or -1.
inline bool is_semifree_candidate(const FixedPointProfile& profile) {
  for (const FixedPoint& p : profile.points) {
    for (const Int& w : p.weights) {
      if (w != 1 && w != -1) return false;
    }
  }
  return true;
}

inline void require_semifree(const FixedPointProfile& profile, const char* op) {
  if (!is_semifree_candidate(profile)) {
    fail(Errc::NotSemifree, std::string(op) + " requires all weights +1/-1");
  }
}

/// rho_t = number of fixed points with exactly t negative weights,
/// t = 0..n. For a genuine semi-free action rho_t = rho_0 * C(n,t).
struct RhoProfile {
  int n = 0;
  std::vector<long long> rho;
};

inline RhoProfile rho_profile(const FixedPointProfile& profile) {
  require_semifree(profile, "rho_profile");
  RhoProfile result{profile.half_dimension,
                    std::vector<long long>(static_cast<std::size_t>(profile.half_dimension) + 1, 0)};
  for (const FixedPoint& p : profile.points) {
    std::size_t negatives = 0;
    for (const Int& w : p.weights) {
      if (w < 0) ++negatives;
    }
    ++result.rho[negatives];
  }
  return result;
}

struct BinomialAuditResult {
  bool pass = true;
  int first_failing_t = -1;
  long long actual = 0;
  Int expected;
};

inline BinomialAuditResult binomial_audit(const RhoProfile& rho) {
  for (std::size_t t = 0; t < rho.rho.size(); ++t) {
    Int expected = Int(rho.rho[0]) * binomial(rho.n, static_cast<long>(t));
    if (Int(rho.rho[t]) != expected) {
      return {false, static_cast<int>(t), rho.rho[t], expected};
    }
  }
  return {true, -1, 0, Int(0)};
}

/// Counts fixed points with an even (resp. odd) number of -1 weights. The
/// constant-1 residue sum of a smooth profile equals even - odd, so genuine
/// data forces the two counts equal.
struct ParityCount {
  long long even_count = 0;
  long long odd_count = 0;
};

inline ParityCount parity_count(const FixedPointProfile& profile) {
  require_semifree(profile, "parity_count");
  ParityCount counts;
  for (const FixedPoint& p : profile.points) {
    if (weight_product_sign(p) > 0) {
      ++counts.even_count;
    } else {
      ++counts.odd_count;
    }
  }
  return counts;
}

/// The coefficient of [CP^n] in the localized cobordism class: the signed
/// fixed-point count sum_i sign(prod_j k_j^(i)). Zero exactly when the
/// manifold bounds rationally.
inline long long cobordism_coefficient(const FixedPointProfile& profile) {
  require_semifree(profile, "cobordism_coefficient");
  long long total = 0;
  for (const FixedPoint& p : profile.points) total += weight_product_sign(p);
  return total;
}

/// One compared Pontrjagin number: the localization value against the
/// closed form prod_t C(2q, lambda_t) * (even - odd).
struct PontrjaginComparison {
  Partition lambda;
  Rat localization;
  Rat closed_form;
  bool agree = false;
  bool vanishes = false;
};

struct PontrjaginVanishingResult {
  bool trivially_odd = false;  // odd n: no top Pontrjagin numbers exist
  bool pass = true;
  std::vector<PontrjaginComparison> comparisons;
};

/// Audits the semi-free Pontrjagin vanishing: for n = 2q every top number
/// p_lambda must equal prod_t C(2q, lambda_t) * (even - odd) and be zero.
/// Both sides are computed independently (residue sum vs. combinatorics).
inline PontrjaginVanishingResult pontrjagin_vanishing_audit(FixedPointProfile profile) {
  require_semifree(profile, "pontrjagin_vanishing_audit");
  profile.structure = Structure::Smooth;
  PontrjaginVanishingResult result;
  const int n = profile.half_dimension;
  if (n % 2 != 0) {
    result.trivially_odd = true;
    return result;
  }
  const int q = n / 2;
  const ParityCount parity = parity_count(profile);
  const Int imbalance = Int(parity.even_count) - Int(parity.odd_count);
  for (const Partition& lambda : partitions_of(q)) {
    Rat localization = pontrjagin_number(profile, lambda).value;
    Int closed = imbalance;
    for (int part : lambda.parts()) closed *= binomial(n, part);
    PontrjaginComparison cmp{lambda, localization, Rat(closed), localization == Rat(closed),
                             localization == 0};
    if (!cmp.agree || !cmp.vanishes) result.pass = false;
    result.comparisons.push_back(std::move(cmp));
  }
  return result;
}

/// Two-sided check of c_1 c_{n-1} [M] = rho_0 * n * 2^n: the left side by
/// residue sum, the right side from the rho-profile. For n = 1 the residue
/// side degenerates to c_1 alone.
struct C1Cn1Audit {
  Rat localization;
  Int closed_form;
  bool pass = false;
};

inline C1Cn1Audit c1_cn1_audit(const FixedPointProfile& profile) {
  if (profile.structure != Structure::AlmostComplex) {
    fail(Errc::WrongStructure, "c1_cn1_audit requires an almost-complex profile");
  }
  require_semifree(profile, "c1_cn1_audit");
  const int n = profile.half_dimension;
  Partition lambda = n >= 2 ? Partition{n - 1, 1} : Partition{1};
  Rat lhs = chern_number(profile, lambda).value;
  RhoProfile rho = rho_profile(profile);
  Int rhs = Int(rho.rho[0]) * n * int_pow(Int(2), static_cast<unsigned>(n));
  return {lhs, rhs, lhs == Rat(rhs)};
}

}  // namespace bottres
