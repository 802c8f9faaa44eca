#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bottres/error.hpp"
#include "bottres/localization.hpp"
#include "bottres/numeric.hpp"
#include "bottres/partition.hpp"
#include "bottres/profile.hpp"
#include "bottres/symfunc.hpp"

namespace bottres {

/// The grouped residue data behind the fixed-point lower bound: the distinct
/// values s_1 < ... < s_l taken by c_lambda(i) (sigma_lambda(i) on the smooth
/// path), the residue sums A_t over each group, and the power moments
/// sum_t s_t^i A_t for i = 0..r-1.
struct MomentTable {
  Partition lambda;
  Flavor flavor;
  std::vector<Int> distinct_values;
  std::vector<Rat> residue_sums;
  std::vector<Rat> moments;

  /// sum_t s_t^i * A_t, for any i (not just the stored range).
  Rat moment(int i) const {
    Rat total = 0;
    for (std::size_t t = 0; t < distinct_values.size(); ++t) {
      total += Rat(int_pow(distinct_values[t], static_cast<unsigned>(i))) * residue_sums[t];
    }
    return total;
  }
};

inline MomentTable moment_table(const FixedPointProfile& profile, const Partition& lambda) {
  const Flavor flavor =
      profile.structure == Structure::AlmostComplex ? Flavor::Chern : Flavor::Pontrjagin;
  if (lambda.weight() > profile.half_dimension) {
    fail(Errc::PartTooLarge, "partition weight exceeds the number of weights per point");
  }
  std::map<Int, Rat> groups;
  for (const FixedPoint& p : profile.points) {
    Int value = flavor == Flavor::Chern ? c_lambda_at_point(p, lambda) : sigma_at_point(p, lambda);
    groups[value] += make_rat(Int(1), weight_product(p));
  }
  MomentTable table{lambda, flavor, {}, {}, {}};
  for (const auto& [value, residue] : groups) {
    table.distinct_values.push_back(value);
    table.residue_sums.push_back(residue);
  }
  const int r = profile.point_count();
  for (int i = 0; i < r; ++i) table.moments.push_back(table.moment(i));
  return table;
}

struct MomentCheck {
  bool pass = true;
  int first_failing_index = -1;
  Rat failing_value;
};

/// Checks the degree-deficiency consequence behind the Vandermonde argument:
/// the moment of f_i has degree m*i, so every i < n must give 0.
inline MomentCheck vanishing_moments_check(const MomentTable& table, int m, int n) {
  (void)m;  // kept for the call-site context; only i < n matters
  for (int i = 0; i < n; ++i) {
    Rat value = table.moment(i);
    if (value != 0) return {false, i, value};
  }
  return {true, -1, Rat(0)};
}

/// Solves the l x l leading Vandermonde system sum_t s_t^i A_t = target_i,
/// i = 0..l-1, exactly. Distinct nodes make the system nonsingular, so a
/// singular pivot is a programming error, not a branch.
inline std::vector<Rat> solve_vandermonde(const std::vector<Int>& distinct_values,
                                          const std::vector<Rat>& target_moments) {
  const std::size_t l = distinct_values.size();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      if (distinct_values[i] == distinct_values[j]) {
        fail(Errc::BadParams, "solve_vandermonde requires pairwise distinct values");
      }
    }
  }
  if (target_moments.size() < l) {
    fail(Errc::BadParams, "solve_vandermonde needs at least as many moments as values");
  }
  // Exact Gaussian elimination on [V | b], V[i][t] = s_t^i.
  std::vector<std::vector<Rat>> a(l, std::vector<Rat>(l + 1));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t t = 0; t < l; ++t) {
      a[i][t] = Rat(int_pow(distinct_values[t], static_cast<unsigned>(i)));
    }
    a[i][l] = target_moments[i];
  }
  for (std::size_t col = 0; col < l; ++col) {
    std::size_t pivot = col;
    while (pivot < l && a[pivot][col] == 0) ++pivot;
    if (pivot == l) fail(Errc::BadParams, "Vandermonde system unexpectedly singular");
    std::swap(a[col], a[pivot]);
    const Rat inv = a[col][col];
    for (std::size_t j = col; j <= l; ++j) a[col][j] /= inv;
    for (std::size_t row = 0; row < l; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rat factor = a[row][col];
      for (std::size_t j = col; j <= l; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  std::vector<Rat> solution(l);
  for (std::size_t t = 0; t < l; ++t) solution[t] = a[t][l];
  return solution;
}

/// The fixed-point count certificate: if (c_lambda)^n [M] (resp.
/// (p_lambda)^n [N]) is nonzero, any circle action must have at least n+1
/// fixed points. The moment table ships with the certificate so the
/// Vandermonde argument can be replayed by hand.
struct BoundCertificate {
  Partition lambda;
  Rat witness;
  int bound = 0;       // r >= bound; 0 when no bound follows
  bool has_bound = false;
  MomentTable table;
};

inline BoundCertificate certify_lower_bound(const FixedPointProfile& profile,
                                            const Partition& lambda) {
  const int m = lambda.weight();
  // The sigma-spec doubles the degree, so the smooth path pairs a partition
  // of weight m with half dimension 2mn.
  const int degree_per_weight = profile.structure == Structure::AlmostComplex ? 1 : 2;
  if (profile.half_dimension % (m * degree_per_weight) != 0) {
    fail(Errc::NonDivisibleDimension,
         "half_dimension " + std::to_string(profile.half_dimension) + " is not a multiple of " +
             std::to_string(m * degree_per_weight));
  }
  const int n = profile.half_dimension / (m * degree_per_weight);
  const Flavor flavor =
      profile.structure == Structure::AlmostComplex ? Flavor::Chern : Flavor::Pontrjagin;
  Rat witness = residue_sum(profile, SymmetricFunctionSpec::power_of(lambda, n), flavor);
  BoundCertificate cert{lambda, witness, 0, false, moment_table(profile, lambda)};
  if (witness != 0) {
    cert.bound = n + 1;
    cert.has_bound = true;
  }
  return cert;
}

}  // namespace bottres
