#pragma once

#include <initializer_list>
#include <vector>

#include "bottres/profile.hpp"

namespace bottres::testing {

/// Synthetic profile from raw weight tuples.
inline FixedPointProfile make_profile(Structure structure, int n,
                                      std::initializer_list<std::vector<long long>> points) {
  FixedPointProfile profile{structure, n, {}};
  for (const auto& weights : points) {
    FixedPoint p;
    for (long long w : weights) p.weights.push_back(Int(w));
    profile.points.push_back(std::move(p));
  }
  return profile;
}

inline FixedPointProfile make_ac(int n, std::initializer_list<std::vector<long long>> points) {
  return make_profile(Structure::AlmostComplex, n, points);
}

}  // namespace bottres::testing
