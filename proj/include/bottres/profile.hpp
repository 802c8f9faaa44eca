#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "bottres/error.hpp"
#include "bottres/numeric.hpp"

namespace bottres {

enum class Structure { AlmostComplex, Smooth };

inline const char* structure_name(Structure s) {
  return s == Structure::AlmostComplex ? "almost-complex" : "smooth";
}

/// One isolated fixed point: the integer weights of the isotropy
/// representation on the tangent space. Weights are nonzero; their order
/// never matters downstream.
struct FixedPoint {
  std::string label;  // empty = unlabeled
  std::vector<Int> weights;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

/// The full fixed-point data of a circle action: structure kind, the half
/// dimension n (real dimension 2n) and one weight tuple per fixed point.
/// An empty point list is legal (action without fixed points).
struct FixedPointProfile {
  Structure structure = Structure::AlmostComplex;
  int half_dimension = 0;
  std::vector<FixedPoint> points;

  int point_count() const { return static_cast<int>(points.size()); }

  friend bool operator==(const FixedPointProfile&, const FixedPointProfile&) = default;
};

/// Checks the profile invariants: n >= 1, every point carries exactly n
/// weights, every weight nonzero. Returns the profile unchanged.
inline const FixedPointProfile& validate_profile(const FixedPointProfile& profile) {
  if (profile.half_dimension < 1) fail(Errc::BadDimension, "half_dimension must be >= 1");
  for (std::size_t i = 0; i < profile.points.size(); ++i) {
    const FixedPoint& p = profile.points[i];
    if (static_cast<int>(p.weights.size()) != profile.half_dimension) {
      fail(Errc::ArityMismatch, "point " + std::to_string(i) + " has " +
                                    std::to_string(p.weights.size()) + " weights, expected " +
                                    std::to_string(profile.half_dimension));
    }
    for (const Int& w : p.weights) {
      if (w == 0) fail(Errc::ZeroWeight, "point " + std::to_string(i) + " has a zero weight");
    }
  }
  return profile;
}

inline Int weight_product(const FixedPoint& p) {
  Int prod = 1;
  for (const Int& w : p.weights) prod *= w;
  return prod;
}

inline int weight_product_sign(const FixedPoint& p) {
  int sign = 1;
  for (const Int& w : p.weights) {
    if (w < 0) sign = -sign;
  }
  return sign;
}

/// Rewrites each point's weights with every entry positive except possibly
/// the first, keeping sign(prod k_j) fixed. Smooth weights are defined only
/// up to an even number of sign changes, so this picks the class
/// representative. Idempotent.
inline FixedPointProfile canonicalize_smooth(FixedPointProfile profile) {
  if (profile.structure != Structure::Smooth) {
    fail(Errc::WrongStructure, "canonicalize_smooth requires a smooth profile");
  }
  for (FixedPoint& p : profile.points) {
    int sign = weight_product_sign(p);
    for (Int& w : p.weights) w = abs(w);
    if (sign < 0 && !p.weights.empty()) p.weights.front() = -p.weights.front();
  }
  return profile;
}

/// Forgets the almost-complex structure; the rotation numbers coincide with
/// the complex weights under the orientation induced by J.
inline FixedPointProfile as_smooth(FixedPointProfile profile) {
  if (profile.structure != Structure::AlmostComplex) {
    fail(Errc::WrongStructure, "as_smooth requires an almost-complex profile");
  }
  profile.structure = Structure::Smooth;
  return profile;
}

/// Linear circle action on CP^n with pairwise distinct exponents a_0..a_n:
/// n+1 isolated fixed points (the coordinate lines), point i carrying the
/// weights a_j - a_i for j != i.
inline FixedPointProfile catalog_cpn(const std::vector<Int>& exponents) {
  if (exponents.size() < 2) fail(Errc::BadParams, "catalog_cpn needs at least two exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (std::size_t j = i + 1; j < exponents.size(); ++j) {
      if (exponents[i] == exponents[j]) {
        fail(Errc::DuplicateExponent, "exponents must be pairwise distinct (fixed set not isolated)");
      }
    }
  }
  const int n = static_cast<int>(exponents.size()) - 1;
  FixedPointProfile profile{Structure::AlmostComplex, n, {}};
  profile.points.reserve(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    FixedPoint p;
    p.label = "P" + std::to_string(i);
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      if (j != i) p.weights.push_back(exponents[j] - exponents[i]);
    }
    profile.points.push_back(std::move(p));
  }
  return profile;
}

/// (CP^1)^n with the diagonal action: 2^n fixed points, one per sign vector
/// in {+1,-1}^n, whose weights are that sign vector.
inline FixedPointProfile catalog_product_cp1(int n) {
  if (n < 1) fail(Errc::BadDimension, "catalog_product_cp1 requires n >= 1");
  if (n > 30) fail(Errc::BadParams, "catalog_product_cp1: n too large");
  FixedPointProfile profile{Structure::AlmostComplex, n, {}};
  profile.points.reserve(std::size_t(1) << n);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    FixedPoint p;
    for (int j = 0; j < n; ++j) {
      bool negative = (mask >> (n - 1 - j)) & 1ul;
      p.label += negative ? '-' : '+';
      p.weights.push_back(negative ? -1 : 1);
    }
    profile.points.push_back(std::move(p));
  }
  return profile;
}

// --- profile JSON schema ---------------------------------------------------
// { "structure": "almost-complex"|"smooth", "half_dimension": <int>,
//   "fixed_points": [ { "label": <string, optional>,
//                       "weights": [<nonzero int>, ...] }, ... ] }
// Keys are emitted in exactly this order so output round-trips byte-exactly.

inline nlohmann::ordered_json profile_to_json(const FixedPointProfile& profile) {
  nlohmann::ordered_json j;
  j["structure"] = structure_name(profile.structure);
  j["half_dimension"] = profile.half_dimension;
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const FixedPoint& p : profile.points) {
    nlohmann::ordered_json jp;
    if (!p.label.empty()) jp["label"] = p.label;
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (const Int& w : p.weights) weights.push_back(to_int64(w, "weight"));
    jp["weights"] = std::move(weights);
    points.push_back(std::move(jp));
  }
  j["fixed_points"] = std::move(points);
  return j;
}

inline FixedPointProfile profile_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "profile must be a JSON object");
  FixedPointProfile profile;
  if (!j.contains("structure") || !j["structure"].is_string()) {
    fail(Errc::ParseError, "missing or invalid 'structure'");
  }
  const std::string s = j["structure"].get<std::string>();
  if (s == "almost-complex") {
    profile.structure = Structure::AlmostComplex;
  } else if (s == "smooth") {
    profile.structure = Structure::Smooth;
  } else {
    fail(Errc::ParseError, "unknown structure '" + s + "'");
  }
  if (!j.contains("half_dimension") || !j["half_dimension"].is_number_integer()) {
    fail(Errc::ParseError, "missing or invalid 'half_dimension'");
  }
  profile.half_dimension = j["half_dimension"].get<int>();
  if (!j.contains("fixed_points") || !j["fixed_points"].is_array()) {
    fail(Errc::ParseError, "missing or invalid 'fixed_points'");
  }
  for (const auto& jp : j["fixed_points"]) {
    if (!jp.is_object()) fail(Errc::ParseError, "fixed point must be a JSON object");
    FixedPoint p;
    if (jp.contains("label")) {
      if (!jp["label"].is_string()) fail(Errc::ParseError, "point label must be a string");
      p.label = jp["label"].get<std::string>();
    }
    if (!jp.contains("weights") || !jp["weights"].is_array()) {
      fail(Errc::ParseError, "missing or invalid 'weights'");
    }
    for (const auto& jw : jp["weights"]) {
      if (!jw.is_number_integer()) fail(Errc::ParseError, "weights must be integers");
      p.weights.push_back(Int(jw.get<long long>()));
    }
    profile.points.push_back(std::move(p));
  }
  validate_profile(profile);
  return profile;
}

inline std::string profile_to_string(const FixedPointProfile& profile) {
  return profile_to_json(profile).dump(2) + "\n";
}

inline FixedPointProfile profile_from_string(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "invalid JSON");
  return profile_from_json(j);
}

}  // namespace bottres
