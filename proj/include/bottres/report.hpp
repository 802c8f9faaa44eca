#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "bottres/certifier.hpp"
#include "bottres/error.hpp"
#include "bottres/localization.hpp"
#include "bottres/numeric.hpp"
#include "bottres/partition.hpp"
#include "bottres/profile.hpp"
#include "bottres/rigidity.hpp"
#include "bottres/semifree.hpp"

namespace bottres {

struct ReportSection {
  std::string name;
  std::vector<std::string> lines;
  nlohmann::ordered_json json;
  std::vector<std::string> violation_ids;
};

/// Aggregated command output: a profile summary, ordered audit sections and
/// a single consistency verdict. Inconsistent exactly when some section
/// carries a violation; violations never abort report assembly.
struct Report {
  Structure structure = Structure::AlmostComplex;
  int half_dimension = 0;
  int point_count = 0;
  std::vector<ReportSection> sections;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  bool consistent() const {
    for (const ReportSection& s : sections) {
      if (!s.violation_ids.empty()) return false;
    }
    return true;
  }

  std::vector<std::string> violations() const {
    std::vector<std::string> ids;
    for (const ReportSection& s : sections) {
      ids.insert(ids.end(), s.violation_ids.begin(), s.violation_ids.end());
    }
    return ids;
  }

  int exit_code() const { return consistent() ? 0 : 3; }

  std::string render_text() const {
    std::string out = "profile: ";
    out += structure_name(structure);
    out += "  n=" + std::to_string(half_dimension);
    out += "  fixed points: " + std::to_string(point_count) + "\n";
    for (const ReportSection& s : sections) {
      out += s.name + "\n";
      for (const std::string& line : s.lines) out += "  " + line + "\n";
    }
    if (consistent()) {
      out += "verdict: consistent\n";
    } else {
      out += "verdict: inconsistent (";
      const auto ids = violations();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ", ";
        out += ids[i];
      }
      out += ")\n";
    }
    return out;
  }

  nlohmann::ordered_json render_json() const {
    nlohmann::ordered_json j;
    j["profile"] = {{"structure", structure_name(structure)},
                    {"half_dimension", half_dimension},
                    {"fixed_points", point_count}};
    for (const auto& [key, value] : extra.items()) j[key] = value;
    nlohmann::ordered_json sections_json = nlohmann::ordered_json::array();
    for (const ReportSection& s : sections) {
      nlohmann::ordered_json js;
      js["name"] = s.name;
      for (const auto& [key, value] : s.json.items()) js[key] = value;
      sections_json.push_back(std::move(js));
    }
    j["sections"] = std::move(sections_json);
    j["verdict"] = consistent() ? "consistent" : "inconsistent";
    j["violations"] = violations();
    return j;
  }
};

namespace detail {

inline Report make_report(const FixedPointProfile& profile) {
  return Report{profile.structure, profile.half_dimension, profile.point_count(), {}, {}};
}

inline std::string violation_partition_key(const AuditViolation& v) {
  return v.partition ? v.partition->str() : std::string("");
}

inline nlohmann::ordered_json violations_json(const std::vector<AuditViolation>& violations) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const AuditViolation& v : violations) {
    arr.push_back({{"partition", violation_partition_key(v)}, {"value", rat_str(v.value)}});
  }
  return arr;
}

inline nlohmann::ordered_json moment_table_json(const MomentTable& table) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json s = nlohmann::ordered_json::array();
  for (const Int& v : table.distinct_values) s.push_back(v.str());
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Rat& v : table.residue_sums) a.push_back(rat_str(v));
  nlohmann::ordered_json m = nlohmann::ordered_json::array();
  for (const Rat& v : table.moments) m.push_back(rat_str(v));
  j["s"] = std::move(s);
  j["A"] = std::move(a);
  j["moments"] = std::move(m);
  return j;
}

/// Shared body of cmd_chern / cmd_pontrjagin: the requested characteristic
/// numbers plus integrality and (for explicitly selected sub-top partitions)
/// deficiency checks.
inline Report characteristic_table_report(const FixedPointProfile& profile, Flavor flavor,
                                          const std::vector<Partition>& selected) {
  validate_profile(profile);
  Report report = make_report(profile);
  std::vector<CharacteristicNumber> entries;
  if (selected.empty()) {
    entries = flavor == Flavor::Chern ? all_chern_numbers(profile) : all_pontrjagin_numbers(profile);
  } else {
    for (const Partition& lambda : selected) {
      entries.push_back(flavor == Flavor::Chern ? chern_number(profile, lambda)
                                                : pontrjagin_number(profile, lambda));
    }
  }
  // A sigma-spec of weight w has degree 2w, so for odd n no partition is
  // top-degree on the smooth path.
  auto is_deficient = [&](const Partition& lambda) {
    const int degree = flavor == Flavor::Chern ? lambda.weight() : 2 * lambda.weight();
    return degree < profile.half_dimension;
  };
  ReportSection section;
  section.name = flavor == Flavor::Chern ? "chern numbers" : "pontrjagin numbers";
  nlohmann::ordered_json entries_json = nlohmann::ordered_json::array();
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const CharacteristicNumber& cn : entries) {
    entries_json.push_back({{"partition", cn.partition.str()},
                            {"value", rat_str(cn.value)},
                            {"integral", cn.integral}});
    section.lines.push_back(cn.partition.str() + " -> " + rat_str(cn.value));
    const bool deficient = is_deficient(cn.partition);
    if (deficient && cn.value != 0) {
      section.violation_ids.push_back("vanishing:" + cn.partition.str());
      violations.push_back({{"partition", cn.partition.str()},
                            {"value", rat_str(cn.value)},
                            {"kind", "deficiency"}});
      section.lines.back() += "  [violation: must vanish below top degree]";
    } else if (!cn.integral) {
      section.violation_ids.push_back("integrality:" + cn.partition.str());
      violations.push_back({{"partition", cn.partition.str()},
                            {"value", rat_str(cn.value)},
                            {"kind", "nonintegral"}});
      section.lines.back() += "  [violation: not an integer]";
    }
  }
  if (entries.empty()) section.lines.push_back("(no top-degree numbers: n is odd)");
  section.json["flavor"] = flavor_name(flavor);
  section.json["entries"] = std::move(entries_json);
  section.json["violations"] = std::move(violations);
  report.sections.push_back(std::move(section));
  return report;
}

}  // namespace detail

inline Report cmd_chern(const FixedPointProfile& profile, const std::vector<Partition>& selected = {}) {
  return detail::characteristic_table_report(profile, Flavor::Chern, selected);
}

inline Report cmd_pontrjagin(const FixedPointProfile& profile,
                             const std::vector<Partition>& selected = {}) {
  return detail::characteristic_table_report(profile, Flavor::Pontrjagin, selected);
}

/// Vanishing + integrality audits; nonzero deficiency sums and non-integral
/// top numbers are non-existence certificates for the profile.
inline Report cmd_verify(const FixedPointProfile& profile) {
  validate_profile(profile);
  Report report = detail::make_report(profile);

  ReportSection vanishing;
  vanishing.name = "vanishing audit (residue sums of degree < n)";
  const auto vanishing_violations = vanishing_audit(profile);
  vanishing.json["flavor"] = flavor_name(
      profile.structure == Structure::AlmostComplex ? Flavor::Chern : Flavor::Pontrjagin);
  vanishing.json["violations"] = detail::violations_json(vanishing_violations);
  if (vanishing_violations.empty()) {
    vanishing.lines.push_back("all deficient-degree sums vanish");
  } else {
    for (const AuditViolation& v : vanishing_violations) {
      vanishing.lines.push_back("violation: " + v.spec_label() + " -> " + rat_str(v.value));
      vanishing.violation_ids.push_back("vanishing:" + v.spec_label());
    }
  }
  report.sections.push_back(std::move(vanishing));

  ReportSection integrality;
  integrality.name = "integrality audit (top-degree characteristic numbers)";
  const auto integrality_violations = integrality_audit(profile);
  integrality.json["violations"] = detail::violations_json(integrality_violations);
  if (integrality_violations.empty()) {
    integrality.lines.push_back("all top-degree numbers are integers");
  } else {
    for (const AuditViolation& v : integrality_violations) {
      integrality.lines.push_back("violation: " + v.spec_label() + " -> " + rat_str(v.value));
      integrality.violation_ids.push_back("integrality:" + v.spec_label());
    }
  }
  report.sections.push_back(std::move(integrality));
  return report;
}

/// The full semi-free audit battery. A non-semi-free profile is a clean
/// outcome (the obstructions do not apply), reported as a section.
inline Report cmd_semifree(const FixedPointProfile& profile) {
  validate_profile(profile);
  Report report = detail::make_report(profile);

  const bool semifree = is_semifree_candidate(profile);
  ReportSection candidate;
  candidate.name = "semi-free candidate";
  candidate.json["semifree"] = semifree;
  candidate.lines.push_back(semifree ? "all weights are +1/-1"
                                     : "not semi-free: some weight differs from +1/-1");
  report.sections.push_back(std::move(candidate));
  if (!semifree) return report;

  const RhoProfile rho = rho_profile(profile);
  const BinomialAuditResult binomial = binomial_audit(rho);
  ReportSection rho_section;
  rho_section.name = "rho profile (points by negative-weight count)";
  nlohmann::ordered_json rho_json = nlohmann::ordered_json::array();
  std::string rho_line = "rho = (";
  for (std::size_t t = 0; t < rho.rho.size(); ++t) {
    rho_json.push_back(rho.rho[t]);
    if (t > 0) rho_line += ", ";
    rho_line += std::to_string(rho.rho[t]);
  }
  rho_line += ")";
  rho_section.lines.push_back(rho_line);
  rho_section.json["rho"] = rho_json;
  report.extra["rho"] = rho_json;
  rho_section.json["binomial_pass"] = binomial.pass;
  if (binomial.pass) {
    rho_section.lines.push_back("binomial audit: rho_t = rho_0 * C(n,t) for all t");
  } else {
    rho_section.lines.push_back("binomial audit: FAIL at t=" + std::to_string(binomial.first_failing_t) +
                                ": " + std::to_string(binomial.actual) + " != " +
                                binomial.expected.str());
    rho_section.violation_ids.push_back("binomial:t=" + std::to_string(binomial.first_failing_t));
    rho_section.json["first_failing_t"] = binomial.first_failing_t;
  }
  report.sections.push_back(std::move(rho_section));

  const ParityCount parity = parity_count(profile);
  const long long cobordism = cobordism_coefficient(profile);
  ReportSection parity_section;
  parity_section.name = "parity and cobordism";
  parity_section.json["parity"] = {parity.even_count, parity.odd_count};
  parity_section.json["cobordism_coefficient"] = cobordism;
  report.extra["parity"] = {parity.even_count, parity.odd_count};
  report.extra["cobordism_coefficient"] = cobordism;
  parity_section.lines.push_back("parity (even, odd) = (" + std::to_string(parity.even_count) +
                                 ", " + std::to_string(parity.odd_count) + ")");
  parity_section.lines.push_back("cobordism coefficient = " + std::to_string(cobordism));
  if (cobordism != 0) {
    parity_section.lines.back() += "  [violation: a bounding manifold needs 0]";
    parity_section.violation_ids.push_back("cobordism");
  }
  report.sections.push_back(std::move(parity_section));

  const PontrjaginVanishingResult pv = pontrjagin_vanishing_audit(profile);
  ReportSection pv_section;
  pv_section.name = "pontrjagin vanishing";
  pv_section.json["flavor"] = "pontrjagin";
  if (pv.trivially_odd) {
    pv_section.lines.push_back("n odd: holds for dimensional reasons");
    pv_section.json["trivially_odd"] = true;
  } else {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const PontrjaginComparison& cmp : pv.comparisons) {
      entries.push_back({{"partition", cmp.lambda.str()},
                         {"value", rat_str(cmp.localization)},
                         {"closed_form", rat_str(cmp.closed_form)}});
      std::string line = cmp.lambda.str() + " -> " + rat_str(cmp.localization) +
                         " (closed form " + rat_str(cmp.closed_form) + ")";
      if (!cmp.agree || !cmp.vanishes) {
        line += "  [violation]";
        pv_section.violation_ids.push_back("pontrjagin:" + cmp.lambda.str());
      }
      pv_section.lines.push_back(std::move(line));
    }
    pv_section.json["entries"] = std::move(entries);
    pv_section.json["pass"] = pv.pass;
  }
  report.sections.push_back(std::move(pv_section));

  const C1Cn1Audit c1 = c1_cn1_audit(profile);
  ReportSection c1_section;
  c1_section.name = "c1 * c(n-1) audit";
  c1_section.json["localization"] = rat_str(c1.localization);
  c1_section.json["closed_form"] = c1.closed_form.str();
  c1_section.json["pass"] = c1.pass;
  c1_section.lines.push_back("localization " + rat_str(c1.localization) + " vs rho_0 * n * 2^n = " +
                             c1.closed_form.str());
  if (!c1.pass) {
    c1_section.lines.back() += "  [violation]";
    c1_section.violation_ids.push_back("c1cn1");
  }
  report.sections.push_back(std::move(c1_section));
  return report;
}

/// Scans divisors 2..d_max; genuine semi-free data admits exactly d = 2.
/// Every rejected d ships the nonzero rational function as its certificate.
inline Report cmd_rigidity(const FixedPointProfile& profile, int d_max) {
  validate_profile(profile);
  Report report = detail::make_report(profile);
  const std::vector<int> admissible = divisibility_obstruction(profile, d_max);

  ReportSection scan;
  scan.name = "rigidity scan (d = 2.." + std::to_string(d_max) + ")";
  scan.json["d_max"] = d_max;
  scan.json["admissible"] = admissible;
  nlohmann::ordered_json rejected = nlohmann::ordered_json::array();
  std::string admissible_line = "admissible divisors: {";
  for (std::size_t i = 0; i < admissible.size(); ++i) {
    if (i > 0) admissible_line += ", ";
    admissible_line += std::to_string(admissible[i]);
  }
  admissible_line += "}";
  scan.lines.push_back(std::move(admissible_line));
  for (int d = 2; d <= d_max; ++d) {
    RigiditySum sum = rigidity_sum(profile, d);
    if (is_identically_zero(sum)) continue;
    rejected.push_back({{"d", d}, {"certificate", sum.total().to_json()}});
    scan.lines.push_back("d=" + std::to_string(d) + " rejected: " + sum.total().str());
  }
  scan.json["rejected"] = std::move(rejected);
  if (admissible != std::vector<int>{2}) {
    scan.violation_ids.push_back("rigidity:admissible");
    scan.lines.push_back("[violation: genuine semi-free data admits exactly {2}]");
  }
  report.sections.push_back(std::move(scan));

  ReportSection limits;
  limits.name = "vanishing at infinity (per-summand degrees)";
  bool all_pass = true;
  for (int d = 2; d <= d_max; ++d) {
    if (!limit_at_infinity_check(profile, d).pass) {
      all_pass = false;
      limits.violation_ids.push_back("limit:d=" + std::to_string(d));
    }
  }
  limits.json["pass"] = all_pass;
  limits.lines.push_back(all_pass ? "numerator degree < denominator degree for every summand"
                                  : "degree bound violated");
  report.sections.push_back(std::move(limits));
  return report;
}

/// Emits one lower-bound certificate per divisor-compatible partition and
/// flags profiles whose own point count contradicts the certified bound.
inline Report cmd_bound(const FixedPointProfile& profile) {
  validate_profile(profile);
  Report report = detail::make_report(profile);
  const int degree_per_weight = profile.structure == Structure::AlmostComplex ? 1 : 2;

  ReportSection section;
  section.name = "fixed-point lower bounds";
  nlohmann::ordered_json certificates = nlohmann::ordered_json::array();
  int best_bound = 0;
  for (int m = 1; m * degree_per_weight <= profile.half_dimension; ++m) {
    if (profile.half_dimension % (m * degree_per_weight) != 0) continue;
    for (const Partition& lambda : partitions_of(m)) {
      BoundCertificate cert = certify_lower_bound(profile, lambda);
      nlohmann::ordered_json jc;
      jc["partition"] = cert.lambda.str();
      jc["witness"] = rat_str(cert.witness);
      if (cert.has_bound) {
        jc["bound"] = cert.bound;
      } else {
        jc["bound"] = nullptr;
      }
      jc["moment_table"] = detail::moment_table_json(cert.table);
      certificates.push_back(std::move(jc));
      if (cert.has_bound) {
        best_bound = std::max(best_bound, cert.bound);
        section.lines.push_back("r >= " + std::to_string(cert.bound) + " via lambda=(" +
                                cert.lambda.str() + "), witness " + rat_str(cert.witness));
        if (cert.bound > profile.point_count()) {
          section.lines.back() += "  [violation: profile has only " +
                                  std::to_string(profile.point_count()) + " points]";
          section.violation_ids.push_back("bound:" + cert.lambda.str());
        }
      } else {
        section.lines.push_back("no bound from lambda=(" + cert.lambda.str() + ") (witness 0)");
      }
    }
  }
  if (certificates.empty()) section.lines.push_back("no divisor-compatible partitions");
  if (best_bound == 0) section.lines.push_back("no bound");
  section.json["certificates"] = std::move(certificates);
  if (best_bound > 0) {
    section.json["best_bound"] = best_bound;
  } else {
    section.json["best_bound"] = nullptr;
  }
  report.sections.push_back(std::move(section));
  return report;
}

}  // namespace bottres
