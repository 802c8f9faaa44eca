// Command-line front end: profile I/O, characteristic-number tables and the
// audit/certificate reports.
//
// Exit codes: 0 = consistent, 2 = input or usage error, 3 = the report found
// a mathematical inconsistency (a non-existence certificate for the data).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bottres/bottres.hpp"

namespace {

constexpr int kExitUsage = 2;

bottres::FixedPointProfile load_profile(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) bottres::fail(bottres::Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return bottres::profile_from_string(text);
}

std::vector<bottres::Partition> parse_partitions(const std::vector<std::string>& flags) {
  std::vector<bottres::Partition> out;
  for (const std::string& flag : flags) out.push_back(bottres::Partition::parse(flag));
  return out;
}

int emit(const bottres::Report& report, bool as_json) {
  if (as_json) {
    std::cout << report.render_json().dump(2) << "\n";
  } else {
    std::cout << report.render_text();
  }
  return report.exit_code();
}

std::vector<bottres::Int> parse_exponents(const std::string& csv) {
  std::vector<bottres::Int> out;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) bottres::fail(bottres::Errc::BadParams, "empty exponent");
    out.push_back(bottres::parse_int(token));
  }
  if (out.empty()) bottres::fail(bottres::Errc::BadParams, "no exponents given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Bott-residue localization for circle-action fixed-point data"};
  app.require_subcommand(1);

  std::string profile_path;
  std::vector<std::string> partition_flags;
  bool as_json = false;
  int d_max = 6;

  auto add_profile_arg = [&](CLI::App* cmd) {
    cmd->add_option("profile", profile_path, "profile JSON path, or - for stdin")->required();
    cmd->add_flag("--json", as_json, "emit the machine-readable report");
  };

  CLI::App* chern = app.add_subcommand("chern", "Chern numbers of an almost-complex profile");
  add_profile_arg(chern);
  chern->add_option("--partition", partition_flags, "partition like 2,1 (repeatable; default: all of weight n)");

  CLI::App* pontrjagin = app.add_subcommand("pontrjagin", "Pontrjagin numbers of a smooth profile");
  add_profile_arg(pontrjagin);
  pontrjagin->add_option("--partition", partition_flags, "partition like 1,1 (repeatable)");

  CLI::App* verify = app.add_subcommand("verify", "vanishing and integrality audits");
  add_profile_arg(verify);

  CLI::App* semifree = app.add_subcommand("semifree", "semi-free obstruction audits");
  add_profile_arg(semifree);

  CLI::App* rigidity = app.add_subcommand("rigidity", "first-Chern-class divisibility obstruction");
  add_profile_arg(rigidity);
  rigidity->add_option("--dmax", d_max, "largest divisor to scan (default 6)");

  CLI::App* bound = app.add_subcommand("bound", "fixed-point-count lower bounds");
  add_profile_arg(bound);

  CLI::App* catalog = app.add_subcommand("catalog", "emit a known profile as JSON");
  catalog->require_subcommand(1);
  std::string exponents_csv;
  int product_n = 1;
  CLI::App* catalog_cpn_cmd = catalog->add_subcommand("cpn", "linear action on CP^n");
  catalog_cpn_cmd->add_option("--exponents", exponents_csv, "comma-separated distinct integers a0,..,an")
      ->required();
  CLI::App* catalog_prod_cmd = catalog->add_subcommand("prod-cp1", "diagonal action on (CP^1)^n");
  catalog_prod_cmd->add_option("--n", product_n, "number of CP^1 factors")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (*chern) {
      return emit(bottres::cmd_chern(load_profile(profile_path), parse_partitions(partition_flags)),
                  as_json);
    }
    if (*pontrjagin) {
      return emit(
          bottres::cmd_pontrjagin(load_profile(profile_path), parse_partitions(partition_flags)),
          as_json);
    }
    if (*verify) return emit(bottres::cmd_verify(load_profile(profile_path)), as_json);
    if (*semifree) return emit(bottres::cmd_semifree(load_profile(profile_path)), as_json);
    if (*rigidity) {
      if (d_max < 2) bottres::fail(bottres::Errc::BadParams, "--dmax must be >= 2");
      return emit(bottres::cmd_rigidity(load_profile(profile_path), d_max), as_json);
    }
    if (*bound) return emit(bottres::cmd_bound(load_profile(profile_path)), as_json);
    if (*catalog) {
      bottres::FixedPointProfile profile =
          *catalog_cpn_cmd ? bottres::catalog_cpn(parse_exponents(exponents_csv))
                           : bottres::catalog_product_cp1(product_n);
      std::cout << bottres::profile_to_string(profile);
      return 0;
    }
  } catch (const bottres::Error& e) {
    std::cerr << "error [" << bottres::errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
