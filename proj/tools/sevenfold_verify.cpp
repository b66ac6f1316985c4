// Command-line front end for the verification suites.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sevenfold/report.hpp"

using namespace sevenfold;

namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the PSL2(F19)-invariant cubic sevenfold"};
  std::string suite = "all", lambdas, primes, format = "human", out = "-";
  bool heavy = false;
  bool no_durations = false;
  app.add_option("--suite", suite, "arithmetic, group, characters, jacobian, lattice, pencil or all")
      ->check(CLI::IsMember({"arithmetic", "group", "characters", "jacobian", "lattice", "pencil", "all"}));
  app.add_option("--lambda", lambdas, "comma list of pencil parameters as n or n/d (default 0,-2,1,7)");
  app.add_option("--prime", primes, "comma list of primes for smoothness certificates (default 101)");
  app.add_flag("--heavy", heavy, "also run full certification, the projector and mod-p smoothness");
  app.add_flag("--no-durations", no_durations, "omit timings so repeated runs render identically");
  app.add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--out", out, "output path, - for stdout");
  app.set_config("--config", "", "key = value file with the same option names");
  CLI11_PARSE(app, argc, argv);

  report::Options options;
  try {
    if (!lambdas.empty()) {
      options.lambdas.clear();
      for (const auto& s : split(lambdas)) options.lambdas.push_back(parse_rational(s));
    }
    if (!primes.empty()) {
      options.primes.clear();
      for (const auto& s : split(primes)) options.primes.push_back(static_cast<std::uint32_t>(std::stoul(s)));
    }
    options.heavy = heavy;
    const auto result = report::run(suite, options);
    report::emit(result, report::parse_format(format), out, !no_durations);
    return result.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
