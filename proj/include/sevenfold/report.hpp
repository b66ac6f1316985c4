#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sevenfold/rational.hpp"

namespace sevenfold::report {

inline constexpr std::string_view kSchemaVersion = "1.0";

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct CheckResult {
  std::string id;
  std::string suite;
  std::string paper_ref;  // short description of the claim being checked
  Status status = Status::skipped;
  std::string expected;
  std::string actual;
  double duration_ms = 0;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
};

struct Report {
  std::vector<SuiteReport> suites;
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }
};

struct Options {
  std::vector<Rational> lambdas = {Rational(0), Rational(-2), Rational(1), Rational(7)};
  std::vector<std::uint32_t> primes = {101};
  bool heavy = false;
};

/// arithmetic, group, characters, jacobian, lattice, pencil.
const std::vector<std::string>& suite_names();

/// Runs one suite or "all" (every suite in suite_names() order). Throws
/// std::invalid_argument for an unknown suite, an empty λ or prime list,
/// or a prime below 5.
Report run(std::string_view suite, const Options& options = {});

enum class Format { human, json };
/// Throws std::invalid_argument for anything but "human" or "json".
Format parse_format(std::string_view s);

/// Durations are written only when with_durations is set, so two runs on
/// the same input render identically without them.
std::string render(const Report& report, Format format, bool with_durations = true);
/// Writes render(...) to path; "-" means stdout. Throws std::runtime_error
/// on IO failure.
void emit(const Report& report, Format format, const std::string& path, bool with_durations = true);

}  // namespace sevenfold::report
