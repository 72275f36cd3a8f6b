#pragma once

// The reproduction suite: one self-checking item per acceptance property, each with a
// runtime budget.  Shared by the CLI `reproduce` command and the acceptance test.

#include "qmlab/certificate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmlab {

struct SuiteItem {
  std::string id;
  std::string title;
  bool checks_pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool pass() const { return checks_pass && seconds < limit_seconds; }
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  /// Item ids to run; empty runs everything.
  std::vector<std::string> only;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  /// Every certificate emitted by the items, in order.
  std::vector<Json> certificates;

  bool pass() const;
  Json to_json(std::uint64_t seed) const;
};

/// Item ids in run order.
std::vector<std::string> suite_item_ids();

/// Throws InputError for an unknown id in options.only.
SuiteReport run_suite(const SuiteOptions& options);

/// The separation data for alpha = [s1^2, s2^2]: the mixed upper family on (B3, P3) for
/// n <= n_max and the ordinary lower certificate on P3.  Returned in emission order.
std::vector<Json> separation_certificates(long long n_max);

/// Applies one named corruption to a copy of `certificate`; returns the step the verifier
/// must report.
struct FaultInjection {
  std::string name;
  Json certificate;
  std::string expected_step;
};
std::vector<FaultInjection> fault_injections(const Json& certificate);

}  // namespace qmlab
