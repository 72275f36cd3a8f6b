// One line per acceptance criterion; exit status 1 if any fails.  An optional argument
// runs a single criterion by id.

#include "qmlab/errors.hpp"
#include "qmlab/suite.hpp"

#include <algorithm>
#include <cstdio>

int main(int argc, char** argv) {
  qmlab::SuiteOptions options;
  if (argc > 1) options.only = {argv[1]};
  qmlab::SuiteReport report;
  try {
    report = qmlab::run_suite(options);
  } catch (const qmlab::InputError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  const auto ids = qmlab::suite_item_ids();
  for (const auto& item : report.items) {
    long index = std::find(ids.begin(), ids.end(), item.id) - ids.begin() + 1;
    std::printf("%s criterion %ld %s (%.2fs, limit %.0fs): %s\n", item.pass() ? "PASS" : "FAIL", index,
                item.id.c_str(), item.seconds, item.limit_seconds, item.detail.c_str());
  }
  std::printf("%s: %zu criteria, %zu certificates\n", report.pass() ? "ALL PASS" : "FAILURES", report.items.size(),
              report.certificates.size());
  return report.pass() ? 0 : 1;
}
