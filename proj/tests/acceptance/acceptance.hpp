#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgn::acceptance {

struct Outcome {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the selected criteria (all when `only` is empty) in order, writing the
// per-run log to `log`. Criterion 8 audits the semi-implicit runs made by
// criteria 1-7 in the same invocation.
std::vector<Outcome> run(std::ostream& log, const std::vector<int>& only = {});

// One "PASS|FAIL [Cn] title: detail" line per outcome; returns the number of failures.
int summarize(const std::vector<Outcome>& outcomes, std::ostream& out);

}  // namespace sgn::acceptance
