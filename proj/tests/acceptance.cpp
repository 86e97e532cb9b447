// Acceptance suite: runs the desk-scale verification grid and prints one
// pass/fail line per criterion.  An optional first argument names the CLI
// binary so the external interface is exercised too.  Exits with the number
// of failed criteria.

#include <cstdio>
#include <iostream>

#include "twc/suite.hpp"

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  auto results = twc::run_acceptance(cli);
  std::cout << twc::format_results(results);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  return failed;
}
