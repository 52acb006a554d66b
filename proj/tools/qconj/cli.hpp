#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qconj::cli {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Invariant suites of every module at n = 2, 3. With inject_fault a
/// deliberately corrupted S-matrix is fed to the braiding suite.
std::vector<SuiteResult> run_selfcheck(bool inject_fault = false);

/// "1,3,2" -> {1, 3, 2}; throws InvalidArgument on anything else.
std::vector<int> parse_int_list(const std::string& text);

/// 4 for n <= 3, 3 otherwise.
int default_cutoff(int n);

/// Exit status: 0 success, 1 a check failed, 2 usage error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qconj::cli
