#pragma once

#include <string>
#include <vector>

namespace testing {

struct GoldenCase {
  std::string name;
  int expected_exit = 0;
  std::vector<std::string> args;
};

struct GoldenRun {
  int exit = 0;
  std::string out;
  std::string err;
};

std::string golden_dir();
std::vector<GoldenCase> load_manifest();
GoldenRun run_golden(const GoldenCase& c);
std::string expected_path(const GoldenCase& c);

}  // namespace testing
