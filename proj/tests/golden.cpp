#include "golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mflow/harness/cli.hpp"

namespace testing {

std::string golden_dir() { return MFLOW_GOLDEN_DIR; }

std::vector<GoldenCase> load_manifest() {
  std::ifstream in(golden_dir() + "/manifest.txt");
  if (!in) throw std::runtime_error("golden manifest missing");
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    GoldenCase c;
    words >> c.name >> c.expected_exit;
    for (std::string w; words >> w;) {
      if (w.size() > 5 && w.ends_with(".inst")) w = golden_dir() + "/instances/" + w;
      c.args.push_back(w);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

GoldenRun run_golden(const GoldenCase& c) {
  std::ostringstream out, err;
  GoldenRun r;
  r.exit = mflow::harness::run_cli(c.args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string expected_path(const GoldenCase& c) { return golden_dir() + "/expected/" + c.name + ".out"; }

}  // namespace testing
