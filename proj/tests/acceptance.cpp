// Runs the ten acceptance criteria and prints one line per criterion.
#include "qmf/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  bool all = true;
  for (int n = 1; n <= qmf::acceptance::kCriteria; ++n) {
    const auto r = qmf::acceptance::run_criterion(n);
    std::cout << qmf::acceptance::summary_line(r) << std::endl;
    if (verbose) {
      for (const auto& f : r.failures) std::cout << "      fail: " << f << "\n";
      for (const auto& s : r.notes) std::cout << "      note: " << s << "\n";
    }
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
