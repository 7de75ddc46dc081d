// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "cubica/selftest.hpp"

int main() {
  bool all = true;
  for (const auto& r : cubica::run_acceptance()) {
    std::printf("%s criterion %d (%s): %s [%.3fs]\n", r.ok ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
