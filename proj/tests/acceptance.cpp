#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "acceptance.hpp"

int main() {
  int cap = connmod::kDefaultContractionCap;
  if (const char *env = std::getenv("CONNMOD_CAP_P"))
    cap = std::atoi(env);
  int failed = 0;
  for (const auto &r : connmod::run_acceptance(cap)) {
    std::printf("criterion %2d %s: %s (%.2fs) %s\n", r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    failed += !r.passed;
  }
  std::string cmd = std::string(CONNMOD_CLI_PATH) + " selftest > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  bool ok = st != -1 && WIFEXITED(st) && WEXITSTATUS(st) == 0;
  std::printf("criterion 13 %s: selftest exits 0 (exit %d)\n", ok ? "PASS" : "FAIL",
              st != -1 && WIFEXITED(st) ? WEXITSTATUS(st) : -1);
  failed += !ok;
  std::printf("%d of 13 criteria failed\n", failed);
  return failed ? 1 : 0;
}
