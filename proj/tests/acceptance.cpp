#include <cstdio>
#include <string>

#include "resonax/kernels.hpp"
#include "resonax/verify/acceptance.hpp"

int main() {
  std::printf("kernels: %s\n", std::string(resonax::kernels::active_kernels().name).c_str());
  int failed = 0;
  resonax::acceptance::run_all({}, [&](const resonax::acceptance::CriterionResult& r) {
    std::printf("%s\n", resonax::acceptance::format_line(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
