// one PASS/FAIL line per acceptance criterion; exit 1 on any failure
#include <iostream>

#include "negtorus/verify.hpp"

int main() {
  negtorus::VerifyOptions opt;
  bool ok = true;
  negtorus::run_acceptance(opt, [&](const negtorus::CheckResult& r) {
    std::cout << negtorus::format_line(r) << std::endl;
    ok &= r.pass;
  });
  return ok ? 0 : 1;
}
