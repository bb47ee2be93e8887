#include <iostream>

#include "packcover/cli.hpp"

int main() {
  bool ok = true;
  for (const auto& r : packcover::run_criteria(packcover::cli::all_criteria(), packcover::kDefaultSeed)) {
    std::cout << packcover::result_line(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
