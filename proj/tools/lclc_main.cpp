#include <iostream>

#include "lclc/cli.hpp"

int main(int argc, char** argv) {
  using namespace lclc::cli;
  try {
    auto config = parse_args(argc, argv, std::cout);
    if (!config) return kExitOk;
    return run(*config, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "lclc: " << e.what() << "\n";
    return kExitUsage;
  }
}
