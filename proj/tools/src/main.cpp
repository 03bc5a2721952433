#include <iostream>

#include "acyclic_cli/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = acyclic::cli::parse_args(argc, argv);
  const auto result = parsed.config ? acyclic::cli::run(*parsed.config) : parsed.early;
  std::cout << result.out << std::flush;
  std::cerr << result.err << std::flush;
  return result.exit_code;
}
