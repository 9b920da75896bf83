#include <iostream>

#include "omlab/cli/run.hpp"

int main(int argc, char** argv) {
  omlab::cli::RunConfig config;
  if (auto code = omlab::cli::parse_args(argc, argv, config, std::cout, std::cerr)) return *code;
  return omlab::cli::run(config, std::cout, std::cerr);
}
