#include <iostream>
#include <string>
#include <vector>

#include "fring/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto rep = fring::cli::dispatch(args);
  std::cout << rep.text();
  return rep.exit_code;
}
