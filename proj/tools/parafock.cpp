#include <string>
#include <vector>

#include "parafock/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return parafock::cli::run(args);
}
