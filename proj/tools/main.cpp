#include <string>
#include <vector>

#include "bplab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bplab::cli::run_cli(args);
}
