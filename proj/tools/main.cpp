#include <string>
#include <vector>

#include "sosinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sosinv::run_cli(args);
}
