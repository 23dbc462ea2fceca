#include <vector>

#include "wco/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wco::run_cli(args);
}
