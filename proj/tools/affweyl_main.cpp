#include <string>
#include <vector>

#include "affweyl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return affweyl::run_cli(args);
}
