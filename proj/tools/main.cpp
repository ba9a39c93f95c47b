#include <string>
#include <vector>

#include "sunspin/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sunspin::run_cli(args);
}
