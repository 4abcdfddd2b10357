#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <pbwelim/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    pbwelim::CommandResult res = pbwelim::run_command(args);
    std::cout << res.out;
    return res.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
