#include <iostream>
#include <string>
#include <vector>

#include "lcy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  lcy::cli::CommandResult res = lcy::cli::run(std::move(args));
  if (res.payload.is_object() && res.payload.contains("help"))
    std::cout << res.payload["help"].get<std::string>() << std::endl;
  else
    std::cout << res.payload.dump(2) << std::endl;
  return res.exit_code;
}
