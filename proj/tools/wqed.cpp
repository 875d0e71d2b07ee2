#include <vector>
#include <string>

#include "wqed/cli/app.hpp"

int main(int argc, char** argv) {
  return wqed::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
