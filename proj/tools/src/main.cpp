#include <iostream>

#include "whitefact/cli.hpp"

int main(int argc, char** argv) {
  return whitefact::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
