#include <iostream>

#include "gm/harness/cli.hpp"

int main(int argc, char **argv)
{
  return gm::run_cli(argc, argv, std::cout, std::cerr);
}
