#include "rankfill/cli.hpp"

int main(int argc, char** argv) {
  return rankfill::run_cli(argc, argv);
}
