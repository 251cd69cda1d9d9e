#include "polyeuler/cli.hpp"

int main(int argc, char** argv) { return polyeuler::cli::polyaudit_main(argc, argv); }
