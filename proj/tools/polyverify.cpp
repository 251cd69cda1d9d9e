#include "polyeuler/cli.hpp"

int main(int argc, char** argv) { return polyeuler::cli::polyverify_main(argc, argv); }
