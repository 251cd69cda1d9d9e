#include "polyeuler/cli.hpp"

int main(int argc, char** argv) { return polyeuler::cli::polyseq_main(argc, argv); }
