#include "hopfint/cli.hpp"

int main(int argc, char** argv) { return hopfint::cli::run(argc, argv); }
