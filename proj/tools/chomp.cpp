#include "chomp/cli.hpp"

int main(int argc, char** argv) { return chomp::cli::main(argc, argv); }
