#include "resist/cli.hpp"

int main(int argc, char** argv) { return resist::cli::main(argc, argv); }
