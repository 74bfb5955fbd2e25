#include "waldron/cli.hpp"

int main(int argc, char** argv) { return waldron::cli::run(argc, argv); }
