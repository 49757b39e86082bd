#include "tlex/cli.hpp"

int main(int argc, char** argv) { return tlex::cli::run_main(argc, argv); }
