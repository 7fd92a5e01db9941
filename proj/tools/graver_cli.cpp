#include "graver/cli.hpp"

int main(int argc, char** argv) { return graver::cli_main(argc, argv); }
