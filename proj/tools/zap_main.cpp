#include "zap/cli.hpp"

int main(int argc, char **argv) { return zap::cli_main(argc, argv); }
