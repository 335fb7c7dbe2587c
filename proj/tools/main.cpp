#include "regset/cli.hpp"

int main(int argc, char** argv) { return regset::cli_main(argc, argv); }
