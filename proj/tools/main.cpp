#include "ltree/cli.hpp"

int main(int argc, char** argv) { return ltree::cli_main(argc, argv); }
