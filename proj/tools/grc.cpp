#include "grc/cli.hpp"

int main(int argc, char** argv) { return grc::cli::run(argc, argv); }
