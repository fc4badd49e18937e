#include "hschwarz/cli.hpp"

int main(int argc, char** argv) { return hschwarz::cli::run(argc, argv); }
