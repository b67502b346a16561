#include "adele/cli.hpp"

int main(int argc, char** argv) { return adele::cli::run(argc, argv); }
