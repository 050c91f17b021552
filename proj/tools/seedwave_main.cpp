#include "seedwave/cli.hpp"

int main(int argc, char** argv) { return seedwave::cli::run(argc, argv); }
