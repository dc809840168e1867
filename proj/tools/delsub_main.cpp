#include "delsub/cli.hpp"

int main(int argc, char** argv) { return delsub::cli::run(argc, argv); }
