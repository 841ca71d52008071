#include "mixr/cli.hpp"

int main(int argc, char** argv) { return mixr::cli::run(argc, argv); }
