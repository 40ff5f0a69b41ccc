#include "bench/bench.hpp"

int main(int argc, char** argv) { return bench::cli_main(argc, argv); }
