#include "kronspan/cli.hpp"

int main(int argc, char **argv) { return kronspan::run_cli(argc, argv); }
