#include "cli.hpp"

int main(int argc, char** argv) { return fortcalc::cli::run_cli(argc, argv); }
