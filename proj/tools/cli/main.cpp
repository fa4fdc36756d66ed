#include "cli/app.hpp"

int main(int argc, char** argv) { return bornsim::cli::run_cli(argc, argv); }
