#pragma once

namespace bornsim::cli {

// Parses argv, dispatches to the subcommand, maps failures onto the exit
// contract (0 ok, 2 configuration, 3 solver, 4 self-check).
int run_cli(int argc, char** argv);

}  // namespace bornsim::cli
