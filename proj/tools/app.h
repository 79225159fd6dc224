#pragma once

namespace volterra::app {

/// Command-line entry point. Exit codes: 0 success, 1 suite or numerical
/// failure, 2 usage or configuration error.
int run_cli(int argc, char** argv);

}  // namespace volterra::app
