#ifndef CALABI_CLI_HPP
#define CALABI_CLI_HPP

namespace calabi {

/// Exit codes: 0 success (and all-pass for verify), 2 verification
/// failure, 1 usage or IO error.
int run_cli(int argc, char** argv);

}  // namespace calabi

#endif
