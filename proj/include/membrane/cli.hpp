#pragma once

namespace membrane {

// Full command-line surface: subcommands solve, willmore, catalog, verify,
// series. Returns the process exit code: 0 success, 1 failed checks,
// 2 usage or configuration errors.
int cli_main(int argc, const char* const* argv);

}  // namespace membrane
