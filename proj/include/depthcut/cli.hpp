#pragma once

#include <iosfwd>

namespace depthcut {

/// Entry point of the depthcut tool. Subcommands: validate, gen, cut,
/// verify, bench, render-svg. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace depthcut
