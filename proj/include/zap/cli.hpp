#pragma once

namespace zap {

/// Entry point of the command line tool, linked into the library so tests
/// can drive it in process. Exit codes: solve 10 satisfiable / 20
/// unsatisfiable, check 0 agreement / 1 mismatch, 2 on usage, parse, or
/// runtime errors, 0 otherwise.
int cli_main(int argc, const char *const *argv);

}  // namespace zap
