#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wsh/complex.hpp"
#include "wsh/field.hpp"
#include "wsh/homology.hpp"

namespace wsh {

/// Process exit codes of the `wsh` command.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitInput = 2,
    kExitMismatch = 3,
};

/// Compares `modules` with the Smith-normal-form oracle; reports each
/// disagreement on `err` and returns kExitMismatch, else kExitOk.
int verify_modules(const WeightedComplex& complex, const FieldSpec& field, std::span<const HomologyModule> modules,
                   std::ostream& err);

/// Runs the command line `args` (args[0] is the program name). The report
/// goes to `out` unless --json names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsh
