#pragma once

#include <iosfwd>

namespace meckit {

// Entry point behind the meckit binary. Writes requested artifacts to `out`
// (or to --out), diagnostics to `err`. Returns 0 on success, 1 on data or
// validation errors, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meckit
