#pragma once

namespace atlas::cli {

// argv-style entry point shared by the discord-atlas binary and the tests.
// Returns 0 on success, 1 on usage/validation errors, 2 when a measurement
// optimization fails to converge.
int run(int argc, const char* const* argv);

}  // namespace atlas::cli
