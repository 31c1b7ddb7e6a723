#pragma once

#include <string>

#include "pipelines.hpp"

namespace mirsym {

// Runs the named module's oracle cross-checks ("quintic", "plane-curves",
// "hurwitz", "eisenstein", "ainfty", "fukaya-torus", or "all"); *all_pass
// reports the verdict.
Report run_selftest(const std::string& module, int threads, bool* all_pass);

}  // namespace mirsym
