#pragma once

#include <string>

namespace mirsym {

// Deterministic machine-readable and human-readable renderings of one run.
struct Report {
    std::string json;
    std::string text;
};

Report run_quintic(int dmax, int order /* -1: dmax + 2 */, int toy_order /* 0: skip */);
Report run_plane_curves(int dmax, int residual_degree /* 0: skip */, bool dump_residual);
Report run_hurwitz(int genus, int dmax, bool bruteforce, bool fit, int threads);
Report run_eisenstein(int k, int order);
Report run_ainfty_check(const std::string& structure_json, int arity, bool* all_pass);
Report run_fukaya(const std::string& slopes, const std::string& offsets, double area_scale,
                  double tol, bool with_associativity);

}  // namespace mirsym
