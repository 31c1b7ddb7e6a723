// Command-line front end; all computation goes through the C API in
// mirsym.h so the binary exercises exactly the public library surface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mirsym.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

int emit(msym_status st, msym_result* res, bool json) {
    if (st != MSYM_OK) {
        std::cerr << "error: " << msym_last_error() << "\n";
        msym_result_free(res);
        return (st == MSYM_ERROR_INVALID_ARGUMENT || st == MSYM_ERROR_PARSE) ? kExitUsage
                                                                             : kExitComputation;
    }
    std::cout << (json ? msym_result_json(res) : msym_result_text(res));
    msym_result_free(res);
    return kExitOk;
}

int run_module_selftest(const char* module, int threads, bool json) {
    msym_result* res = nullptr;
    int pass = 0;
    msym_status st = msym_selftest(module, threads, &pass, &res);
    int code = emit(st, res, json);
    if (code != kExitOk) return code;
    return pass ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in enumerative mirror symmetry"};
    app.require_subcommand(1);
    bool json = false;
    int threads = 1;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--threads", threads, "worker threads for enumerations")
        ->check(CLI::PositiveNumber);

    auto enable_fallthrough = [](CLI::App* sub) { sub->fallthrough(); return sub; };

    // quintic
    auto* quintic =
        enable_fallthrough(app.add_subcommand("quintic", "quintic threefold curve counts"));
    int q_dmax = 10, q_order = -1, q_toy = 0;
    bool q_selftest = false;
    quintic->add_option("--dmax", q_dmax, "largest degree to report")
        ->check(CLI::Range(1, 40));
    quintic->add_option("--order", q_order, "series truncation order (default dmax + 2)")
        ->check(CLI::Range(-1, 44));
    quintic->add_option("--toy", q_toy, "also run the multiple-cover toy model at this order");
    quintic->add_flag("--selftest", q_selftest, "run the module oracle cross-checks");

    // plane-curves
    auto* plane = enable_fallthrough(
        app.add_subcommand("plane-curves", "rational plane curve counts"));
    int p_dmax = 6, p_residual = 0;
    bool p_dump = false, p_selftest = false;
    plane->add_option("--dmax", p_dmax, "largest degree to report")->check(CLI::Range(1, 14));
    plane->add_option("--residual-degree", p_residual,
                      "verify the associativity residual through this q1-degree");
    plane->add_flag("--dump-residual", p_dump, "include nonzero residual terms in the JSON");
    plane->add_flag("--selftest", p_selftest, "run the module oracle cross-checks");

    // hurwitz
    auto* hurwitz = enable_fallthrough(
        app.add_subcommand("hurwitz", "branched covers of the torus"));
    int h_genus = 2, h_dmax = 8;
    bool h_brute = false, h_fit = false, h_selftest = false;
    hurwitz->add_option("--genus", h_genus, "genus of the covering curves")
        ->check(CLI::Range(2, 6));
    hurwitz->add_option("--dmax", h_dmax, "largest degree to report")->check(CLI::Range(1, 24));
    hurwitz->add_flag("--bruteforce", h_brute, "cross-check against transitive enumeration");
    hurwitz->add_flag("--fit", h_fit, "fit the series as a quasimodular form");
    hurwitz->add_flag("--selftest", h_selftest, "run the module oracle cross-checks");

    // eisenstein
    auto* eis = enable_fallthrough(
        app.add_subcommand("eisenstein", "Eisenstein series q-expansion"));
    int e_k = 2, e_order = 10;
    bool e_selftest = false;
    eis->add_option("--k", e_k, "weight (2, 4 or 6)");
    eis->add_option("--order", e_order, "truncation order")->check(CLI::Range(0, 4000));
    eis->add_flag("--selftest", e_selftest, "run the module oracle cross-checks");

    // ainfty
    auto* ainfty = enable_fallthrough(app.add_subcommand("ainfty", "A-infinity structure checks"));
    bool a_selftest = false;
    ainfty->add_flag("--selftest", a_selftest, "run the module oracle cross-checks");
    auto* check = enable_fallthrough(ainfty->add_subcommand("check", "verify a structure from JSON"));
    std::string a_input;
    int a_arity = 6;
    check->add_option("--input", a_input, "structure JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    check->add_option("--arity", a_arity, "largest identity arity to verify")
        ->check(CLI::Range(1, 8));

    // fukaya-torus
    auto* fukaya = enable_fallthrough(
        app.add_subcommand("fukaya-torus", "flat-torus composition tensors"));
    std::string f_slopes = "1/-1,0/1,1/1,1/0", f_offsets = "0,0,1/2,1/4";
    double f_area = 1.0, f_tol = 1e-12;
    bool f_assoc = false, f_selftest = false;
    fukaya->add_option("--slopes", f_slopes, "comma-separated slope pairs p/q (3 or 4)");
    fukaya->add_option("--offsets", f_offsets, "comma-separated rational offsets");
    fukaya->add_option("--area", f_area, "symplectic area of the torus")
        ->check(CLI::PositiveNumber);
    fukaya->add_option("--tol", f_tol, "per-sum truncation tolerance")
        ->check(CLI::PositiveNumber);
    fukaya->add_flag("--associativity", f_assoc, "report the associativity residual (4 slopes)");
    fukaya->add_flag("--selftest", f_selftest, "run the module oracle cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    msym_result* res = nullptr;
    if (quintic->parsed()) {
        if (q_selftest) return run_module_selftest("quintic", threads, json);
        msym_status st = msym_quintic(q_dmax, q_order, q_toy, &res);
        return emit(st, res, json);
    }
    if (plane->parsed()) {
        if (p_selftest) return run_module_selftest("plane-curves", threads, json);
        msym_status st = msym_plane_curves(p_dmax, p_residual, p_dump ? 1 : 0, &res);
        return emit(st, res, json);
    }
    if (hurwitz->parsed()) {
        if (h_selftest) return run_module_selftest("hurwitz", threads, json);
        msym_status st =
            msym_hurwitz(h_genus, h_dmax, h_brute ? 1 : 0, h_fit ? 1 : 0, threads, &res);
        return emit(st, res, json);
    }
    if (eis->parsed()) {
        if (e_selftest) return run_module_selftest("eisenstein", threads, json);
        msym_status st = msym_eisenstein(e_k, e_order, &res);
        return emit(st, res, json);
    }
    if (ainfty->parsed()) {
        if (a_selftest) return run_module_selftest("ainfty", threads, json);
        if (!check->parsed()) {
            std::cerr << "error: ainfty requires the 'check' subcommand or --selftest\n";
            return kExitUsage;
        }
        std::ifstream in(a_input);
        std::ostringstream buf;
        buf << in.rdbuf();
        int pass = 0;
        msym_status st = msym_ainfty_check(buf.str().c_str(), a_arity, &pass, &res);
        int code = emit(st, res, json);
        if (code != kExitOk) return code;
        return pass ? kExitOk : kExitComputation;
    }
    if (fukaya->parsed()) {
        if (f_selftest) return run_module_selftest("fukaya-torus", threads, json);
        msym_status st = msym_fukaya_torus(f_slopes.c_str(), f_offsets.c_str(), f_area, f_tol,
                                           f_assoc ? 1 : 0, &res);
        return emit(st, res, json);
    }
    return kExitUsage;
}
