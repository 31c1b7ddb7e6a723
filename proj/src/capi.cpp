#include "mirsym.h"

#include <new>
#include <string>

#include "errors.hpp"
#include "pipelines.hpp"
#include "selftest.hpp"

struct msym_result {
    std::string json;
    std::string text;
};

namespace {

thread_local std::string g_last_error;

msym_status status_of(mirsym::ErrorKind kind) {
    switch (kind) {
        case mirsym::ErrorKind::InvalidArgument: return MSYM_ERROR_INVALID_ARGUMENT;
        case mirsym::ErrorKind::Computation: return MSYM_ERROR_COMPUTATION;
        case mirsym::ErrorKind::Parse: return MSYM_ERROR_PARSE;
        case mirsym::ErrorKind::Internal: return MSYM_ERROR_INTERNAL;
    }
    return MSYM_ERROR_INTERNAL;
}

template <typename F>
msym_status wrap(msym_result** out, F&& f) {
    if (out == nullptr) {
        g_last_error = "output pointer is null";
        return MSYM_ERROR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        mirsym::Report rep = f();
        *out = new msym_result{std::move(rep.json), std::move(rep.text)};
        return MSYM_OK;
    } catch (const mirsym::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return MSYM_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MSYM_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MSYM_ERROR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* msym_version(void) { return "mirsym 1.0.0"; }

const char* msym_last_error(void) { return g_last_error.c_str(); }

const char* msym_result_json(const msym_result* r) { return r ? r->json.c_str() : ""; }

const char* msym_result_text(const msym_result* r) { return r ? r->text.c_str() : ""; }

void msym_result_free(msym_result* r) { delete r; }

msym_status msym_quintic(int dmax, int order, int toy_order, msym_result** out) {
    return wrap(out, [&] { return mirsym::run_quintic(dmax, order, toy_order); });
}

msym_status msym_plane_curves(int dmax, int residual_degree, int dump_residual,
                              msym_result** out) {
    return wrap(out, [&] {
        return mirsym::run_plane_curves(dmax, residual_degree, dump_residual != 0);
    });
}

msym_status msym_hurwitz(int genus, int dmax, int bruteforce, int fit, int threads,
                         msym_result** out) {
    return wrap(out, [&] {
        return mirsym::run_hurwitz(genus, dmax, bruteforce != 0, fit != 0, threads);
    });
}

msym_status msym_eisenstein(int k, int order, msym_result** out) {
    return wrap(out, [&] { return mirsym::run_eisenstein(k, order); });
}

msym_status msym_ainfty_check(const char* structure_json, int arity, int* all_pass,
                              msym_result** out) {
    return wrap(out, [&] {
        if (structure_json == nullptr)
            throw mirsym::InvalidArgument("structure JSON is null");
        bool pass = false;
        mirsym::Report rep = mirsym::run_ainfty_check(structure_json, arity, &pass);
        if (all_pass) *all_pass = pass ? 1 : 0;
        return rep;
    });
}

msym_status msym_fukaya_torus(const char* slopes, const char* offsets, double area_scale,
                              double tol, int with_associativity, msym_result** out) {
    return wrap(out, [&] {
        if (slopes == nullptr || offsets == nullptr)
            throw mirsym::InvalidArgument("slopes/offsets are null");
        return mirsym::run_fukaya(slopes, offsets, area_scale, tol, with_associativity != 0);
    });
}

msym_status msym_selftest(const char* module, int threads, int* all_pass, msym_result** out) {
    return wrap(out, [&] {
        if (module == nullptr) throw mirsym::InvalidArgument("module is null");
        bool pass = false;
        mirsym::Report rep = mirsym::run_selftest(module, threads, &pass);
        if (all_pass) *all_pass = pass ? 1 : 0;
        return rep;
    });
}

}  // extern "C"
