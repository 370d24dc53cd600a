#include "bazlab.h"

#include <cstring>
#include <new>
#include <string>

#include "../core/bazilevic.hpp"
#include "../core/classes.hpp"
#include "../core/coeffs.hpp"
#include "../core/hardy.hpp"
#include "../core/jsonio.hpp"
#include "../core/series.hpp"

using namespace bazlab;

struct bzl_series {
    Series s;
};

struct bzl_bazfn {
    BazFunction f;
};

namespace {

thread_local std::string g_last_error;
thread_local bzl_error_kind g_last_kind = BZL_KIND_NONE;

bzl_error_kind map_kind(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidArgument: return BZL_KIND_INVALID_ARGUMENT;
    case ErrorKind::ParseError: return BZL_KIND_PARSE_ERROR;
    case ErrorKind::ZeroConstantTerm: return BZL_KIND_ZERO_CONSTANT_TERM;
    case ErrorKind::NonUnitConstantTerm: return BZL_KIND_NON_UNIT_CONSTANT_TERM;
    case ErrorKind::NonzeroInnerConstant: return BZL_KIND_NONZERO_INNER_CONSTANT;
    case ErrorKind::RadiusOutOfRange: return BZL_KIND_RADIUS_OUT_OF_RANGE;
    case ErrorKind::InvalidMeasure: return BZL_KIND_INVALID_MEASURE;
    case ErrorKind::InvalidJanowski: return BZL_KIND_INVALID_JANOWSKI;
    case ErrorKind::OmegaNotSchwarz: return BZL_KIND_OMEGA_NOT_SCHWARZ;
    case ErrorKind::BetaUnsupported: return BZL_KIND_BETA_UNSUPPORTED;
    case ErrorKind::SpecInvalid: return BZL_KIND_SPEC_INVALID;
    case ErrorKind::DivisionByVanishing: return BZL_KIND_DIVISION_BY_VANISHING;
    case ErrorKind::AlphaMismatch: return BZL_KIND_ALPHA_MISMATCH;
    case ErrorKind::NormalizationError: return BZL_KIND_NORMALIZATION_ERROR;
    case ErrorKind::LengthMismatch: return BZL_KIND_LENGTH_MISMATCH;
    case ErrorKind::AlphaOutOfRange: return BZL_KIND_ALPHA_OUT_OF_RANGE;
    case ErrorKind::TruncationInsufficient: return BZL_KIND_TRUNCATION_INSUFFICIENT;
    }
    return BZL_KIND_INTERNAL;
}

void clear_error() {
    g_last_error.clear();
    g_last_kind = BZL_KIND_NONE;
}

// Runs body, translating exceptions into status codes + thread-local detail.
template <typename Fn>
bzl_status guarded(Fn&& body) {
    clear_error();
    try {
        return body();
    } catch (const Error& e) {
        g_last_error = e.what();
        g_last_kind = map_kind(e.kind());
        return BZL_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        g_last_kind = BZL_KIND_INTERNAL;
        return BZL_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        g_last_kind = BZL_KIND_INTERNAL;
        return BZL_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bzl_status require(bool ok, const char* what) {
    if (!ok) {
        g_last_error = what;
        g_last_kind = BZL_KIND_INVALID_ARGUMENT;
        return BZL_ERR_INVALID;
    }
    return BZL_OK;
}

bzl_status outcome_to_status(const RunOutcome& outcome, char** out) {
    *out = dup_string(outcome.report);
    switch (outcome.status) {
    case 0: return BZL_OK;
    case 3: return BZL_ERR_THEOREM_VIOLATION;
    case 4: return BZL_FINDING;
    default: return BZL_ERR_INTERNAL;
    }
}

std::vector<double> radii_vec(const double* radii, int32_t n) {
    return radii ? std::vector<double>(radii, radii + n) : std::vector<double>{};
}

} // namespace

extern "C" {

const char* bzl_version(void) { return "bazlab 1.0.0"; }

const char* bzl_last_error(void) { return g_last_error.c_str(); }

bzl_error_kind bzl_last_error_kind(void) { return g_last_kind; }

void bzl_string_free(char* s) { delete[] s; }

/* ---- series ---- */

bzl_status bzl_series_create(const double* reim, int32_t count, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(reim && out && count > 0, "need coefficients and an out pointer"))
            return st;
        std::vector<Complex> c(static_cast<size_t>(count));
        for (int32_t i = 0; i < count; ++i) c[i] = Complex(reim[2 * i], reim[2 * i + 1]);
        *out = new bzl_series{Series(std::move(c))};
        return BZL_OK;
    });
}

bzl_status bzl_series_from_json(const char* json, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(json && out, "need JSON text and an out pointer")) return st;
        *out = new bzl_series{series_from_json(json)};
        return BZL_OK;
    });
}

bzl_status bzl_series_to_json(const bzl_series* s, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(s && out, "need a series handle and an out pointer")) return st;
        *out = dup_string(series_to_json(s->s));
        return BZL_OK;
    });
}

int32_t bzl_series_order(const bzl_series* s) { return s ? s->s.order() : -1; }

bzl_status bzl_series_coeff(const bzl_series* s, int32_t degree, double* re, double* im) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(s && re && im, "need a series handle and out pointers")) return st;
        const Complex c = s->s.coeff(degree);
        *re = c.real();
        *im = c.imag();
        return BZL_OK;
    });
}

bzl_status bzl_series_eval(const bzl_series* s, double re, double im,
                           double* out_re, double* out_im) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(s && out_re && out_im, "need a series handle and out pointers"))
            return st;
        const Complex v = eval(s->s, Complex(re, im));
        *out_re = v.real();
        *out_im = v.imag();
        return BZL_OK;
    });
}

void bzl_series_free(bzl_series* s) { delete s; }

#define BZL_BINARY_OP(name, fn)                                                          \
    bzl_status name(const bzl_series* a, const bzl_series* b, bzl_series** out) {        \
        return guarded([&]() -> bzl_status {                                             \
            if (auto st = require(a && b && out, "need two series and an out pointer"))  \
                return st;                                                               \
            *out = new bzl_series{fn(a->s, b->s)};                                       \
            return BZL_OK;                                                               \
        });                                                                              \
    }

BZL_BINARY_OP(bzl_series_add, add)
BZL_BINARY_OP(bzl_series_mul, mul)
BZL_BINARY_OP(bzl_series_div, div)
BZL_BINARY_OP(bzl_series_compose, compose)

#undef BZL_BINARY_OP

bzl_status bzl_series_deriv(const bzl_series* a, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(a && out, "need a series and an out pointer")) return st;
        *out = new bzl_series{deriv(a->s)};
        return BZL_OK;
    });
}

bzl_status bzl_series_antideriv(const bzl_series* a, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(a && out, "need a series and an out pointer")) return st;
        *out = new bzl_series{antideriv(a->s)};
        return BZL_OK;
    });
}

bzl_status bzl_series_pow_real(const bzl_series* a, double t, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(a && out, "need a series and an out pointer")) return st;
        *out = new bzl_series{pow_real(a->s, t)};
        return BZL_OK;
    });
}

/* ---- classes ---- */

bzl_status bzl_caratheodory(const char* measure_json, int32_t order, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(measure_json && out, "need measure JSON and an out pointer"))
            return st;
        const HerglotzMeasure mu = measure_from_json(parse_json_text(measure_json));
        *out = new bzl_series{caratheodory(mu, order)};
        return BZL_OK;
    });
}

bzl_status bzl_janowski_phi(double A, double B, int32_t order, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(out != nullptr, "need an out pointer")) return st;
        *out = new bzl_series{janowski_phi({A, B}, order)};
        return BZL_OK;
    });
}

bzl_status bzl_starlike_janowski(double A, double B, const char* omega_json,
                                 int32_t order, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(omega_json && out, "need omega JSON and an out pointer"))
            return st;
        const Series omega = omega_from_json(parse_json_text(omega_json), order);
        *out = new bzl_series{starlike_janowski({A, B}, omega, order)};
        return BZL_OK;
    });
}

bzl_status bzl_koebe_type(double theta, int32_t order, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(out != nullptr, "need an out pointer")) return st;
        *out = new bzl_series{koebe_type(theta, order)};
        return BZL_OK;
    });
}

/* ---- constructed members ---- */

bzl_status bzl_bazfn_construct(const char* spec_json, int32_t order_override,
                               bzl_bazfn** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(spec_json && out, "need spec JSON and an out pointer")) return st;
        const BazilevicSpec spec = bazspec_from_json(parse_json_text(spec_json), order_override);
        *out = new bzl_bazfn{construct(spec)};
        return BZL_OK;
    });
}

double bzl_bazfn_alpha(const bzl_bazfn* f) { return f ? f->f.alpha : 0.0; }

bzl_status bzl_bazfn_unit_series(const bzl_bazfn* f, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(f && out, "need a function handle and an out pointer")) return st;
        *out = new bzl_series{f->f.unit};
        return BZL_OK;
    });
}

bzl_status bzl_bazfn_series(const bzl_bazfn* f, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(f && out, "need a function handle and an out pointer")) return st;
        *out = new bzl_series{f->f.f()};
        return BZL_OK;
    });
}

void bzl_bazfn_free(bzl_bazfn* f) { delete f; }

bzl_status bzl_p_operator(const bzl_bazfn* f, double alpha, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(f && out, "need a function handle and an out pointer")) return st;
        *out = new bzl_series{p_operator(f->f, alpha)};
        return BZL_OK;
    });
}

bzl_status bzl_necessary_condition(const bzl_bazfn* f, double alpha, double r,
                                   double theta1, double theta2, int32_t K, double* value) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(f && value, "need a function handle and an out pointer"))
            return st;
        *value = necessary_condition(f->f, alpha, r, theta1, theta2, K);
        return BZL_OK;
    });
}

bzl_status bzl_to_ci(const bzl_bazfn* g, double alpha, bzl_series** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(g && out, "need a function handle and an out pointer")) return st;
        *out = new bzl_series{to_CI(g->f, alpha)};
        return BZL_OK;
    });
}

bzl_status bzl_from_ci(const bzl_series* F, double beta, bzl_bazfn** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(F && out, "need a series handle and an out pointer")) return st;
        *out = new bzl_bazfn{from_CI(F->s, beta)};
        return BZL_OK;
    });
}

/* ---- report runs ---- */

bzl_status bzl_report_construct(const char* spec_json, int32_t order_override, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(spec_json && out, "need spec JSON and an out pointer")) return st;
        return outcome_to_status(run_construct(spec_json, order_override), out);
    });
}

bzl_status bzl_report_coeffs(const char* spec_json, int32_t order_override, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(spec_json && out, "need spec JSON and an out pointer")) return st;
        return outcome_to_status(run_coeffs(spec_json, order_override), out);
    });
}

bzl_status bzl_report_bounds(const char* spec_json, double alpha, int32_t order, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(out != nullptr, "need an out pointer")) return st;
        return outcome_to_status(run_bounds(spec_json ? spec_json : "", alpha, order), out);
    });
}

bzl_status bzl_report_sweep(int32_t which, double alpha, int32_t trials, uint64_t seed,
                            int32_t order, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(out != nullptr, "need an out pointer")) return st;
        return outcome_to_status(run_sweep(which, alpha, trials, seed, order), out);
    });
}

bzl_status bzl_report_means(const char* target_json, double p, const double* radii,
                            int32_t n_radii, int32_t order_override, int32_t K, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(target_json && out && radii && n_radii > 0,
                              "need target JSON, radii and an out pointer"))
            return st;
        const auto rv = radii_vec(radii, n_radii);
        return outcome_to_status(run_means(target_json, p, rv, order_override, K), out);
    });
}

bzl_status bzl_report_necessary_scan(const char* spec_json, const double* radii,
                                     int32_t n_radii, int32_t order_override, int32_t K,
                                     char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(spec_json && out, "need spec JSON and an out pointer")) return st;
        const auto rv = radii_vec(radii, n_radii);
        return outcome_to_status(run_necessary_scan(spec_json, rv, order_override, K), out);
    });
}

bzl_status bzl_report_necessary_single(const char* spec_json, double r, double theta1,
                                       double theta2, int32_t order_override, int32_t K,
                                       char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(spec_json && out, "need spec JSON and an out pointer")) return st;
        return outcome_to_status(
            run_necessary_single(spec_json, r, theta1, theta2, order_override, K), out);
    });
}

bzl_status bzl_report_correspond(const char* spec_json, double alpha,
                                 int32_t order_override, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(spec_json && out, "need spec JSON and an out pointer")) return st;
        return outcome_to_status(run_correspond(spec_json, alpha, order_override), out);
    });
}

bzl_status bzl_report_koebe_witness(double theta, const double* radii, int32_t n_radii,
                                    int32_t order, int32_t K, char** out) {
    return guarded([&]() -> bzl_status {
        if (auto st = require(out && radii && n_radii > 0, "need radii and an out pointer"))
            return st;
        const auto rv = radii_vec(radii, n_radii);
        return outcome_to_status(run_koebe_witness(theta, rv, order, K), out);
    });
}

} // extern "C"
