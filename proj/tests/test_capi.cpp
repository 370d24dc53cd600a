#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "bazlab.h"

using nlohmann::json;

namespace {

const char* kHalfPlaneSpec = R"({
  "alphas": [1.0],
  "beta": 0,
  "factors": [{"kind": "zero"}],
  "h": {"measure": {"atoms": [{"t": 0.0, "lam": 1.0}]}},
  "N": 16
})";

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    bzl_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and error state") {
    CHECK(std::strlen(bzl_version()) > 0);
    CHECK(bzl_last_error_kind() == BZL_KIND_NONE);
}

TEST_CASE("series handles: create, inspect, serialize, evaluate") {
    const double reim[] = {1, 0, 2, 0, 0, 1}; // 1 + 2z + i z^2
    bzl_series* s = nullptr;
    REQUIRE(bzl_series_create(reim, 3, &s) == BZL_OK);
    CHECK(bzl_series_order(s) == 2);

    double re = 0, im = 0;
    REQUIRE(bzl_series_coeff(s, 2, &re, &im) == BZL_OK);
    CHECK(re == 0.0);
    CHECK(im == 1.0);

    char* text = nullptr;
    REQUIRE(bzl_series_to_json(s, &text) == BZL_OK);
    bzl_series* back = nullptr;
    const std::string json_text = take(text);
    REQUIRE(bzl_series_from_json(json_text.c_str(), &back) == BZL_OK);
    REQUIRE(bzl_series_coeff(back, 1, &re, &im) == BZL_OK);
    CHECK(re == 2.0);

    REQUIRE(bzl_series_eval(s, 0.5, 0.0, &re, &im) == BZL_OK);
    CHECK(re == doctest::Approx(2.0));      // 1 + 1 + 0
    CHECK(im == doctest::Approx(0.25));     // i * 0.25

    bzl_series_free(s);
    bzl_series_free(back);
}

TEST_CASE("series arithmetic and error kinds through the C boundary") {
    const double one_minus[] = {1, 0, -1, 0};
    const double zero_const[] = {0, 0, 1, 0};
    bzl_series *a = nullptr, *b = nullptr, *q = nullptr;
    REQUIRE(bzl_series_create(one_minus, 2, &a) == BZL_OK);
    REQUIRE(bzl_series_create(zero_const, 2, &b) == BZL_OK);

    CHECK(bzl_series_div(a, b, &q) == BZL_ERR_INVALID);
    CHECK(bzl_last_error_kind() == BZL_KIND_ZERO_CONSTANT_TERM);
    CHECK(std::strlen(bzl_last_error()) > 0);

    bzl_series* prod = nullptr;
    REQUIRE(bzl_series_mul(a, b, &prod) == BZL_OK);
    double re = 0, im = 0;
    REQUIRE(bzl_series_coeff(prod, 1, &re, &im) == BZL_OK);
    CHECK(re == 1.0);

    bzl_series* powed = nullptr;
    CHECK(bzl_series_pow_real(b, 0.5, &powed) == BZL_ERR_INVALID);
    CHECK(bzl_last_error_kind() == BZL_KIND_NON_UNIT_CONSTANT_TERM);

    bzl_series_free(a);
    bzl_series_free(b);
    bzl_series_free(prod);
}

TEST_CASE("class constructors through the C API") {
    bzl_series* p = nullptr;
    REQUIRE(bzl_caratheodory(R"({"atoms":[{"t":0.0,"lam":1.0}]})", 8, &p) == BZL_OK);
    double re = 0, im = 0;
    REQUIRE(bzl_series_coeff(p, 3, &re, &im) == BZL_OK);
    CHECK(re == doctest::Approx(2.0));
    bzl_series_free(p);

    CHECK(bzl_caratheodory(R"({"atoms":[{"t":0.0,"lam":0.5}]})", 8, &p) == BZL_ERR_INVALID);
    CHECK(bzl_last_error_kind() == BZL_KIND_INVALID_MEASURE);

    bzl_series* phi = nullptr;
    REQUIRE(bzl_janowski_phi(1.0, 0.0, 8, &phi) == BZL_OK);
    REQUIRE(bzl_series_coeff(phi, 1, &re, &im) == BZL_OK);
    CHECK(re == 1.0);
    bzl_series_free(phi);

    CHECK(bzl_janowski_phi(0.0, 0.5, 8, &phi) == BZL_ERR_INVALID);
    CHECK(bzl_last_error_kind() == BZL_KIND_INVALID_JANOWSKI);

    bzl_series* g = nullptr;
    REQUIRE(bzl_starlike_janowski(1.0, -1.0, R"({"kind":"z"})", 12, &g) == BZL_OK);
    REQUIRE(bzl_series_coeff(g, 3, &re, &im) == BZL_OK);
    CHECK(re == doctest::Approx(4.0).epsilon(1e-9)); // Koebe unit series
    bzl_series_free(g);

    bzl_series* k = nullptr;
    REQUIRE(bzl_koebe_type(0.0, 6, &k) == BZL_OK);
    REQUIRE(bzl_series_coeff(k, 5, &re, &im) == BZL_OK);
    CHECK(re == 5.0);
    bzl_series_free(k);
}

TEST_CASE("member construction and operators through the C API") {
    bzl_bazfn* f = nullptr;
    REQUIRE(bzl_bazfn_construct(kHalfPlaneSpec, 0, &f) == BZL_OK);
    CHECK(bzl_bazfn_alpha(f) == doctest::Approx(1.0));

    bzl_series* fs = nullptr;
    REQUIRE(bzl_bazfn_series(f, &fs) == BZL_OK);
    double re = 0, im = 0;
    REQUIRE(bzl_series_coeff(fs, 4, &re, &im) == BZL_OK);
    CHECK(re == doctest::Approx(0.5).epsilon(1e-10)); // a_4 = 2/4
    bzl_series_free(fs);

    bzl_series* P = nullptr;
    REQUIRE(bzl_p_operator(f, 2.0, &P) == BZL_OK);
    REQUIRE(bzl_series_coeff(P, 0, &re, &im) == BZL_OK);
    CHECK(re == doctest::Approx(2.0));
    bzl_series_free(P);

    double value = 0;
    REQUIRE(bzl_necessary_condition(f, 2.0, 0.9, 0.0, 6.283185307179586, 1024, &value) == BZL_OK);
    CHECK(value == doctest::Approx(2.0 * 6.283185307179586).epsilon(1e-6));

    bzl_bazfn_free(f);
}

TEST_CASE("correspondence round trip through handles") {
    const std::string spec = R"({
      "alphas": [2.0], "beta": 0,
      "factors": [{"kind": "zero"}],
      "h": {"measure": {"atoms": [{"t": 1.0, "lam": 0.5}, {"t": 4.0, "lam": 0.5}]}},
      "N": 24
    })";
    bzl_bazfn* g = nullptr;
    REQUIRE(bzl_bazfn_construct(spec.c_str(), 0, &g) == BZL_OK);

    bzl_series* G = nullptr;
    REQUIRE(bzl_to_ci(g, 2.0, &G) == BZL_OK);
    bzl_bazfn* back = nullptr;
    REQUIRE(bzl_from_ci(G, 0.5, &back) == BZL_OK);

    bzl_series *u1 = nullptr, *u2 = nullptr;
    REQUIRE(bzl_bazfn_unit_series(g, &u1) == BZL_OK);
    REQUIRE(bzl_bazfn_unit_series(back, &u2) == BZL_OK);
    const int32_t shared = std::min(bzl_series_order(u1), bzl_series_order(u2));
    for (int32_t n = 0; n <= shared; ++n) {
        double re1, im1, re2, im2;
        REQUIRE(bzl_series_coeff(u1, n, &re1, &im1) == BZL_OK);
        REQUIRE(bzl_series_coeff(u2, n, &re2, &im2) == BZL_OK);
        CHECK(std::abs(re1 - re2) < 1e-9);
        CHECK(std::abs(im1 - im2) < 1e-9);
    }
    // alpha mismatch surfaces as a typed validation error
    bzl_series* bad = nullptr;
    CHECK(bzl_to_ci(g, 3.0, &bad) == BZL_ERR_INVALID);
    CHECK(bzl_last_error_kind() == BZL_KIND_ALPHA_MISMATCH);

    bzl_series_free(G);
    bzl_series_free(u1);
    bzl_series_free(u2);
    bzl_bazfn_free(g);
    bzl_bazfn_free(back);
}

TEST_CASE("report: construct emits a_n = 2/n") {
    char* out = nullptr;
    REQUIRE(bzl_report_construct(kHalfPlaneSpec, 0, &out) == BZL_OK);
    const json rep = json::parse(take(out));
    CHECK(rep["alpha"].get<double>() == doctest::Approx(1.0));
    const auto& coeffs = rep["coefficients"];
    CHECK(coeffs[2][0].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(coeffs[3][0].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(rep["config"]["command"] == "construct");
}

TEST_CASE("report: extremal bounds reach ratio 1") {
    char* out = nullptr;
    REQUIRE(bzl_report_bounds(nullptr, 2.0, 32, &out) == BZL_OK);
    const json rep = json::parse(take(out));
    CHECK(rep["max_ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("report: sweep is deterministic and honors trials = 0") {
    char *a = nullptr, *b = nullptr;
    REQUIRE(bzl_report_sweep(2, 1.5, 40, 777, 16, &a) == BZL_OK);
    REQUIRE(bzl_report_sweep(2, 1.5, 40, 777, 16, &b) == BZL_OK);
    const std::string ra = take(a), rb = take(b);
    CHECK(ra == rb); // byte-identical

    char* empty = nullptr;
    REQUIRE(bzl_report_sweep(2, 1.5, 0, 1, 16, &empty) == BZL_OK);
    const json rep = json::parse(take(empty));
    CHECK(rep["trials"].get<int>() == 0);
    CHECK(rep["max_ratio"].get<double>() == 0.0);
    CHECK(rep["argmax"].is_null());
    CHECK(rep["counterexamples"].empty());

    char* bad = nullptr;
    CHECK(bzl_report_sweep(1, 1.5, 5, 1, 16, &bad) == BZL_ERR_INVALID);
    CHECK(bzl_last_error_kind() == BZL_KIND_ALPHA_OUT_OF_RANGE);
}

TEST_CASE("report: malformed JSON carries a line/column diagnostic") {
    char* out = nullptr;
    CHECK(bzl_report_construct("{\n  \"alphas\": [1.0,\n", 0, &out) == BZL_ERR_INVALID);
    CHECK(bzl_last_error_kind() == BZL_KIND_PARSE_ERROR);
    const std::string msg = bzl_last_error();
    CHECK(msg.find("line") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
}

TEST_CASE("report: means of the truncated Koebe function") {
    const double radii[] = {0.9, 0.925, 0.95, 0.97, 0.98};
    char* out = nullptr;
    REQUIRE(bzl_report_means(R"({"koebe":{"theta":0.0}})", 0.5, radii, 5, 1024, 4096, &out) ==
            BZL_OK);
    const json rep = json::parse(take(out));
    CHECK(rep["fit"]["model"] == "log-divergent");
    CHECK(rep["rows"].size() == 5);
}

TEST_CASE("report: necessary scan stays above -pi") {
    char* out = nullptr;
    REQUIRE(bzl_report_necessary_scan(R"({
        "alphas": [2.0], "beta": 0, "factors": [{"kind": "zero"}],
        "h": {"measure": {"atoms": [{"t": 0.0, "lam": 1.0}]}}, "N": 32
    })", nullptr, 0, 0, 4096, &out) == BZL_OK);
    const json rep = json::parse(take(out));
    CHECK(rep["exceeds_minus_pi"].get<bool>());
    CHECK(rep["min"].get<double>() > -3.15);
    CHECK(rep["full_circle"].get<double>() == doctest::Approx(4.0 * 3.141592653589793).epsilon(1e-9));
}

TEST_CASE("report: koebe witness") {
    const double radii[] = {0.9, 0.99, 0.999};
    char* out = nullptr;
    REQUIRE(bzl_report_koebe_witness(0.0, radii, 3, 1024, 8192, &out) == BZL_OK);
    const json rep = json::parse(take(out));
    CHECK(rep["divergence_confirmed"].get<bool>());
    for (const auto& row : rep["rows"])
        CHECK(row["ratio"].get<double>() >= 0.98);
}
