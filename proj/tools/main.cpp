// bazlab command-line front end. Talks to the shared library exclusively
// through the C API in bazlab.h; formatting and file I/O live here.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bazlab.h"

namespace {

using nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

std::vector<double> parse_radii(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::runtime_error("empty radii list");
    return out;
}

int status_to_exit(bzl_status st) {
    switch (st) {
    case BZL_OK: return 0;
    case BZL_ERR_INVALID: return 2;
    case BZL_ERR_THEOREM_VIOLATION: return 3;
    case BZL_FINDING: return 4;
    default: return 1;
    }
}

std::string config_comment(const ordered_json& rep) {
    if (!rep.contains("config")) return {};
    return "# config " + rep["config"].dump() + "\n";
}

// CSV renderings for the report shapes that define one.
std::string to_csv(const std::string& command, const std::string& report_json) {
    const ordered_json rep = ordered_json::parse(report_json);
    std::ostringstream csv;
    csv << config_comment(rep);
    if (command == "construct") {
        csv << "n,re,im\n";
        const auto& coeffs = rep["coefficients"];
        for (size_t n = 0; n < coeffs.size(); ++n)
            csv << n << "," << fmt_double(coeffs[n][0].get<double>()) << ","
                << fmt_double(coeffs[n][1].get<double>()) << "\n";
    } else if (command == "coeffs") {
        csv << "# recurrence_residual " << fmt_double(rep["recurrence_residual"].get<double>())
            << "\n";
        csv << "n,a_re,a_im,A_re,A_im\n";
        const auto& a = rep["f_coefficients"];
        const auto& A = rep["psi_coefficients"];
        const size_t rows = std::min(a.size(), A.size());
        for (size_t n = 0; n < rows; ++n)
            csv << n << "," << fmt_double(a[n][0].get<double>()) << ","
                << fmt_double(a[n][1].get<double>()) << "," << fmt_double(A[n][0].get<double>())
                << "," << fmt_double(A[n][1].get<double>()) << "\n";
    } else if (command == "bounds") {
        csv << "n,abs_An,bound,ratio\n";
        for (const auto& r : rep["records"])
            csv << r["n"].get<int>() << "," << fmt_double(r["abs_An"].get<double>()) << ","
                << fmt_double(r["bound"].get<double>()) << ","
                << fmt_double(r["ratio"].get<double>()) << "\n";
    } else if (command == "means") {
        const std::string model = rep["fit"]["model"].get<std::string>();
        const double residual = rep["fit"]["rel_residual"].get<double>();
        csv << "r,M_p,model,residual,truncation_error\n";
        for (const auto& row : rep["rows"])
            csv << fmt_double(row["r"].get<double>()) << ","
                << fmt_double(row["M_p"].get<double>()) << "," << model << ","
                << fmt_double(residual) << ","
                << fmt_double(row["truncation_error"].get<double>()) << "\n";
    } else {
        throw std::runtime_error("no CSV rendering for '" + command + "' reports");
    }
    return csv.str();
}

void emit_plot_data(const std::string& out_path, const std::string& report_json) {
    if (out_path.empty()) return;
    const ordered_json rep = ordered_json::parse(report_json);
    std::ofstream rplot(out_path + ".plot-r.dat");
    std::ofstream lplot(out_path + ".plot-log.dat");
    for (const auto& row : rep["rows"]) {
        const double r = row["r"].get<double>();
        const double m = row["M_p"].get<double>();
        rplot << fmt_double(r) << " " << fmt_double(m) << "\n";
        lplot << fmt_double(std::log(1.0 / (1.0 - r))) << " " << fmt_double(m) << "\n";
    }
}

struct Options {
    std::string spec_path;
    int N = 0; // 0 = take the spec's N / command default
    std::uint64_t seed = 0;
    bool seed_given = false;
    int K = 4096;
    std::string out;
    std::string format = "json";
    double alpha = 0.0;
    std::string p = "2";
    std::string radii;
    int trials = 0;
    int which = 0;
    std::optional<double> theta1, theta2, r;
};

int finish(bzl_status st, const std::string& command, char* report, const Options& opt) {
    std::string text = report ? report : "";
    bzl_string_free(report);
    if (st == BZL_ERR_INVALID || st == BZL_ERR_INTERNAL) {
        std::cerr << "bazlab " << command << ": " << bzl_last_error() << "\n";
        return status_to_exit(st);
    }
    if (opt.format == "csv") text = to_csv(command, text);
    write_output(opt.out, text);
    if (command == "means") emit_plot_data(opt.out, text);
    if (st == BZL_ERR_THEOREM_VIOLATION)
        std::cerr << "bazlab " << command << ": theorem-invariant violation (see report)\n";
    if (st == BZL_FINDING)
        std::cerr << "bazlab " << command << ": conjecture counterexample recorded (see report)\n";
    return status_to_exit(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bazlab: constructions and desk-scale checks for Bazilevic-type "
                 "function classes"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--spec", opt.spec_path, "path to a JSON spec file");
    app.add_option("--N", opt.N, "truncation order override (>= 8)");
    auto* seed_opt = app.add_option("--seed", opt.seed, "master seed for randomized runs");
    app.add_option("--K", opt.K, "quadrature points (>= 256 where quadrature is used)");
    app.add_option("--out", opt.out, "output path (default stdout)");
    app.add_option("--format", opt.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--alpha", opt.alpha, "exponent for bounds/sweep/correspond");
    app.add_option("--p", opt.p, "integral-means exponent (number or 'inf')");
    app.add_option("--radii", opt.radii, "comma-separated radius list in (0,1)");
    app.add_option("--trials", opt.trials, "sweep trial count");
    app.add_option("--which", opt.which, "conjecture selector: 1 or 2");
    double th1 = 0, th2 = 0, rr = 0;
    auto* th1_opt = app.add_option("--theta1", th1, "arc start angle");
    auto* th2_opt = app.add_option("--theta2", th2, "arc end angle");
    auto* r_opt = app.add_option("--r", rr, "single radius");

    auto* c_construct = app.add_subcommand("construct", "build a member and emit its coefficients");
    auto* c_coeffs = app.add_subcommand("coeffs", "member + psi coefficients and the recurrence residual");
    auto* c_bounds = app.add_subcommand("bounds", "per-degree sharp-bound report");
    auto* c_sweep = app.add_subcommand("sweep", "randomized conjecture sweep");
    auto* c_means = app.add_subcommand("means", "integral-means profile with growth fit");
    auto* c_necessary = app.add_subcommand("necessary", "arc-integral scan of Re P[alpha,f]");
    auto* c_correspond = app.add_subcommand("correspond", "round trip through the close-to-convex image");

    CLI11_PARSE(app, argc, argv);
    opt.seed_given = seed_opt->count() > 0;
    if (th1_opt->count()) opt.theta1 = th1;
    if (th2_opt->count()) opt.theta2 = th2;
    if (r_opt->count()) opt.r = rr;

    try {
        if (opt.N != 0 && opt.N < 8) {
            std::cerr << "bazlab: --N must be at least 8\n";
            return 2;
        }

        const bool needs_quadrature = c_means->parsed() || c_necessary->parsed();
        if (needs_quadrature && opt.K < 256) {
            std::cerr << "bazlab: quadrature commands need --K >= 256\n";
            return 2;
        }

        std::string spec_text;
        if (!opt.spec_path.empty()) spec_text = read_file(opt.spec_path);

        char* report = nullptr;
        if (c_construct->parsed()) {
            if (spec_text.empty()) throw std::runtime_error("construct needs --spec");
            const bzl_status st = bzl_report_construct(spec_text.c_str(), opt.N, &report);
            return finish(st, "construct", report, opt);
        }
        if (c_coeffs->parsed()) {
            if (spec_text.empty()) throw std::runtime_error("coeffs needs --spec");
            const bzl_status st = bzl_report_coeffs(spec_text.c_str(), opt.N, &report);
            return finish(st, "coeffs", report, opt);
        }
        if (c_bounds->parsed()) {
            if (spec_text.empty() && !(opt.alpha > 0.0))
                throw std::runtime_error("bounds needs --spec or --alpha (extremal mode)");
            const int order = opt.N > 0 ? opt.N : 64;
            const bzl_status st = bzl_report_bounds(
                spec_text.empty() ? nullptr : spec_text.c_str(), opt.alpha, order, &report);
            return finish(st, "bounds", report, opt);
        }
        if (c_sweep->parsed()) {
            if (opt.which != 1 && opt.which != 2)
                throw std::runtime_error("sweep needs --which 1 or 2");
            if (!opt.seed_given) throw std::runtime_error("sweep needs --seed");
            if (!(opt.alpha > 0.0)) throw std::runtime_error("sweep needs --alpha > 0");
            const int order = opt.N > 0 ? opt.N : 16;
            const bzl_status st =
                bzl_report_sweep(opt.which, opt.alpha, opt.trials, opt.seed, order, &report);
            return finish(st, "sweep", report, opt);
        }
        if (c_means->parsed()) {
            if (spec_text.empty()) throw std::runtime_error("means needs --spec (target JSON)");
            if (opt.radii.empty()) throw std::runtime_error("means needs --radii");
            const std::vector<double> radii = parse_radii(opt.radii);
            const double p = opt.p == "inf" ? std::numeric_limits<double>::infinity()
                                            : std::stod(opt.p);
            const bzl_status st =
                bzl_report_means(spec_text.c_str(), p, radii.data(),
                                 static_cast<int32_t>(radii.size()), opt.N, opt.K, &report);
            return finish(st, "means", report, opt);
        }
        if (c_necessary->parsed()) {
            if (spec_text.empty()) throw std::runtime_error("necessary needs --spec");
            bzl_status st;
            if (opt.theta1 && opt.theta2) {
                if (!opt.r) throw std::runtime_error("single-arc mode needs --r");
                st = bzl_report_necessary_single(spec_text.c_str(), *opt.r, *opt.theta1,
                                                 *opt.theta2, opt.N, opt.K, &report);
            } else {
                std::vector<double> radii;
                if (!opt.radii.empty()) radii = parse_radii(opt.radii);
                st = bzl_report_necessary_scan(spec_text.c_str(),
                                               radii.empty() ? nullptr : radii.data(),
                                               static_cast<int32_t>(radii.size()), opt.N, opt.K,
                                               &report);
            }
            return finish(st, "necessary", report, opt);
        }
        if (c_correspond->parsed()) {
            if (spec_text.empty()) throw std::runtime_error("correspond needs --spec");
            const bzl_status st =
                bzl_report_correspond(spec_text.c_str(), opt.alpha, opt.N, &report);
            return finish(st, "correspond", report, opt);
        }
        std::cerr << "bazlab: no command given\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "bazlab: " << e.what() << "\n";
        return 2;
    }
}
