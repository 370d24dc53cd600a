#include "jsonio.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace bazlab {

namespace {

std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double require_number(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw Error(ErrorKind::SpecInvalid, std::string("missing numeric field '") + key + "'");
    return j[key].get<double>();
}

Json fit_to_json(const GrowthFit& fit) {
    Json out;
    out["model"] = growth_model_name(fit.model);
    out["intercept"] = fit.intercept;
    out["slope"] = fit.slope;
    out["power_exponent"] = fit.power_exponent;
    out["rel_residual"] = fit.rel_residual;
    out["const_residual"] = fit.const_residual;
    return out;
}

constexpr double kTheoremTol = 1e-6;

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                               std::to_string(col) + ": " + e.what());
    }
}

Json series_to_array(const Series& s) {
    Json arr = Json::array();
    for (const Complex& c : s.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

Series series_from_array(const Json& arr) {
    if (!arr.is_array() || arr.empty())
        throw Error(ErrorKind::SpecInvalid, "series must be a nonempty array of [re, im] pairs");
    std::vector<Complex> c;
    c.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw Error(ErrorKind::SpecInvalid, "series entries must be [re, im] pairs");
        c.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return Series(std::move(c));
}

HerglotzMeasure measure_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
        throw Error(ErrorKind::SpecInvalid, "measure needs an 'atoms' array");
    std::vector<HerglotzAtom> atoms;
    for (const auto& a : j["atoms"])
        atoms.push_back({require_number(a, "t"), require_number(a, "lam")});
    return HerglotzMeasure(std::move(atoms));
}

Json measure_to_json(std::span<const HerglotzAtom> atoms) {
    Json arr = Json::array();
    for (const HerglotzAtom& a : atoms) {
        Json e;
        e["t"] = a.angle;
        e["lam"] = a.weight;
        arr.push_back(e);
    }
    Json out;
    out["atoms"] = arr;
    return out;
}

JanowskiParams janowski_from_json(const Json& j) {
    JanowskiParams jp{require_number(j, "A"), require_number(j, "B")};
    jp.validate();
    return jp;
}

Series omega_from_json(const Json& j, int order) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error(ErrorKind::SpecInvalid, "omega spec needs a 'kind' string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "zero") return Series(order); // omega = 0, i.e. the factor g = z
    if (kind == "z") return omega_identity(order);
    if (kind == "power") return omega_power(static_cast<int>(require_number(j, "k")), order);
    if (kind == "blaschke") {
        if (!j.contains("c") || !j["c"].is_array() || j["c"].size() != 2)
            throw Error(ErrorKind::SpecInvalid, "blaschke omega needs c = [re, im]");
        const Complex c(j["c"][0].get<double>(), j["c"][1].get<double>());
        const double s = j.contains("scale") ? require_number(j, "scale") : 1.0;
        return omega_blaschke(c, s, order);
    }
    if (kind == "series") {
        if (!j.contains("coeffs"))
            throw Error(ErrorKind::SpecInvalid, "series omega needs 'coeffs'");
        Series w = series_from_array(j["coeffs"]);
        if (w.order() < order)
            throw Error(ErrorKind::SpecInvalid, "series omega shorter than the working order");
        return truncated(w, order);
    }
    throw Error(ErrorKind::SpecInvalid, "unknown omega kind '" + kind + "'");
}

BazilevicSpec bazspec_from_json(const Json& j, int order_override) {
    if (!j.is_object())
        throw Error(ErrorKind::SpecInvalid, "construction spec must be a JSON object");
    BazilevicSpec spec;
    spec.order = order_override > 0 ? order_override
                                    : (j.contains("N") ? static_cast<int>(require_number(j, "N"))
                                                       : kDefaultOrder);
    if (spec.order < 1) throw Error(ErrorKind::SpecInvalid, "order must be at least 1");

    if (!j.contains("alphas") || !j["alphas"].is_array() || j["alphas"].empty())
        throw Error(ErrorKind::SpecInvalid, "spec needs a nonempty 'alphas' array");
    for (const auto& a : j["alphas"]) {
        if (!a.is_number()) throw Error(ErrorKind::SpecInvalid, "alphas must be numbers");
        spec.alphas.push_back(a.get<double>());
    }
    spec.beta = j.contains("beta") ? require_number(j, "beta") : 0.0;

    if (!j.contains("factors") || !j["factors"].is_array())
        throw Error(ErrorKind::SpecInvalid, "spec needs a 'factors' array");
    if (j["factors"].size() != spec.alphas.size())
        throw Error(ErrorKind::SpecInvalid, "one factor per alpha required");
    for (const auto& fj : j["factors"]) {
        if (fj.is_object() && fj.contains("unit")) {
            Series u = series_from_array(fj["unit"]);
            if (u.order() < spec.order)
                throw Error(ErrorKind::SpecInvalid, "explicit factor shorter than the order");
            spec.starlike_units.push_back(truncated(u, spec.order));
        } else {
            JanowskiParams jp{1.0, -1.0};
            if (fj.is_object() && fj.contains("A")) jp.A = require_number(fj, "A");
            if (fj.is_object() && fj.contains("B")) jp.B = require_number(fj, "B");
            spec.starlike_units.push_back(
                starlike_janowski(jp, omega_from_json(fj, spec.order), spec.order));
        }
    }

    if (!j.contains("h")) throw Error(ErrorKind::SpecInvalid, "spec needs an 'h' entry");
    const Json& hj = j["h"];
    if (hj.is_string() && hj.get<std::string>() == "one") {
        spec.h = Series::constant(1.0, spec.order);
    } else if (hj.is_object() && hj.contains("measure")) {
        spec.h = caratheodory(measure_from_json(hj["measure"]), spec.order);
    } else if (hj.is_object() && hj.contains("janowski")) {
        spec.h = janowski_phi(janowski_from_json(hj["janowski"]), spec.order);
    } else if (hj.is_object() && hj.contains("series")) {
        Series hs = series_from_array(hj["series"]);
        if (hs.order() < spec.order)
            throw Error(ErrorKind::SpecInvalid, "explicit h shorter than the order");
        spec.h = truncated(hs, spec.order);
    } else {
        throw Error(ErrorKind::SpecInvalid,
                    "h must be \"one\" or carry 'measure', 'janowski' or 'series'");
    }
    spec.validate();
    return spec;
}

namespace {

Json base_config(const char* command, int order) {
    Json cfg;
    cfg["command"] = command;
    cfg["N"] = order;
    return cfg;
}

} // namespace

RunOutcome run_construct(const std::string& spec_text, int order_override) {
    const Json spec_json = parse_json_text(spec_text);
    const BazilevicSpec spec = bazspec_from_json(spec_json, order_override);
    const BazFunction f = construct(spec);

    Json rep;
    rep["config"] = base_config("construct", spec.order);
    rep["config"]["spec"] = spec_json;
    rep["alpha"] = f.alpha;
    rep["coefficients"] = series_to_array(f.f());
    return {0, rep.dump(2)};
}

RunOutcome run_coeffs(const std::string& spec_text, int order_override) {
    const Json spec_json = parse_json_text(spec_text);
    const BazilevicSpec spec = bazspec_from_json(spec_json, order_override);
    const BazFunction f = construct(spec);
    const PsiSeries psi = psi_from_f(f);
    const double residual = recurrence_check(psi, integrand_unit(spec));

    Json rep;
    rep["config"] = base_config("coeffs", spec.order);
    rep["config"]["spec"] = spec_json;
    rep["alpha"] = f.alpha;
    rep["f_coefficients"] = series_to_array(f.f());
    rep["psi_coefficients"] = series_to_array(psi.a);
    rep["recurrence_residual"] = residual;
    return {residual > kTheoremTol ? 3 : 0, rep.dump(2)};
}

RunOutcome run_bounds(const std::string& spec_text, double alpha, int order) {
    PsiSeries psi{Series(0), 0.0};
    Json cfg = base_config("bounds", order);
    if (spec_text.empty()) {
        psi = extremal_G(alpha, order);
        cfg["extremal"] = true;
        cfg["alpha"] = alpha;
    } else {
        const Json spec_json = parse_json_text(spec_text);
        const BazilevicSpec spec = bazspec_from_json(spec_json, order);
        cfg["N"] = spec.order;
        cfg["spec"] = spec_json;
        psi = psi_from_f(construct(spec));
    }
    const BoundReport br = bound_check(psi);

    Json rep;
    rep["config"] = cfg;
    rep["alpha"] = psi.alpha;
    rep["max_ratio"] = br.max_ratio;
    rep["witness_degree"] = br.witness_degree;
    Json records = Json::array();
    for (const BoundRecord& r : br.records) {
        Json e;
        e["n"] = r.n;
        e["abs_An"] = r.abs_A;
        e["bound"] = r.bound;
        e["ratio"] = r.ratio;
        records.push_back(e);
    }
    rep["records"] = records;
    return {br.max_ratio > 1.0 + kTheoremTol ? 3 : 0, rep.dump(2)};
}

RunOutcome run_sweep(int which, double alpha, int trials, uint64_t seed, int order) {
    const SweepReport sw = conjecture_sweep(which, alpha, trials, seed, order);
    Json rep;
    rep["conjecture"] = sw.which;
    rep["alpha"] = sw.alpha;
    rep["trials"] = sw.trials;
    rep["seed"] = sw.seed;
    rep["N"] = sw.order;
    rep["max_ratio"] = sw.max_ratio;
    if (sw.argmax_trial >= 0) {
        Json am;
        am["trial"] = sw.argmax_trial;
        am["n"] = sw.argmax_n;
        rep["argmax"] = am;
    } else {
        rep["argmax"] = nullptr;
    }
    Json cex = Json::array();
    for (const SweepCounterexample& c : sw.counterexamples) {
        Json e;
        e["conjecture"] = sw.which;
        e["alpha"] = sw.alpha;
        e["N"] = sw.order;
        e["trial"] = c.trial;
        e["n"] = c.n;
        e["ratio"] = c.ratio;
        e["measure"] = measure_to_json(c.atoms);
        cex.push_back(e);
    }
    rep["counterexamples"] = cex;
    return {sw.counterexamples.empty() ? 0 : 4, rep.dump(2)};
}

RunOutcome run_means(const std::string& target_text, double p,
                     std::span<const double> radii, int order_override, int K) {
    const Json target = parse_json_text(target_text);
    Series f(0);
    Json cfg = base_config("means", order_override);
    if (target.is_object() && target.contains("series")) {
        f = series_from_array(target["series"]);
        cfg["N"] = f.order();
    } else if (target.is_object() && target.contains("koebe")) {
        const int order = order_override > 0 ? order_override : 256;
        f = koebe_type(require_number(target["koebe"], "theta"), order);
        cfg["N"] = order;
    } else if (target.is_object() && target.contains("alphas")) {
        const BazilevicSpec spec = bazspec_from_json(target, order_override);
        f = construct(spec).f();
        cfg["N"] = spec.order;
    } else {
        throw Error(ErrorKind::SpecInvalid,
                    "means target needs 'series', 'koebe' or a construction spec");
    }
    cfg["target"] = target;
    cfg["K"] = K;
    if (std::isinf(p))
        cfg["p"] = "inf";
    else
        cfg["p"] = p;
    cfg["radii"] = Json(std::vector<double>(radii.begin(), radii.end()));

    const MeansReport mr = means_profile(f, p, radii, K);
    Json rep;
    rep["config"] = cfg;
    Json rows = Json::array();
    for (size_t i = 0; i < mr.radii.size(); ++i) {
        Json e;
        e["r"] = mr.radii[i];
        e["M_p"] = mr.values[i];
        e["truncation_error"] = mr.truncation_error[i];
        rows.push_back(e);
    }
    rep["rows"] = rows;
    rep["fit"] = fit_to_json(mr.fit);
    return {0, rep.dump(2)};
}

namespace {

RunOutcome necessary_common(const std::string& spec_text, int order_override,
                            const std::function<RunOutcome(const Json&, const BazFunction&)>& body) {
    const Json spec_json = parse_json_text(spec_text);
    const BazilevicSpec spec = bazspec_from_json(spec_json, order_override);
    return body(spec_json, construct(spec));
}

} // namespace

RunOutcome run_necessary_scan(const std::string& spec_text, std::span<const double> radii,
                              int order_override, int K) {
    const std::vector<double> default_radii{0.5, 0.9, 0.99, 0.999};
    const std::span<const double> grid = radii.empty() ? std::span<const double>(default_radii)
                                                       : radii;
    return necessary_common(spec_text, order_override, [&](const Json& spec_json,
                                                           const BazFunction& f) -> RunOutcome {
        const NecessaryScan scan = scan_necessary_condition(f, f.alpha, grid, 32, 32, K);
        Json rep;
        rep["config"] = base_config("necessary", f.unit.order());
        rep["config"]["spec"] = spec_json;
        rep["config"]["K"] = K;
        rep["config"]["radii"] = Json(std::vector<double>(grid.begin(), grid.end()));
        rep["alpha"] = f.alpha;
        rep["min"] = scan.min_value;
        Json argmin;
        argmin["r"] = scan.at_radius;
        argmin["theta1"] = scan.at_theta1;
        argmin["theta2"] = scan.at_theta2;
        rep["argmin"] = argmin;
        rep["full_circle"] = scan.full_circle_value;
        rep["exceeds_minus_pi"] = scan.exceeds_minus_pi;
        return {scan.exceeds_minus_pi ? 0 : 3, rep.dump(2)};
    });
}

RunOutcome run_necessary_single(const std::string& spec_text, double r, double theta1,
                                double theta2, int order_override, int K) {
    return necessary_common(spec_text, order_override, [&](const Json& spec_json,
                                                           const BazFunction& f) -> RunOutcome {
        const double value = necessary_condition(f, f.alpha, r, theta1, theta2, K);
        const double coarse = necessary_condition(f, f.alpha, r, theta1, theta2, K / 2);
        Json rep;
        rep["config"] = base_config("necessary", f.unit.order());
        rep["config"]["spec"] = spec_json;
        rep["config"]["K"] = K;
        rep["config"]["r"] = r;
        rep["config"]["theta1"] = theta1;
        rep["config"]["theta2"] = theta2;
        rep["alpha"] = f.alpha;
        rep["value"] = value;
        rep["error_estimate"] = std::abs(value - coarse);
        return {0, rep.dump(2)};
    });
}

RunOutcome run_correspond(const std::string& spec_text, double alpha, int order_override) {
    const Json spec_json = parse_json_text(spec_text);
    const BazilevicSpec spec = bazspec_from_json(spec_json, order_override);
    const BazFunction g = construct(spec);
    const double a = alpha > 0.0 ? alpha : g.alpha;

    const Series G = to_CI(g, a);
    const BazFunction back = from_CI(G, 1.0 / a);
    const double roundtrip = max_abs_diff(back.unit, g.unit);
    const double identity_residual =
        max_abs_diff(pow_real(deriv(G), a), integrand_unit(spec));

    Json rep;
    rep["config"] = base_config("correspond", spec.order);
    rep["config"]["spec"] = spec_json;
    rep["config"]["alpha"] = a;
    rep["alpha"] = a;
    rep["G"] = series_to_array(G);
    rep["roundtrip_max_dev"] = roundtrip;
    rep["derivative_power_residual"] = identity_residual;
    return {roundtrip > kTheoremTol ? 3 : 0, rep.dump(2)};
}

RunOutcome run_koebe_witness(double theta, std::span<const double> radii, int order, int K) {
    const KoebeWitnessReport kw = koebe_divergence_witness(theta, radii, order, K);
    Json rep;
    Json cfg = base_config("koebe-witness", order);
    cfg["theta"] = theta;
    cfg["K"] = K;
    cfg["radii"] = Json(std::vector<double>(radii.begin(), radii.end()));
    rep["config"] = cfg;
    Json rows = Json::array();
    for (const KoebeRadiusRecord& row : kw.rows) {
        Json e;
        e["r"] = row.r;
        e["lhs"] = row.lhs;
        e["rhs"] = row.rhs;
        e["ratio"] = row.ratio;
        if (row.series_checked)
            e["series_lhs"] = row.series_lhs;
        else
            e["series_lhs"] = nullptr;
        e["series_checked"] = row.series_checked;
        e["truncation_error"] = row.truncation_error;
        rows.push_back(e);
    }
    rep["rows"] = rows;
    rep["fit"] = fit_to_json(kw.fit);
    rep["divergence_confirmed"] = kw.divergence_confirmed;
    return {0, rep.dump(2)};
}

} // namespace bazlab
