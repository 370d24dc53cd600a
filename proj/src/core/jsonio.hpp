#ifndef BAZLAB_CORE_JSONIO_HPP
#define BAZLAB_CORE_JSONIO_HPP

#include <span>
#include <string>

#include <json.hpp>

#include "bazilevic.hpp"
#include "classes.hpp"
#include "coeffs.hpp"
#include "hardy.hpp"

namespace bazlab {

using Json = nlohmann::ordered_json;

// Parse with a line/column diagnostic on failure (ErrorKind::ParseError).
Json parse_json_text(const std::string& text);

Json series_to_array(const Series& s);
Series series_from_array(const Json& arr);

// {"atoms":[{"t":angle,"lam":weight},...]}
HerglotzMeasure measure_from_json(const Json& j);
Json measure_to_json(std::span<const HerglotzAtom> atoms);

// {"A":real,"B":real}
JanowskiParams janowski_from_json(const Json& j);

// {"kind":"zero"|"z"|"power"|"blaschke"|"series", ...}
Series omega_from_json(const Json& j, int order);

// {"alphas":[...], "beta":0, "factors":[...], "h":..., "N":int}
// Factors: omega specs (optionally with "A"/"B", default (1,-1)) or
// {"unit":[[re,im],...]}. h: {"measure":...} | {"janowski":...} |
// {"series":[...]} | "one". order_override > 0 replaces the spec's N.
BazilevicSpec bazspec_from_json(const Json& j, int order_override = 0);

struct RunOutcome {
    int status; // 0 ok, 3 theorem-invariant violation, 4 conjecture finding
    std::string report;
};

RunOutcome run_construct(const std::string& spec_text, int order_override);
RunOutcome run_coeffs(const std::string& spec_text, int order_override);
// spec_text empty: report on the extremal comparison function for alpha.
RunOutcome run_bounds(const std::string& spec_text, double alpha, int order);
RunOutcome run_sweep(int which, double alpha, int trials, uint64_t seed, int order);
// target: {"series":[...]} | {"koebe":{"theta":t}} | a construction spec.
RunOutcome run_means(const std::string& target_text, double p,
                     std::span<const double> radii, int order_override, int K);
RunOutcome run_necessary_scan(const std::string& spec_text, std::span<const double> radii,
                              int order_override, int K);
RunOutcome run_necessary_single(const std::string& spec_text, double r, double theta1,
                                double theta2, int order_override, int K);
RunOutcome run_correspond(const std::string& spec_text, double alpha, int order_override);
RunOutcome run_koebe_witness(double theta, std::span<const double> radii, int order, int K);

} // namespace bazlab

#endif
