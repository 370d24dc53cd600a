#include "series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

namespace bazlab {

namespace {

void check_finite(std::span<const Complex> c) {
    for (const Complex& v : c) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error(ErrorKind::InvalidArgument, "series coefficient is not finite");
    }
}

void check_order(int order) {
    if (order < 0)
        throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
}

} // namespace

Series::Series(int order) : c_(static_cast<size_t>(order >= 0 ? order + 1 : 0)) {
    check_order(order);
}

Series::Series(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
        throw Error(ErrorKind::InvalidArgument, "series needs at least the constant coefficient");
    check_finite(c_);
}

Series Series::constant(Complex c0, int order) {
    Series s(order);
    s.c_[0] = c0;
    check_finite(s.c_);
    return s;
}

Series Series::identity(int order) {
    check_order(order);
    if (order < 1)
        throw Error(ErrorKind::InvalidArgument, "identity series needs order >= 1");
    Series s(order);
    s.c_[1] = 1.0;
    return s;
}

Complex Series::coeff(int n) const {
    if (n < 0 || n > order())
        throw Error(ErrorKind::InvalidArgument, "coefficient index out of range");
    return c_[static_cast<size_t>(n)];
}

Series add(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Series(std::move(c));
}

Series scale(const Series& a, Complex factor) {
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
    for (Complex& v : c) v *= factor;
    return Series(std::move(c));
}

Series mul(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        Complex s = 0.0;
        for (int j = 0; j <= i; ++j) s += a.coeff(j) * b.coeff(i - j);
        c[i] = s;
    }
    return Series(std::move(c));
}

Series div(const Series& a, const Series& b) {
    if (std::abs(b.coeff(0)) == 0.0)
        throw Error(ErrorKind::ZeroConstantTerm, "division by series with zero constant term");
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> q(static_cast<size_t>(n + 1));
    const Complex b0 = b.coeff(0);
    for (int i = 0; i <= n; ++i) {
        Complex s = a.coeff(i);
        for (int j = 0; j < i; ++j) s -= q[j] * b.coeff(i - j);
        q[i] = s / b0;
    }
    return Series(std::move(q));
}

Series deriv(const Series& a) {
    const int n = a.order();
    if (n == 0) return Series(0);
    std::vector<Complex> c(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) c[k - 1] = static_cast<double>(k) * a.coeff(k);
    return Series(std::move(c));
}

Series antideriv(const Series& a) {
    const int n = a.order();
    std::vector<Complex> c(static_cast<size_t>(n + 1));
    for (int k = 1; k <= n; ++k) c[k] = a.coeff(k - 1) / static_cast<double>(k);
    return Series(std::move(c));
}

Series log_unit(const Series& a) {
    const Complex a0 = a.coeff(0);
    if (std::abs(a0 - 1.0) > 1e-9)
        throw Error(ErrorKind::NonUnitConstantTerm, "log taken of series with constant term != 1");
    const int n = a.order();
    std::vector<Complex> l(static_cast<size_t>(n + 1));
    l[0] = std::log(a0);
    for (int k = 1; k <= n; ++k) {
        Complex s = a.coeff(k);
        for (int j = 1; j < k; ++j)
            s -= (static_cast<double>(j) / k) * l[j] * a.coeff(k - j);
        l[k] = s / a0;
    }
    return Series(std::move(l));
}

Series exp_series(const Series& a) {
    const int n = a.order();
    std::vector<Complex> e(static_cast<size_t>(n + 1));
    e[0] = std::exp(a.coeff(0));
    for (int k = 1; k <= n; ++k) {
        Complex s = 0.0;
        for (int j = 1; j <= k; ++j)
            s += static_cast<double>(j) * a.coeff(j) * e[k - j];
        e[k] = s / static_cast<double>(k);
    }
    return Series(std::move(e));
}

Series pow_real(const Series& a, double t) {
    return exp_series(scale(log_unit(a), t));
}

Series compose(const Series& outer, const Series& inner) {
    if (std::abs(inner.coeff(0)) > 1e-12)
        throw Error(ErrorKind::NonzeroInnerConstant, "composition inner series must vanish at 0");
    const int n = std::min(outer.order(), inner.order());
    Series acc = Series::constant(outer.coeff(outer.order()), n);
    for (int k = outer.order() - 1; k >= 0; --k)
        acc = add(mul(acc, inner), Series::constant(outer.coeff(k), n));
    return acc;
}

Series divide_by_z(const Series& a) {
    if (std::abs(a.coeff(0)) > 1e-12)
        throw Error(ErrorKind::InvalidArgument, "divide_by_z needs a vanishing constant term");
    const int n = a.order();
    if (n == 0) return Series(0);
    std::vector<Complex> c(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) c[k - 1] = a.coeff(k);
    return Series(std::move(c));
}

Series truncated(const Series& a, int order) {
    if (order < 0 || order > a.order())
        throw Error(ErrorKind::InvalidArgument, "truncation order out of range");
    std::vector<Complex> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    return Series(std::move(c));
}

Complex eval(const Series& a, Complex z) {
    if (std::abs(z) > kMaxEvalRadius)
        throw Error(ErrorKind::RadiusOutOfRange, "evaluation point outside radius limit");
    Complex acc = a.coeff(a.order());
    for (int k = a.order() - 1; k >= 0; --k) acc = acc * z + a.coeff(k);
    return acc;
}

std::vector<Complex> eval_circle(const Series& a, double r, int K) {
    if (r < 0.0 || r > kMaxEvalRadius)
        throw Error(ErrorKind::RadiusOutOfRange, "circle radius outside [0, r_max]");
    if (K < 1)
        throw Error(ErrorKind::InvalidArgument, "eval_circle needs K >= 1");
    std::vector<Complex> out(static_cast<size_t>(K));
    const double step = 2.0 * std::numbers::pi / K;
    for (int k = 0; k < K; ++k)
        out[k] = eval(a, std::polar(r, step * k));
    return out;
}

std::string series_to_json(const Series& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& c : a.coeffs())
        arr.push_back({c.real(), c.imag()});
    return arr.dump();
}

Series series_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_array() || j.empty())
        throw Error(ErrorKind::ParseError, "series JSON must be a nonempty array of [re, im] pairs");
    std::vector<Complex> c;
    c.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
            throw Error(ErrorKind::ParseError, "series JSON entries must be [re, im] number pairs");
        c.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return Series(std::move(c));
}

double max_abs_diff(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    double m = 0.0;
    for (int k = 0; k <= n; ++k)
        m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    return m;
}

} // namespace bazlab
