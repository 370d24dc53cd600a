#ifndef BAZLAB_TESTS_TESTUTIL_HPP
#define BAZLAB_TESTS_TESTUTIL_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"
#include "series.hpp"

namespace bazlab::testutil {

// Random series with |c_n| <= bound * decay^n; constant term left random too.
inline Series random_series(Rng& rng, int order, double bound, double decay = 1.0) {
    std::vector<Complex> c(static_cast<size_t>(order + 1));
    double cap = bound;
    for (int n = 0; n <= order; ++n) {
        c[n] = std::polar(cap * rng.uniform(), rng.uniform(0.0, 2.0 * 3.141592653589793));
        cap *= decay;
    }
    return Series(std::move(c));
}

// Unit-constant random series, coefficients decaying from `first`.
inline Series random_unit_series(Rng& rng, int order, double first, double decay) {
    std::vector<Complex> c(static_cast<size_t>(order + 1));
    c[0] = 1.0;
    double cap = first;
    for (int n = 1; n <= order; ++n) {
        c[n] = std::polar(cap * rng.uniform(), rng.uniform(0.0, 2.0 * 3.141592653589793));
        cap *= decay;
    }
    return Series(std::move(c));
}

template <typename Fn>
std::optional<ErrorKind> thrown_kind(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

inline double max_coeff_abs(const Series& s) {
    double m = 0.0;
    for (const Complex& c : s.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

} // namespace bazlab::testutil

#endif
