#ifndef BAZLAB_CORE_SERIES_HPP
#define BAZLAB_CORE_SERIES_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace bazlab {

using Complex = std::complex<double>;

// Largest radius at which a truncated series may be evaluated.
inline constexpr double kMaxEvalRadius = 1.0 - 0x1p-20;

inline constexpr int kDefaultOrder = 64;

/// Truncated complex Taylor series about 0. Immutable value type:
/// coefficients c0..cN for a fixed truncation order N, all entries finite.
/// Binary operations truncate to the minimum of the two orders.
class Series {
public:
    explicit Series(int order);                   // zero series of the given order
    explicit Series(std::vector<Complex> coeffs); // order = coeffs.size() - 1

    static Series constant(Complex c0, int order);
    static Series identity(int order); // z

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Complex coeff(int n) const;                 // n in [0, order]
    std::span<const Complex> coeffs() const { return c_; }

private:
    std::vector<Complex> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, Complex factor);

// Quotient q with mul(q, b) == a to the shared order. Requires b(0) != 0.
Series div(const Series& a, const Series& b);

Series deriv(const Series& a);      // order max(N-1, 0)
Series antideriv(const Series& a);  // order N, constant of integration 0

// log of a unit series (constant term 1), principal branch.
Series log_unit(const Series& a);
Series exp_series(const Series& a);

// a^t = exp(t * log_unit(a)); requires unit constant term, result is unit.
Series pow_real(const Series& a, double t);

// outer(inner(z)); requires inner(0) == 0.
Series compose(const Series& outer, const Series& inner);

// a(z) / z for a with vanishing constant term; order drops by one.
Series divide_by_z(const Series& a);

Series truncated(const Series& a, int order); // order <= a.order()

Complex eval(const Series& a, Complex z); // requires |z| <= kMaxEvalRadius
std::vector<Complex> eval_circle(const Series& a, double r, int K);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }

// JSON form pinned by the file contract: array of [re, im] pairs, index = degree.
std::string series_to_json(const Series& a);
Series series_from_json(const std::string& text);

double max_abs_diff(const Series& a, const Series& b); // over shared degrees

} // namespace bazlab

#endif
