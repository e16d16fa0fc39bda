#pragma once

#include <array>
#include <complex>

namespace frameseq {

// Coefficients (c0, c1, c2) of c0 + c1*x + c2*x^2.
using Quadratic = std::array<double, 3>;

// Exact value of  ∫_lo^hi (c0 + c1 x + c2 x^2) e^{-i omega x} dx.
// Evaluated about the interval midpoint with series expansions for small
// |omega|*(hi-lo), so there is no cancellation near omega = 0.
std::complex<double> integrate_quadratic_exp(const Quadratic& c, double lo, double hi,
                                             double omega);

// Square of the affine function slope*x + intercept, as a quadratic.
inline Quadratic square_affine(double slope, double intercept) {
    return {intercept * intercept, 2.0 * slope * intercept, slope * slope};
}

inline double eval_quadratic(const Quadratic& c, double x) {
    return c[0] + x * (c[1] + x * c[2]);
}

} // namespace frameseq
