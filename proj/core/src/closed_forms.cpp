#include "frameseq/closed_forms.hpp"

#include <cmath>

namespace frameseq {
namespace {

// sin(u)/u, ∫_0^1 s sin(us) ds and ∫_0^1 s^2 cos(us) ds.
struct Kernels {
    double sinc;
    double s1;
    double s2;
};

Kernels kernels(double u) {
    if (std::abs(u) < 0.5) {
        // Alternating Taylor series; ten terms reach full double precision.
        Kernels k{0.0, 0.0, 0.0};
        double even = 1.0; // u^{2j} / (2j)!
        for (int j = 0; j < 10; ++j) {
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            const double odd = even / (2.0 * j + 1.0); // u^{2j} / (2j+1)!
            k.sinc += sign * odd;
            k.s1 += sign * odd * u / (2.0 * j + 3.0);
            k.s2 += sign * even / (2.0 * j + 3.0);
            even *= u * u / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
        }
        return k;
    }
    const double s = std::sin(u);
    const double c = std::cos(u);
    return {s / u, (s - u * c) / (u * u), (u * u * s - 2.0 * s + 2.0 * u * c) / (u * u * u)};
}

} // namespace

std::complex<double> integrate_quadratic_exp(const Quadratic& c, double lo, double hi,
                                             double omega) {
    if (!(hi > lo)) {
        return {0.0, 0.0};
    }
    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    // Re-expand about the midpoint: x = mid + t.
    const double d0 = c[0] + mid * (c[1] + mid * c[2]);
    const double d1 = c[1] + 2.0 * mid * c[2];
    const double d2 = c[2];

    const Kernels k = kernels(omega * h);
    const double even_part = d0 * 2.0 * h * k.sinc + d2 * 2.0 * h * h * h * k.s2;
    const double odd_part = -d1 * 2.0 * h * h * k.s1;
    const std::complex<double> centred(even_part, odd_part);
    if (omega == 0.0) {
        return centred;
    }
    return std::polar(1.0, -omega * mid) * centred;
}

} // namespace frameseq
