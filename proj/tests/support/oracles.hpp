#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the closed forms, segment algebra or quadrature of the library; each
// quantity is recomputed by brute force or by composite Gauss-Legendre
// quadrature on the raw profile values.

#include "frameseq/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <variant>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// Composite 5-point Gauss-Legendre on [lo, hi] with `panels` equal panels.
template <class T, class F>
T gauss_legendre(F&& f, double lo, double hi, std::size_t panels) {
    static constexpr std::array<double, 5> x = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                                0.9061798459386640};
    static constexpr std::array<double, 5> w = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                                0.2369268850561891, 0.2369268850561891};
    const double h = (hi - lo) / static_cast<double>(panels);
    T total{};
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = lo + (static_cast<double>(p) + 0.5) * h;
        for (std::size_t k = 0; k < 5; ++k) {
            total += w[k] * f(mid + 0.5 * h * x[k]);
        }
    }
    return total * (0.5 * h);
}

// ⟨τ_a φ, φ⟩ = ∫ |φ̂|² e^{-2πiaξ}, piece by piece from point values of φ̂.
inline std::complex<double> autocorrelation(const frameseq::FourierProfile& profile, double a,
                                            std::size_t panels = 2048) {
    std::complex<double> total{};
    for (const auto& piece : profile.pieces()) {
        // Panels align with the cells of sampled shapes so no panel straddles a jump.
        const auto* sampled = std::get_if<frameseq::SampledShape>(&piece.shape);
        const std::size_t cells = sampled != nullptr ? sampled->cells.size() : 1;
        total += gauss_legendre<std::complex<double>>(
            [&](double xi) {
                const double v = profile(xi);
                return v * v * std::polar(1.0, -2.0 * kPi * a * xi);
            },
            piece.lo, piece.hi, panels * cells);
    }
    return total;
}

// Φ_b(ξ) = Σ_n |φ̂((ξ+n)/b)|² by summing over a generous range of n.
inline double periodization(const frameseq::FourierProfile& profile, double b, double xi) {
    const long lo = static_cast<long>(std::floor(b * profile.support_lo())) - 2;
    const long hi = static_cast<long>(std::ceil(b * profile.support_hi())) + 2;
    double total = 0.0;
    for (long n = lo; n <= hi; ++n) {
        const double v = profile((xi + static_cast<double>(n)) / b);
        total += v * v;
    }
    return total;
}

// D_Λ(x) by checking every closed window starting at a point.
inline std::size_t density(const std::vector<double>& points, double x) {
    std::size_t best = 0;
    for (double t : points) {
        const auto count = static_cast<std::size_t>(
            std::count_if(points.begin(), points.end(), [&](double p) { return p >= t && p <= t + x; }));
        best = std::max(best, count);
    }
    return best;
}

// (1/M) Σ_j v_j e^{-2πi n ξ_j} on the midpoint grid.
inline std::complex<double> grid_dft(const std::vector<double>& values, long n) {
    const auto M = static_cast<double>(values.size());
    std::complex<double> total{};
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double xi = (static_cast<double>(j) + 0.5) / M;
        total += values[j] * std::polar(1.0, -2.0 * kPi * static_cast<double>(n) * xi);
    }
    return total / M;
}

// f(ξ) = Σ_k c_k e^{-2πiλ_k ξ} (the sign used by the Gram identity).
inline std::complex<double> trig_poly(const std::vector<double>& freqs, const std::vector<std::complex<double>>& c,
                                      double xi, double sign = -1.0) {
    std::complex<double> total{};
    for (std::size_t k = 0; k < freqs.size(); ++k) {
        total += c[k] * std::polar(1.0, sign * 2.0 * kPi * freqs[k] * xi);
    }
    return total;
}

// Gram matrix entry ⟨τ_{λ_j b}φ, τ_{λ_i b}φ⟩ straight from the definition.
inline std::complex<double> gram_entry(const frameseq::FourierProfile& profile, double b, double li, double lj) {
    return oracle::autocorrelation(profile, (lj - li) * b);
}

// F(x) ∫_0^x F + ∫_x^∞ F² for F = min(1, x^{-a}), a > 1/2, from quadrature
// on [0, x] (in the variable log t beyond 1) and the elementary tail integral.
inline double g_power(double a, double x) {
    auto F = [a](double t) { return t <= 1.0 ? 1.0 : std::pow(t, -a); };
    double head = 0.0;
    if (x > 0.0) {
        head = x <= 1.0 ? x
                        : 1.0 + gauss_legendre<double>([&](double u) { return std::exp(u) * F(std::exp(u)); }, 0.0,
                                                       std::log(x), 1024);
    }
    double tail = 0.0;
    const double from = std::max(x, 1.0);
    tail = std::pow(from, 1.0 - 2.0 * a) / (2.0 * a - 1.0);
    if (x < 1.0) {
        tail += 1.0 - x;
    }
    return F(x) * head + tail;
}

// Smallest and largest eigenvalue of a Hermitian matrix by Jacobi
// rotations on its real 2n x 2n embedding.
inline std::pair<double, double> extreme_eigenvalues(const std::vector<std::vector<std::complex<double>>>& h) {
    const std::size_t n = h.size();
    const std::size_t m = 2 * n;
    std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = h[i][j].real();
            a[i + n][j + n] = h[i][j].real();
            a[i][j + n] = -h[i][j].imag();
            a[i + n][j] = h[i][j].imag();
        }
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    double lo = a[0][0];
    double hi = a[0][0];
    for (std::size_t i = 1; i < m; ++i) {
        lo = std::min(lo, a[i][i]);
        hi = std::max(hi, a[i][i]);
    }
    return {lo, hi};
}

} // namespace oracle
