#include "frameseq/constructions.hpp"

#include "frameseq/error.hpp"
#include "frameseq/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace frameseq {
namespace {

constexpr double kPi = std::numbers::pi;

bool admissible_epsilon(double a, double b, double eps) {
    const long n_scan = static_cast<long>(std::ceil(4.0 * a)) + 16;
    const double r = a / b;
    for (long n = -n_scan; n <= n_scan; ++n) {
        // (ξ+n)/a ∈ [1/b, 1/b+ε] iff ξ ∈ [r - n, r - n + aε].
        const double lo = r - static_cast<double>(n);
        if (!(lo >= eps || lo + a * eps <= 0.0)) {
            return false;
        }
    }
    return true;
}

} // namespace

FourierProfile plateau_ramp_profile(double a, double b) {
    if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) {
        throw Refusal("plateau-ramp profile needs 0 < b < a");
    }
    const double slope = a * b / (b - a);
    return FourierProfile({
        Piece{0.0, 1.0 / a, ConstantShape{1.0}},
        Piece{1.0 / a, 1.0 / b, AffineShape{slope, -slope / b}},
    });
}

RampPlateau ramp_plateau_profile(double a, double b) {
    if (!(b > 0.0) || !(a > b) || !std::isfinite(a)) {
        throw Refusal("ramp-plateau profile needs 0 < b < a");
    }
    const double r = a / b;
    if (std::abs(r - std::round(r)) < 1e-12) {
        throw Refusal("ramp-plateau profile needs a/b not an integer");
    }
    double lo = 0.0;
    double hi = 1.0;
    if (admissible_epsilon(a, b, hi)) {
        lo = hi;
    } else {
        while (hi - lo > std::ldexp(1.0, -20)) {
            const double mid = 0.5 * (lo + hi);
            (admissible_epsilon(a, b, mid) ? lo : hi) = mid;
        }
    }
    if (!(lo > 0.0)) {
        throw Error("no admissible plateau width found at resolution 2^-20");
    }
    FourierProfile profile({
        Piece{0.0, 1.0 / a, AffineShape{1.0, 0.0}},
        Piece{1.0 / b, 1.0 / b + lo, ConstantShape{1.0}},
    });
    const double c = std::min({lo, lo / b, b * lo});
    return {std::move(profile), lo, std::min(1.0, c * c)};
}

DyadicConstruction dyadic_construction(double alpha, long n_max) {
    DyadicConstruction out{alpha, n_max, {}, TranslationSet::dyadic(alpha, n_max), {}};
    out.m.assign(static_cast<std::size_t>(n_max) + 1, 0);
    std::size_t first = 0;
    for (long n = 1; n <= n_max; ++n) {
        const long m = dyadic_m(alpha, n);
        out.m[static_cast<std::size_t>(n)] = m;
        const std::size_t count = std::size_t{1} << (n - m);
        out.blocks.push_back({n, m, first, count});
        first += count;
    }
    return out;
}

double block_modulus_closed_form(long n, long m, double xi) {
    const double den = std::sin(kPi * std::ldexp(xi, static_cast<int>(m)));
    const double scale = std::exp2(0.5 * static_cast<double>(m - n));
    if (std::abs(den) < 1e-300) {
        return 1.0 / scale;
    }
    return scale * std::abs(std::sin(kPi * std::ldexp(xi, static_cast<int>(n))) / den);
}

double block_modulus_sum(long n, long m, double xi) {
    const long count = 1L << (n - m);
    const double theta = 2.0 * kPi * std::ldexp(xi, static_cast<int>(m));
    const std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> p = z;
    std::complex<double> total{0.0, 0.0};
    for (long k = 1; k <= count; ++k) {
        total += p;
        p = (k % 64 == 0) ? std::polar(1.0, theta * static_cast<double>(k + 1)) : p * z;
    }
    return std::exp2(0.5 * static_cast<double>(m - n)) * std::abs(total);
}

BlockPolynomial dyadic_block_polynomial(double alpha, long n, std::size_t M) {
    if (n < 1 || n > 20) {
        throw InvalidArgument("block index must satisfy 1 <= n <= 20");
    }
    if (M < 16 || !std::has_single_bit(M)) {
        throw InvalidArgument("grid size must be a power of two >= 16");
    }
    BlockPolynomial out;
    out.n = n;
    out.m = dyadic_m(alpha, n);
    const long count = 1L << (n - out.m);
    const double c = std::exp2(0.5 * static_cast<double>(out.m - n));
    for (long k = 1; k <= count; ++k) {
        out.frequencies.push_back((1L << n) + k * (1L << out.m));
        out.coefficients.emplace_back(c, 0.0);
    }
    out.modulus.assign(M, 0.0);
    std::vector<double> dev(M, 0.0);
    parallel_for(M, [&](std::size_t j) {
        const double xi = (static_cast<double>(j) + 0.5) / static_cast<double>(M);
        out.modulus[j] = block_modulus_sum(n, out.m, xi);
        dev[j] = std::abs(out.modulus[j] - block_modulus_closed_form(n, out.m, xi));
    });
    out.closed_form_deviation = *std::max_element(dev.begin(), dev.end());
    return out;
}

DyadicWeight dyadic_weight(double alpha, long n_max, std::size_t M) {
    if (n_max < 1 || n_max > 20) {
        throw InvalidArgument("n_max must satisfy 1 <= n_max <= 20");
    }
    if (M < (std::size_t{1} << (n_max + 2)) || !std::has_single_bit(M)) {
        throw Refusal("grid too coarse: need a power of two M >= 2^{n_max+2}");
    }
    const double Md = static_cast<double>(M);
    std::vector<int> top(M, 0); // largest k with ξ_j ∈ F_k
    std::vector<DyadicLevel> levels;
    for (long n = 1; n <= n_max; ++n) {
        const BlockPolynomial f = dyadic_block_polynomial(alpha, n, M);
        const double sqrt_n = std::sqrt(static_cast<double>(n));
        const double threshold = std::exp2(0.5 * (static_cast<double>(n - f.m) - 0.5 * sqrt_n));
        DyadicLevel level;
        level.n = n;
        level.m = f.m;
        std::size_t large = 0;
        double small_energy = 0.0;
        for (std::size_t j = 0; j < M; ++j) {
            if (f.modulus[j] < threshold) {
                small_energy += f.modulus[j] * f.modulus[j];
            } else {
                ++large;
                top[j] = static_cast<int>(n);
            }
        }
        level.large_set_measure = static_cast<double>(large) / Md;
        level.large_set_bound = std::exp2(static_cast<double>(f.m - n) + 0.5 * sqrt_n);
        level.small_set_energy = small_energy / Md;
        level.small_set_bound = std::exp2(-0.5 * sqrt_n);
        levels.push_back(level);
    }
    std::vector<double> phi(M);
    std::vector<double> cells(M);
    for (std::size_t j = 0; j < M; ++j) {
        phi[j] = std::ldexp(1.0, -top[j]);
        cells[j] = std::sqrt(phi[j]);
        if (!(phi[j] > 0.0)) {
            throw InconsistencyError("constructed Φ vanishes at a grid point");
        }
    }
    FourierProfile profile({Piece{0.0, 1.0, SampledShape{cells}}});
    const PeriodizedSpectrum check = periodize(profile, 1.0, M);
    for (std::size_t j = 0; j < M; ++j) {
        if (std::abs(check.values()[j] - phi[j]) > 1e-14 * phi[j]) {
            throw InconsistencyError("periodizing the emitted profile does not reproduce Φ");
        }
    }
    return {alpha, n_max, PeriodizedSpectrum::from_samples(1.0, std::move(phi)), std::move(profile), std::move(levels)};
}

CounterexampleTrend dyadic_counterexample_trend(double alpha, long n_max, long n_lo, long n_hi, std::size_t M) {
    if (n_lo < 1 || n_hi > n_max || n_hi <= n_lo) {
        throw InvalidArgument("need 1 <= n_lo < n_hi <= n_max");
    }
    const DyadicWeight weight = dyadic_weight(alpha, n_max, M);
    const auto phi = weight.phi.values();
    CounterexampleTrend out;
    out.phi_positive = std::all_of(phi.begin(), phi.end(), [](double v) { return v > 0.0; });
    for (long n = n_lo; n <= n_hi; ++n) {
        const BlockPolynomial f = dyadic_block_polynomial(alpha, n, M);
        double w = 0.0;
        double norm2 = 0.0;
        for (std::size_t j = 0; j < M; ++j) {
            const double f2 = f.modulus[j] * f.modulus[j];
            w += f2 * phi[j];
            norm2 += f2;
        }
        out.weights.emplace_back(n, w / static_cast<double>(M));
        out.norms.emplace_back(n, norm2 / static_cast<double>(M));
    }
    out.decreasing = out.weights.back().second < 0.5 * out.weights.front().second;

    const DyadicConstruction construction = dyadic_construction(alpha, n_max);
    std::vector<double> lx;
    std::vector<double> ly;
    for (long p = 1; p <= n_max; ++p) {
        const double x = std::ldexp(1.0, static_cast<int>(p));
        const double d = static_cast<double>(density(construction.lambda, x));
        out.density.emplace_back(p, d);
        const long m = construction.m[static_cast<std::size_t>(p)];
        out.density_constant = std::max(out.density_constant, d / std::ldexp(1.0, static_cast<int>(p - m)));
        if (p >= n_max - 3) {
            lx.push_back(std::log(x));
            ly.push_back(std::log(d));
        }
    }
    const auto n = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    out.density_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.density_ok = out.density_exponent <= 1.0 - alpha + 0.1;

    if (out.decreasing && out.phi_positive) {
        out.conclusion = "lower bound failing along f_n with Φ > 0: not a frame sequence";
    } else {
        out.conclusion = "trend not established on this window";
    }
    return out;
}

} // namespace frameseq
