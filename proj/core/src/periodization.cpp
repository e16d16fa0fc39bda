#include "frameseq/periodization.hpp"

#include "frameseq/error.hpp"
#include "frameseq/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace frameseq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct NRange {
    long lo = 0;
    long hi = -1;
};

// Integers n with (ξ+n)/b ∈ [u, v) for some ξ ∈ [0, 1).
NRange shifts_covering(double b, double u, double v) {
    return {static_cast<long>(std::floor(b * u - 1.0)) + 1, static_cast<long>(std::ceil(b * v)) - 1};
}

void require_grid(std::size_t M) {
    if (M < 16 || !std::has_single_bit(M)) {
        throw InvalidArgument("grid size must be a power of two >= 16");
    }
}

// Each (n, piece) pair contributes |shape((ξ+n)/b)|² on a sub-interval of
// [0, 1); the segments are the common refinement with summed quadratics.
std::vector<Segment> build_segments(const FourierProfile& profile, double b) {
    std::vector<Segment> parts;
    const auto add = [&](double u, double v, long n, double slope, double intercept) {
        const double lo = std::max(0.0, b * u - static_cast<double>(n));
        const double hi = std::min(1.0, b * v - static_cast<double>(n));
        if (hi > lo) {
            // shape((ξ+n)/b) = (slope/b) ξ + (slope n / b + intercept).
            const double s = slope / b;
            const double r = slope * static_cast<double>(n) / b + intercept;
            parts.push_back({lo, hi, square_affine(s, r)});
        }
    };
    for (const auto& p : profile.pieces()) {
        const NRange range = shifts_covering(b, p.lo, p.hi);
        for (long n = range.lo; n <= range.hi; ++n) {
            std::visit(
                [&](const auto& s) {
                    using S = std::decay_t<decltype(s)>;
                    if constexpr (std::is_same_v<S, ConstantShape>) {
                        add(p.lo, p.hi, n, 0.0, s.value);
                    } else if constexpr (std::is_same_v<S, AffineShape>) {
                        add(p.lo, p.hi, n, s.slope, s.intercept);
                    } else {
                        const double w = (p.hi - p.lo) / static_cast<double>(s.cells.size());
                        for (std::size_t i = 0; i < s.cells.size(); ++i) {
                            const double u = p.lo + static_cast<double>(i) * w;
                            const double v = i + 1 == s.cells.size() ? p.hi : u + w;
                            add(u, v, n, 0.0, s.cells[i]);
                        }
                    }
                },
                p.shape);
        }
    }

    std::vector<double> cuts{0.0, 1.0};
    for (const auto& s : parts) {
        cuts.push_back(s.lo);
        cuts.push_back(s.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Segment> out(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        out[i].lo = cuts[i];
        out[i].hi = cuts[i + 1];
    }
    for (const auto& s : parts) {
        auto first = static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), s.lo) - cuts.begin());
        for (std::size_t i = first; i < out.size() && out[i].lo < s.hi; ++i) {
            for (int c = 0; c < 3; ++c) {
                out[i].q[c] += s.q[c];
            }
        }
    }
    return out;
}

// True when every segment is constant and all have the same width, which
// enables a trig-free transform.
bool uniform_constant(std::span<const Segment> segs) {
    if (segs.size() < 2) {
        return false;
    }
    const double w = segs.front().hi - segs.front().lo;
    for (const auto& s : segs) {
        if (s.q[1] != 0.0 || s.q[2] != 0.0 || std::abs((s.hi - s.lo) - w) > 1e-12 * w) {
            return false;
        }
    }
    return true;
}

std::complex<double> uniform_constant_transform(std::span<const Segment> segs, double omega) {
    const double w = segs.front().hi - segs.front().lo;
    const double u = 0.5 * omega * w;
    const double sinc = std::abs(u) < 1e-8 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
    const std::complex<double> step = std::polar(1.0, -omega * w);
    std::complex<double> phase;
    std::complex<double> total{0.0, 0.0};
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if ((i & 255u) == 0) {
            phase = std::polar(1.0, -omega * 0.5 * (segs[i].lo + segs[i].hi));
        }
        total += segs[i].q[0] * phase;
        phase *= step;
    }
    return total * w * sinc;
}

void require_alias_free(const PeriodizedSpectrum& ps, long n) {
    if (static_cast<std::size_t>(std::abs(n)) * 2 >= ps.grid_size()) {
        throw Refusal("Fourier coefficient index |n| = " + std::to_string(std::abs(n)) +
                      " is not below M/2 = " + std::to_string(ps.grid_size() / 2) + " (aliasing)");
    }
}

std::size_t count_runs(std::span<const double> v, double thresh) {
    std::size_t runs = 0;
    const std::size_t M = v.size();
    for (std::size_t j = 0; j < M; ++j) {
        const bool low = v[j] <= thresh;
        const bool prev_low = v[(j + M - 1) % M] <= thresh;
        if (low && !prev_low) {
            ++runs;
        }
    }
    if (runs == 0 && M > 0 && v[0] <= thresh) {
        runs = 1; // the whole circle
    }
    return runs;
}

} // namespace

PeriodizedSpectrum PeriodizedSpectrum::from_samples(double b, std::vector<double> values) {
    if (!(b > 0.0)) {
        throw InvalidArgument("spacing b must be positive");
    }
    require_grid(values.size());
    for (double v : values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidArgument("periodization samples must be finite and nonnegative");
        }
    }
    PeriodizedSpectrum ps;
    ps.b_ = b;
    ps.values_ = std::move(values);
    return ps;
}

double PeriodizedSpectrum::grid_mean() const {
    double total = 0.0;
    for (double v : values_) {
        total += v;
    }
    return total / static_cast<double>(values_.size());
}

double periodization_at(const FourierProfile& profile, double b, double xi) {
    const NRange range = shifts_covering(b, profile.support_lo(), profile.support_hi());
    double total = 0.0;
    for (long n = range.lo; n <= range.hi; ++n) {
        const double v = profile((xi + static_cast<double>(n)) / b);
        total += v * v;
    }
    return total;
}

PeriodizedSpectrum periodize(const FourierProfile& profile, double b, std::size_t M, double tail_tol) {
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw InvalidArgument("spacing b must be positive and finite");
    }
    if (!(tail_tol > 0.0)) {
        throw InvalidArgument("tail tolerance must be positive");
    }
    require_grid(M);

    PeriodizedSpectrum ps;
    ps.b_ = b;
    const NRange range = shifts_covering(b, profile.support_lo(), profile.support_hi());
    ps.truncation_range_ = std::max(std::abs(range.lo), std::abs(range.hi));
    ps.tail_bound_ = 0.0;
    ps.values_.assign(M, 0.0);
    parallel_for(M, [&](std::size_t j) {
        const double xi = (static_cast<double>(j) + 0.5) / static_cast<double>(M);
        double total = 0.0;
        for (long n = range.lo; n <= range.hi; ++n) {
            const double v = profile((xi + static_cast<double>(n)) / b);
            total += v * v;
        }
        ps.values_[j] = total;
    });
    ps.segments_ = build_segments(profile, b);
    return ps;
}

std::complex<double> fourier_coeff(const PeriodizedSpectrum& ps, long n) {
    require_alias_free(ps, n);
    if (!ps.has_segments()) {
        return grid_fourier_coeff(ps, n);
    }
    const double omega = kTwoPi * static_cast<double>(n);
    const auto segs = ps.segments();
    if (n != 0 && uniform_constant(segs)) {
        return uniform_constant_transform(segs, omega);
    }
    std::complex<double> total{0.0, 0.0};
    for (const auto& s : segs) {
        total += integrate_quadratic_exp(s.q, s.lo, s.hi, omega);
    }
    return total;
}

std::complex<double> grid_fourier_coeff(const PeriodizedSpectrum& ps, long n) {
    require_alias_free(ps, n);
    const std::size_t M = ps.grid_size();
    const auto v = ps.values();
    const double step_angle = -kTwoPi * static_cast<double>(n) / static_cast<double>(M);
    const std::complex<double> step = std::polar(1.0, step_angle);
    std::complex<double> phase;
    std::complex<double> total{0.0, 0.0};
    for (std::size_t j = 0; j < M; ++j) {
        if ((j & 255u) == 0) {
            phase = std::polar(1.0, step_angle * (static_cast<double>(j) + 0.5));
        }
        total += v[j] * phase;
        phase *= step;
    }
    return total / static_cast<double>(M);
}

EssentialBounds essential_bounds(const PeriodizedSpectrum& ps, double zero_thresh) {
    if (!(zero_thresh >= 0.0)) {
        throw InvalidArgument("zero threshold must be nonnegative");
    }
    EssentialBounds out;
    std::size_t zeros = 0;
    for (double v : ps.values()) {
        out.sup = std::max(out.sup, v);
        if (v <= zero_thresh) {
            ++zeros;
        } else {
            out.inf_nonzero = std::min(out.inf_nonzero, v);
        }
    }
    out.zero_fraction = static_cast<double>(zeros) / static_cast<double>(ps.grid_size());
    return out;
}

double default_zero_threshold(const PeriodizedSpectrum& ps) {
    const auto v = ps.values();
    return 1e-8 * *std::max_element(v.begin(), v.end());
}

ZeroRuns zero_count(const PeriodizedSpectrum& ps, double zero_thresh) {
    const EssentialBounds eb = essential_bounds(ps, zero_thresh);
    if (eb.zero_fraction > 0.5) {
        throw Refusal("Φ_b is below the zero threshold on more than half of the grid; zero counting does not apply");
    }
    const auto v = ps.values();
    const std::size_t M = v.size();
    const double h = 0.5 / static_cast<double>(M);
    ZeroRuns out;
    for (std::size_t j = 0; j < M; ++j) {
        if (v[j] <= zero_thresh && v[(j + M - 1) % M] > zero_thresh) {
            std::size_t end = j;
            while (v[(end + 1) % M] <= zero_thresh) {
                ++end;
            }
            const double lo = ps.xi(j) - h;
            const double hi = lo + static_cast<double>(end - j + 1) / static_cast<double>(M);
            out.intervals.emplace_back(lo, hi);
        }
    }
    out.count = out.intervals.size();
    return out;
}

std::vector<RefinementLevel> refinement_study(const FourierProfile& profile, double b, std::size_t M,
                                              int levels, double rel_thresh) {
    if (levels < 1) {
        throw InvalidArgument("refinement study needs at least one level");
    }
    std::vector<RefinementLevel> out;
    double thresh = 0.0;
    for (int l = 0; l < levels; ++l) {
        const PeriodizedSpectrum ps = periodize(profile, b, M << l);
        if (l == 0) {
            const auto v = ps.values();
            thresh = rel_thresh * *std::max_element(v.begin(), v.end());
        }
        RefinementLevel level;
        level.grid_size = ps.grid_size();
        level.bounds = essential_bounds(ps, thresh);
        level.zero_runs = count_runs(ps.values(), thresh);
        out.push_back(level);
    }
    return out;
}

double dilation_deviation(const FourierProfile& profile, double b, int m, std::size_t M) {
    if (m < 1) {
        throw InvalidArgument("dilation factor must be a positive integer");
    }
    require_grid(M);
    std::vector<double> dev(M, 0.0);
    parallel_for(M, [&](std::size_t j) {
        const double xi = (static_cast<double>(j) + 0.5) / static_cast<double>(M);
        double folded = 0.0;
        for (int k = 0; k < m; ++k) {
            folded += periodization_at(profile, b, (xi + k) / m);
        }
        dev[j] = std::abs(periodization_at(profile, m * b, xi) - folded);
    });
    return *std::max_element(dev.begin(), dev.end());
}

double toeplitz_min_eigenvalue(const PeriodizedSpectrum& ps, std::size_t size) {
    if (size == 0) {
        throw InvalidArgument("Toeplitz section needs positive size");
    }
    std::vector<std::complex<double>> coeff(size);
    for (std::size_t k = 0; k < size; ++k) {
        coeff[k] = fourier_coeff(ps, static_cast<long>(k));
    }
    const auto n = static_cast<Eigen::Index>(size);
    Eigen::MatrixXcd t(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            // Φ̂_b(j - i); Φ̂_b(-k) = conj(Φ̂_b(k)) since Φ_b is real.
            t(i, j) = j >= i ? coeff[static_cast<std::size_t>(j - i)]
                             : std::conj(coeff[static_cast<std::size_t>(i - j)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(t, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

} // namespace frameseq
