#pragma once

#include "frameseq/closed_forms.hpp"
#include "frameseq/spectrum.hpp"

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace frameseq {

/// Φ_b restricted to [lo, hi) ⊂ [0, 1) is the quadratic q(ξ) (absolute ξ).
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    Quadratic q{};
};

/// Samples of Φ_b(ξ) = Σ_n |φ̂((ξ+n)/b)|² at the midpoints ξ_j = (j+½)/M,
/// together with an exact piecewise-quadratic representation when Φ_b comes
/// from a profile.
class PeriodizedSpectrum {
public:
    /// A spectrum known only through its samples (e.g. a constructed Φ).
    static PeriodizedSpectrum from_samples(double b, std::vector<double> values);

    double b() const { return b_; }
    std::size_t grid_size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double xi(std::size_t j) const {
        return (static_cast<double>(j) + 0.5) / static_cast<double>(values_.size());
    }
    /// Summation covers |n| <= K.
    long truncation_range() const { return truncation_range_; }
    double tail_bound() const { return tail_bound_; }

    /// True when segments() describes Φ_b exactly.
    bool has_segments() const { return !segments_.empty(); }
    std::span<const Segment> segments() const { return segments_; }

    /// (1/M) Σ_j values[j].
    double grid_mean() const;

private:
    friend PeriodizedSpectrum periodize(const FourierProfile&, double, std::size_t, double);

    double b_ = 1.0;
    std::vector<double> values_;
    long truncation_range_ = 0;
    double tail_bound_ = 0.0;
    std::vector<Segment> segments_;
};

/// Φ_b on the midpoint grid of size M (a power of two, M >= 16). Profiles
/// have compact support, so the sum is finite: K covers the support exactly
/// and tail_bound is 0. tail_tol is accepted for interface symmetry.
PeriodizedSpectrum periodize(const FourierProfile& profile, double b, std::size_t M,
                             double tail_tol = 1e-12);

/// Φ_b(ξ) at a single point, by direct summation.
double periodization_at(const FourierProfile& profile, double b, double xi);

/// Φ̂_b(n) = ∫_0^1 Φ_b(ξ) e^{-2πinξ} dξ. Exact from the segments when
/// present, otherwise the discrete transform of the samples. Refuses
/// |n| >= M/2.
std::complex<double> fourier_coeff(const PeriodizedSpectrum& ps, long n);

/// Discrete transform (1/M) Σ_j values[j] e^{-2πinξ_j}; refuses |n| >= M/2.
std::complex<double> grid_fourier_coeff(const PeriodizedSpectrum& ps, long n);

struct EssentialBounds {
    double inf_nonzero = std::numeric_limits<double>::infinity();
    double sup = 0.0;
    double zero_fraction = 0.0;
};

/// Grid extrema: sup over all samples, inf over samples above zero_thresh,
/// and the fraction of samples at or below zero_thresh.
EssentialBounds essential_bounds(const PeriodizedSpectrum& ps, double zero_thresh);

/// Default zero threshold: 1e-8 times the grid sup.
double default_zero_threshold(const PeriodizedSpectrum& ps);

struct ZeroRuns {
    std::size_t count = 0;
    /// [lo, hi] of each run; a run wrapping through ξ = 0 has hi > 1.
    std::vector<std::pair<double, double>> intervals;
};

/// Maximal runs (cyclic on 𝕋) of samples at or below zero_thresh. Refuses
/// when more than half the grid is below the threshold.
ZeroRuns zero_count(const PeriodizedSpectrum& ps, double zero_thresh);

/// Bounds of one level of a grid refinement study.
struct RefinementLevel {
    std::size_t grid_size = 0;
    EssentialBounds bounds;
    std::size_t zero_runs = 0; // maximal runs below threshold (no refusal)
};

/// essential_bounds at M, 2M, ..., 2^{levels-1} M with the threshold
/// rel_thresh * sup of the coarsest level.
std::vector<RefinementLevel> refinement_study(const FourierProfile& profile, double b,
                                              std::size_t M, int levels = 4,
                                              double rel_thresh = 1e-12);

/// max_j |Φ_{mb}(ξ_j) - Σ_{k<m} Φ_b((ξ_j + k)/m)| over the midpoint grid.
double dilation_deviation(const FourierProfile& profile, double b, int m, std::size_t M);

/// Smallest eigenvalue of the Hermitian Toeplitz section [Φ̂_b(j - i)]_{i,j<size}.
double toeplitz_min_eigenvalue(const PeriodizedSpectrum& ps, std::size_t size);

} // namespace frameseq
