#pragma once

#include "frameseq/gram.hpp"
#include "frameseq/periodization.hpp"
#include "frameseq/spectrum.hpp"
#include "frameseq/translation_set.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frameseq {

/// Dyadic cover of the small-value set {Φ_b <= ε}.
struct CoverEstimate {
    double alpha = 0.0;
    double epsilon = 0.0;
    int depth = 0;                                 // depth attaining the minimum
    std::vector<std::pair<double, double>> intervals; // dyadic boxes at that depth
    double measure_sum = 0.0;                      // Σ ℓ(I)^α
    std::size_t covered_points = 0;                // grid points to be covered
    std::vector<std::pair<int, double>> per_depth; // (depth, Σ ℓ^α)
    bool full_circle = false;                      // ε >= sup: warning
};

/// Covers the grid points with Φ_b <= ε (isolated single-point runs are
/// treated as a null set and dropped) by the dyadic intervals of length
/// 2^{-d} that contain them, for each d in depths, and keeps the depth
/// minimising Σ ℓ^α. Depths must lie in [0, log2 M].
CoverEstimate hausdorff_sublevel(const PeriodizedSpectrum& ps, double alpha, double epsilon,
                                 const std::vector<int>& depths);

/// All depths 0..log2 M.
std::vector<int> all_depths(const PeriodizedSpectrum& ps);

/// Coefficients of f = Σ_k c_k e^{2πiλ_k ξ} on an integer set Λ.
using Coefficients = std::vector<std::complex<double>>;

struct CoefficientDensityResult {
    double lhs = 0.0;      // Σ_{n∈J} |F̂(n)|, F = |f|²
    double rhs = 0.0;      // D_Λ(|J|), |J| = number of integers in J
    bool pass = false;
    bool normalized = false; // input was rescaled to ‖f‖ = 1
};

/// J = {j_lo, ..., j_hi}. F̂ is computed exactly from the pair differences.
CoefficientDensityResult coefficient_density_check(const TranslationSet& lambda, Coefficients coefficients, long j_lo, long j_hi);

struct IntervalMassResult {
    double integral = 0.0; // ∫_I |f|²
    double length = 0.0;
    double density = 0.0;  // D_Λ(1/ℓ(I))
    double ratio = 0.0;    // integral / (ℓ D)
};

/// I = [lo, hi] ⊂ 𝕋 with 0 < hi - lo <= 1; the integral is exact.
IntervalMassResult interval_mass_check(const TranslationSet& lambda, Coefficients coefficients, double lo, double hi);

struct IntervalMassScan {
    std::vector<double> lengths;
    std::vector<double> max_ratio;
    double slope = 0.0; // least squares of log2 max_ratio against log2 length
};

/// Max ratio over random unit-norm f (complex Gaussian coefficients) and
/// random interval centres, per interval length. Trial t uses a seed
/// derived from (seed, t).
IntervalMassScan interval_mass_random_scan(const TranslationSet& lambda, std::size_t trials,
                                const std::vector<double>& lengths, std::uint64_t seed);

/// Ratio at each length for the fixed input f, intervals centred at centre.
IntervalMassScan interval_mass_scan(const TranslationSet& lambda, const Coefficients& coefficients,
                         const std::vector<double>& lengths, double centre);

struct DecayFit {
    std::vector<std::pair<double, double>> samples; // (x, max |φ| on [x, 2x])
    double exponent = 0.0;                          // -slope of the log-log fit
};

/// Decay of |φ(x)| from the closed-form inverse transform on dyadic blocks
/// [2^k, 2^{k+1}], k = k_lo..k_hi.
DecayFit fit_decay(const FourierProfile& profile, int k_lo = 4, int k_hi = 12);

/// Least-squares slope of log D_Λ(x) against log x over x = extent·2^{-j},
/// j = 1..doublings.
double density_exponent(const TranslationSet& lambda, int doublings = 4);

struct HypothesisEvidence {
    DecayFit decay;
    bool decay_ok = false;
    std::vector<std::pair<double, double>> hausdorff; // (ε, Σ ℓ^α)
    bool hausdorff_ok = false;
    double density_exponent = 0.0;
    bool density_ok = false;
    std::vector<std::string> failed;
    bool all_hold = false;
    bool gram_checked = false;
    std::vector<std::pair<std::size_t, double>> A_est; // (window size, A_est)
    bool bounded_below = false;
    Classification classification = Classification::undetermined;
};

/// Checks decay |φ(x)| = O(x^{-a-δ}), the shrinking (2a-1)-Hausdorff measure
/// of {Φ_b <= ε}, and D_Λ(x) = O(x^{2(1-a)}); when all hold, runs the Gram
/// trend over nested windows of Λ. Needs 1/2 < a < 1.
HypothesisEvidence sparse_exactness_evidence(const FourierProfile& profile, double b, const TranslationSet& lambda,
                                      double a, const Budgets& budgets = {});

} // namespace frameseq
