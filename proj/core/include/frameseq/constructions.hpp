#pragma once

#include "frameseq/hausdorff.hpp"
#include "frameseq/periodization.hpp"
#include "frameseq/spectrum.hpp"
#include "frameseq/translation_set.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace frameseq {

/// 1 on [0, 1/a), then the line from 1 down to 0 on [1/a, 1/b).
/// Translates are a frame sequence at spacing a but not at spacing b.
/// Needs 0 < b < a.
FourierProfile plateau_ramp_profile(double a, double b);

struct RampPlateau {
    FourierProfile profile;
    double epsilon = 0.0;
    /// Φ_b >= min(1, c²) away from its zeros, c = min(ε, ε/b, bε).
    double lower_constant = 0.0;
};

/// φ̂(ξ) = ξ on [0, 1/a), 1 on [1/b, 1/b + ε). ε is the largest value on a
/// bisection to 2^-20 such that (ξ+n)/a avoids [1/b, 1/b+ε] for ξ ∈ (0, ε)
/// and |n| <= ceil(4a) + 16. Translates are a frame sequence at spacing b
/// but not at spacing a. Needs 0 < b < a with a/b not an integer.
RampPlateau ramp_plateau_profile(double a, double b);

struct DyadicBlock {
    long n = 0;
    long m = 0;
    std::size_t first = 0; // index into the realised set
    std::size_t count = 0; // 2^{n-m}
};

struct DyadicConstruction {
    double alpha = 0.0;
    long n_max = 0;
    std::vector<long> m;            // m[n] for n = 0..n_max (m[0] unused)
    TranslationSet lambda;
    std::vector<DyadicBlock> blocks; // one per n = 1..n_max
};

DyadicConstruction dyadic_construction(double alpha, long n_max);

struct BlockPolynomial {
    long n = 0;
    long m = 0;
    std::vector<long> frequencies;   // 2^n + k 2^m, k = 1..2^{n-m}
    Coefficients coefficients;       // all equal to 2^{(m-n)/2}
    std::vector<double> modulus;     // |f_n(ξ_j)| on the midpoint grid, by summation
    double closed_form_deviation = 0.0; // max |summed - sine ratio|
};

/// |f_n(ξ)| = 2^{(m-n)/2} |sin(π 2^n ξ) / sin(π 2^m ξ)|.
double block_modulus_closed_form(long n, long m, double xi);
/// |f_n(ξ)| by direct summation.
double block_modulus_sum(long n, long m, double xi);

/// The normalised block polynomial f_n of the dyadic construction sampled
/// on a grid of size M (a power of two).
BlockPolynomial dyadic_block_polynomial(double alpha, long n, std::size_t M);

struct DyadicLevel {
    long n = 0;
    long m = 0;
    double large_set_measure = 0.0; // |F_n|
    double large_set_bound = 0.0;   // 2^{m - n + √n / 2}
    double small_set_energy = 0.0;  // ∫_{E_n} |f_n|²
    double small_set_bound = 0.0;   // 2^{-√n / 2}
};

struct DyadicWeight {
    double alpha = 0.0;
    long n_max = 0;
    PeriodizedSpectrum phi;   // Φ sampled on the grid, b = 1
    FourierProfile profile;   // φ̂ = Φ^{1/2} on [0, 1)
    std::vector<DyadicLevel> levels;
};

/// E_n = {|f_n| < 2^{(n - m_n - √n/2)/2}}, F_n its complement, F_0 = 𝕋, and
/// Φ(ξ) = min{2^{-k} : ξ ∈ F_k, k <= n_max}. Needs M >= 2^{n_max + 2}.
/// Verifies Φ > 0 on the grid and that periodizing the emitted profile at
/// b = 1 reproduces Φ.
DyadicWeight dyadic_weight(double alpha, long n_max, std::size_t M);

struct CounterexampleTrend {
    std::vector<std::pair<long, double>> weights; // (n, w_n = ∫ |f_n|² Φ)
    std::vector<std::pair<long, double>> norms;   // (n, ‖f_n‖²)
    bool decreasing = false;                      // w at n_hi < w at n_lo / 2
    std::vector<std::pair<long, double>> density; // (p, D_Λ(2^p))
    double density_exponent = 0.0;                // fit over p = n_max-3..n_max
    bool density_ok = false;                      // <= 1 - α + 0.1
    double density_constant = 0.0;                // max_p D_Λ(2^p) / 2^{p - m_p}
    bool phi_positive = false;
    std::string conclusion;
};

/// w_n for n_lo <= n <= n_hi on the dyadic weight with the given n_max, the
/// density exponent of Λ, and the joint verdict.
CounterexampleTrend dyadic_counterexample_trend(double alpha, long n_max, long n_lo, long n_hi, std::size_t M);

} // namespace frameseq
