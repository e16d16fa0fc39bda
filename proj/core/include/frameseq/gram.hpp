#pragma once

#include "frameseq/periodization.hpp"
#include "frameseq/spectrum.hpp"
#include "frameseq/translation_set.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace frameseq {

/// Largest Gram dimension handled by the dense eigen-solver.
inline constexpr std::size_t kMaxGramDimension = 2048;

/// Finite Gram matrix G_ij = (1/b) Φ̂_b(λ_j - λ_i) of the translates
/// (τ_{λ b} φ)_{λ ∈ Λ}. Hermitian; real when the profile is even.
struct GramOperator {
    Eigen::MatrixXcd entries;
    std::vector<double> indices;
    double b = 1.0;
    double tol = 1e-10;
    std::size_t cross_checked = 0; // entries compared against the autocorrelation route
    double max_cross_check_error = 0.0;

    std::size_t dimension() const { return indices.size(); }
};

/// Entries from the exact Fourier coefficients of a shared Φ_b; a random 5%
/// of the distinct shifts (at least one) is recomputed through
/// autocorrelation() and must agree within 10·tol, else InconsistencyError.
/// Λ must be integer valued with at most kMaxGramDimension points.
GramOperator build_gram(const FourierProfile& profile, double b, const TranslationSet& lambda,
                        double tol = 1e-10, std::uint64_t seed = 0);

struct FrameEstimate {
    double A_est = 0.0;
    double B_est = 0.0;
    std::size_t numerical_rank = 0;
    double min_eigenvalue = 0.0;
    bool degenerate = false;
};

/// B = λ_max, A = smallest eigenvalue above kernel_tol·λ_max, rank = number
/// of such eigenvalues. Degenerate when λ_max <= 0.
FrameEstimate frame_bound_estimates(const GramOperator& g, double kernel_tol = 1e-6);

/// (inf_nonzero / b, sup / b) from the grid with the given threshold.
std::pair<double, double> bounds_from_phi(const PeriodizedSpectrum& ps, double zero_thresh);
/// Same with the default threshold.
std::pair<double, double> bounds_from_phi(const PeriodizedSpectrum& ps);

enum class Classification {
    orthonormal,
    exact_frame_sequence,
    frame_sequence,
    upper_bound_only,
    not_frame_sequence,
    undetermined,
};

std::string to_string(Classification c);
/// Orthonormal, exact or non-exact frame sequence.
bool is_frame(Classification c);

struct Evidence {
    std::string criterion;
    std::string rule;
    std::vector<std::pair<std::string, double>> values;
};

struct FrameReport {
    double A_est = 0.0;
    double B_est = 0.0;
    std::size_t numerical_rank = 0;
    double A_phi = 0.0;
    double B_phi = 0.0;
    Classification classification = Classification::undetermined;
    std::vector<Evidence> evidence;
    double b = 1.0;
    double spacing = 1.0; // spacing of the lattice analysed (m b for mℤ)
    std::size_t grid_size = 0;
    std::string window;
};

struct Budgets {
    std::size_t grid_size = 4096;
    int refinement_levels = 4;
    std::size_t max_dimension = kMaxGramDimension;
    double kernel_tol = 1e-6;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

/// Rule-based classification of (τ_{λ b} φ)_{λ ∈ Λ}:
///  orthonormal when Φ_b ≡ b;
///  ℤ from the grid refinement study of Φ_b;
///  {1..N} frame iff exact over ℤ;
///  mℤ through Φ_{mb};
///  other sets from Gram eigenvalue trends over nested windows.
FrameReport classify(const FourierProfile& profile, double b, const TranslationSet& lambda,
                     const Budgets& budgets = {});

/// A_est over Λ = {1..N} for each N. Refuses unless the ℤ family is a
/// non-exact frame sequence.
std::vector<double> truncation_decay(const FourierProfile& profile, double b,
                                     const std::vector<long>& N_list, const Budgets& budgets = {});

struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double deviation = 0.0;
};

/// lhs = c* G c; rhs = (1/b) ∫_0^1 |f|² Φ_b with f(ξ) = Σ_k c_k e^{-2πiλ_k ξ},
/// by Gauss-Legendre on the polynomial segments of Φ_b; deviation is
/// relative.
IdentityCheck weighted_norm_identity_check(const FourierProfile& profile, double b,
                                           const GramOperator& gram,
                                           const std::vector<std::complex<double>>& coefficients);

} // namespace frameseq
