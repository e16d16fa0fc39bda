#pragma once

#include "frameseq/spectrum.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace frameseq {

/// A finite window of a translation set Λ, realised as a strictly
/// increasing list. The generator that produced it is kept so that
/// classification rules can recognise ℤ, mℤ and {1..N}.
class TranslationSet {
public:
    enum class Kind { explicit_points, integers, multiples, naturals, powers, geometric, dyadic };

    /// Sorted on input; duplicates are rejected.
    static TranslationSet explicit_points(std::vector<double> points);
    /// ℤ ∩ [-N, N].
    static TranslationSet integers(long N);
    /// mℤ ∩ [-N, N].
    static TranslationSet multiples(long m, long N);
    /// {1, ..., N}.
    static TranslationSet naturals(long N);
    /// {n^k : 0 <= n <= n_max}.
    static TranslationSet powers(int k, long n_max);
    /// {base^n : 0 <= n <= n_max}.
    static TranslationSet geometric(long base, long n_max);
    /// Union over 1 <= n <= n_max of {2^n + k 2^{m_n} : 1 <= k <= 2^{n - m_n}}
    /// with m_n = max(floor(alpha n - sqrt n), 0).
    static TranslationSet dyadic(double alpha, long n_max);

    Kind kind() const { return kind_; }
    std::span<const double> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool integer_valued() const { return integer_valued_; }
    /// True for generator-described (conceptually infinite) sets.
    bool windowed() const { return kind_ != Kind::explicit_points; }
    /// Extent of the realised window, back - front.
    double extent() const { return points_.back() - points_.front(); }

    /// Step m of a multiples set (1 for integers).
    long modulus() const { return modulus_; }
    double alpha() const { return alpha_; }
    long parameter() const { return parameter_; }

    /// The first count points, as an explicit set of the same kind metadata.
    TranslationSet prefix(std::size_t count) const;
    /// Every point shifted by s.
    TranslationSet shifted(double s) const;

    std::string describe() const;

private:
    TranslationSet() = default;
    static TranslationSet make(Kind kind, std::vector<double> points, bool integer_valued);

    Kind kind_ = Kind::explicit_points;
    std::vector<double> points_;
    bool integer_valued_ = false;
    long modulus_ = 1;
    long parameter_ = 0;
    double alpha_ = 0.0;
};

/// m_n = max(floor(alpha n - sqrt n), 0).
long dyadic_m(double alpha, long n);

/// D_Λ(x) = max_t |Λ ∩ [t, t+x]| over the realised window. For windowed
/// sets the window must be longer than x.
std::size_t density(const TranslationSet& lambda, double x);

struct SparsityReport {
    std::vector<std::size_t> intersections;      // |Λ ∩ (Λ+n)|, n = 1..n_max
    std::vector<std::size_t> half_intersections; // same on the first half of the window
    bool saturated = false;                      // counts equal on window and half window
    bool gaps_nondecreasing = false;
    double first_gap = 0.0;
    double last_gap = 0.0;
    bool gaps_growing = false; // last gap at least twice the gap at mid-window
    bool sparse = false;
};

/// Window-relative sparsity diagnostic for integer sets.
SparsityReport is_sparse(const TranslationSet& lambda, long n_max);

/// G(x) = F(x) ∫_0^x F + ∫_x^∞ F².
double g_function(const TimeEnvelope& F, double x);

enum class Verdict { converges, diverges, bounded, violated, undetermined };
std::string to_string(Verdict v);

struct SufficientReport {
    double integral_estimate = 0.0; // ∫_1^{x_max} G D dx/x
    double tail_estimate = 0.0;     // analytic tail, when it converges
    double g_exponent = 0.0;
    double d_exponent = 0.0;
    bool tail_modelled = false;
    Verdict verdict = Verdict::undetermined;
    double x_max = 0.0;
};

/// ∫_1^∞ G(x) D_Λ(x) dx / x: log-grid quadrature up to x_max plus a
/// power-law tail for power envelopes.
SufficientReport upper_bound_sufficient(const TimeEnvelope& F, const TranslationSet& lambda,
                                        double x_max);

struct NecessaryReport {
    double sup_estimate = 0.0;   // sup over [1, x_max] of G·D
    double sup_reference = 0.0;  // sup over [1, reference_fraction·x_max]
    double growth_factor = 0.0;
    double x_max = 0.0;
    double reference_fraction = 0.25;
    Verdict verdict = Verdict::undetermined;
    std::vector<std::pair<double, double>> table; // (x, G(x) D(x))
};

/// sup_{1 <= x <= x_max} G(x) D_Λ(x) and its growth from reference_fraction·x_max
/// to x_max: violated when >= 1.5, bounded when < 1.1.
NecessaryReport upper_bound_necessary(const TimeEnvelope& F, const TranslationSet& lambda,
                                      double x_max, double reference_fraction = 0.25);

struct IntervalEnergyRow {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    double pair_sum = 0.0;
    double ratio = 0.0;
    std::string note;
};

/// For each closed interval I: Σ_{λ_m, λ_n ∈ I} G(|λ_m - λ_n|), |Λ ∩ I| and
/// their ratio. Requires a power envelope.
std::vector<IntervalEnergyRow> interval_energy_test(const TimeEnvelope& F, const TranslationSet& lambda,
                                                    std::span<const std::pair<double, double>> intervals);

struct RegularityReport {
    double constant = 0.0; // max over grid of max(G/(xF²), xF²/G)
    double epsilon = 0.0;  // ε for which both monotonicity hypotheses hold
};

/// Requires x^{1-ε}F(x) increasing and x^{1+ε}F(x)² decreasing on the grid
/// points x >= 1 for some ε > 0; refuses naming the failed hypothesis.
RegularityReport regularity_constant_check(const TimeEnvelope& F, std::span<const double> x_grid);

} // namespace frameseq
