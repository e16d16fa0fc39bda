#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace frameseq {

/// Constant value on the piece.
struct ConstantShape {
    double value = 0.0;
};

/// slope * xi + intercept, with xi the absolute frequency (not relative to
/// the piece start).
struct AffineShape {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Piecewise-constant nonnegative samples over equal sub-cells of the piece.
struct SampledShape {
    std::vector<double> cells;
};

using Shape = std::variant<ConstantShape, AffineShape, SampledShape>;

/// One piece [lo, hi) of a Fourier profile.
struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    Shape shape;
};

/// The Fourier transform of a generator, given as a sorted list of disjoint
/// pieces with closed-form shapes. The profile is zero outside its pieces.
///
/// Only real-valued profiles are represented; complex spectra are not
/// supported.
class FourierProfile {
public:
    explicit FourierProfile(std::vector<Piece> pieces);

    /// Height * indicator of [lo, hi).
    static FourierProfile indicator(double lo, double hi, double height = 1.0);

    double operator()(double xi) const;

    std::span<const Piece> pieces() const { return pieces_; }
    double support_lo() const { return pieces_.front().lo; }
    double support_hi() const { return pieces_.back().hi; }

    /// ‖φ‖² = ∫|φ̂|², computed exactly.
    double energy() const { return energy_; }

    /// Profile of s·φ.
    FourierProfile scaled(double s) const;

    /// True when the profile is symmetric about xi = 0 (real-even spectrum).
    bool is_even(double tol = 1e-14) const;

private:
    std::vector<Piece> pieces_;
    double energy_ = 0.0;
};

/// φ̂(xi); zero outside the declared pieces.
double eval_spectrum(const FourierProfile& profile, double xi);

/// Increasing rate function h(x) = scale * x^power * log(e + x)^log_power
/// used by exponential envelopes.
struct RateFunction {
    double scale = 1.0;
    double power = 1.0;
    double log_power = 0.0;

    double operator()(double x) const;
};

/// Result of checking that a rate function is admissible: doubling
/// constants c1 <= h(2x)/h(x) <= c2 with c1 > 1 on a sample grid, and the
/// divergence of ∫_1^∞ h(t)/t² dt judged from partial sums over dyadic
/// blocks.
struct RateCheck {
    double c1 = 0.0;
    double c2 = 0.0;
    bool doubling_ok = false;
    std::vector<double> partial_sums; // ∫_1^{2^k} h(t)/t² dt, k = 1..
    bool integral_diverges = false;
    bool admissible() const { return doubling_ok && integral_diverges; }
};

RateCheck check_rate_function(const RateFunction& h);

/// A monotone decreasing majorant F on (0, ∞) of a generator's decay.
/// Capped so that F <= 1; ψ(x) = F(|x|) is the realised generator.
class TimeEnvelope {
public:
    enum class Kind { power, exponential, tabulated };

    /// F(x) = min(1, x^{-a}), a > 1/2.
    static TimeEnvelope power(double a);
    /// F(x) = exp(-delta h(x)), delta > 0, h admissible.
    static TimeEnvelope exponential(double delta, RateFunction h);
    /// Tabulated knots (x_i, F_i), interpolated linearly in log-log
    /// coordinates, constant before the first knot and extrapolated with the
    /// last log-log slope after the final one.
    static TimeEnvelope tabulated(std::vector<double> x, std::vector<double> f);

    Kind kind() const { return kind_; }
    double operator()(double x) const;

    /// F in L¹(0, ∞).
    bool integrable() const;

    /// The exponent a of a power envelope.
    std::optional<double> power_exponent() const;

    /// p with F(x) ~ x^{-p} as x → ∞; +inf for exponential envelopes.
    double tail_exponent() const;

    /// ∫_0^x F(t) dt.
    double integral(double x) const;
    /// ∫_x^∞ F(t)² dt.
    double tail_square_integral(double x) const;

    double delta() const { return delta_; }
    const RateFunction& rate() const { return rate_; }
    std::span<const double> knots_x() const { return knots_x_; }
    std::span<const double> knots_f() const { return knots_f_; }

    /// Points where F is not smooth (cap, tabulated knots).
    std::vector<double> breakpoints() const;

    std::string describe() const;

private:
    TimeEnvelope() = default;

    Kind kind_ = Kind::power;
    double exponent_ = 1.0;
    double delta_ = 1.0;
    RateFunction rate_;
    std::vector<double> knots_x_;
    std::vector<double> knots_f_;
    std::vector<double> log_x_;
    std::vector<double> log_f_;
};

/// ⟨τ_a φ, φ⟩ = ∫ |φ̂(ξ)|² e^{-2πi a ξ} dξ, evaluated in closed form piece by
/// piece. The imaginary part vanishes for even profiles.
std::complex<double> autocorrelation(const FourierProfile& profile, double shift);

/// ∫ ψ(x) ψ(x - a) dx for ψ(x) = F(|x|), by adaptive Gauss-Kronrod
/// quadrature with an algebraic tail substitution. Throws QuadratureError
/// if the estimated error exceeds tol (absolute, scaled by max(1, |value|)).
double autocorrelation(const TimeEnvelope& envelope, double shift, double tol = 1e-10);

/// φ(x) = ∫ φ̂(ξ) e^{2πi x ξ} dξ for a profile, in closed form.
std::complex<double> inverse_transform(const FourierProfile& profile, double x);

} // namespace frameseq
