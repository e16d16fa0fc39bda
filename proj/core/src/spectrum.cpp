#include "frameseq/spectrum.hpp"

#include "frameseq/closed_forms.hpp"
#include "frameseq/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace frameseq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double piece_value(const Piece& p, double xi) {
    return std::visit(
        [&](const auto& s) -> double {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, ConstantShape>) {
                return s.value;
            } else if constexpr (std::is_same_v<S, AffineShape>) {
                return s.slope * xi + s.intercept;
            } else {
                const double width = (p.hi - p.lo) / static_cast<double>(s.cells.size());
                auto idx = static_cast<std::size_t>(std::floor((xi - p.lo) / width));
                idx = std::min(idx, s.cells.size() - 1);
                return s.cells[idx];
            }
        },
        p.shape);
}

// ∫_piece (shape(ξ))^power_sel e^{-i ω ξ} dξ where the integrand is either
// the shape itself (squared == false) or its square.
std::complex<double> piece_integral(const Piece& p, double omega, bool squared) {
    return std::visit(
        [&](const auto& s) -> std::complex<double> {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, ConstantShape>) {
                const double v = squared ? s.value * s.value : s.value;
                return integrate_quadratic_exp({v, 0.0, 0.0}, p.lo, p.hi, omega);
            } else if constexpr (std::is_same_v<S, AffineShape>) {
                const Quadratic q = squared ? square_affine(s.slope, s.intercept)
                                            : Quadratic{s.intercept, s.slope, 0.0};
                return integrate_quadratic_exp(q, p.lo, p.hi, omega);
            } else {
                const double width = (p.hi - p.lo) / static_cast<double>(s.cells.size());
                std::complex<double> total{0.0, 0.0};
                if (omega == 0.0) {
                    for (double c : s.cells) {
                        total += squared ? c * c : c;
                    }
                    return total * width;
                }
                // Equal cells: ∫_cell e^{-iωξ} = width·sinc(ω width/2)·e^{-iω mid}.
                const double u = 0.5 * omega * width;
                const double sinc = std::abs(u) < 1e-8 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
                const std::complex<double> step = std::polar(1.0, -omega * width);
                std::complex<double> phase = std::polar(1.0, -omega * (p.lo + 0.5 * width));
                for (std::size_t i = 0; i < s.cells.size(); ++i) {
                    const double c = s.cells[i];
                    total += (squared ? c * c : c) * phase;
                    phase *= step;
                    if ((i & 255u) == 255u) {
                        // Re-anchor the rotating phase to limit drift.
                        phase = std::polar(1.0, -omega * (p.lo + (static_cast<double>(i) + 1.5) * width));
                    }
                }
                return total * width * sinc;
            }
        },
        p.shape);
}

void validate_piece(const Piece& p) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi) || !(p.lo < p.hi)) {
        throw InvalidArgument("profile piece must be a finite interval [lo, hi) with lo < hi");
    }
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, ConstantShape>) {
                if (!std::isfinite(s.value)) {
                    throw InvalidArgument("constant shape must be finite");
                }
            } else if constexpr (std::is_same_v<S, AffineShape>) {
                if (!std::isfinite(s.slope) || !std::isfinite(s.intercept)) {
                    throw InvalidArgument("affine shape must be finite");
                }
            } else {
                if (s.cells.empty()) {
                    throw InvalidArgument("sampled shape needs at least one cell");
                }
                for (double c : s.cells) {
                    if (!std::isfinite(c) || c < 0.0) {
                        throw InvalidArgument("sampled shape values must be finite and nonnegative");
                    }
                }
            }
        },
        p.shape);
}

// Gauss-Kronrod on [lo, hi]; accumulates the error estimate.
template <class F>
double gk_integrate(F&& f, double lo, double hi, double rel_tol, double& error) {
    double err = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, lo, hi, 20, rel_tol, &err, &l1);
    error += err;
    return value;
}

} // namespace

// ---------------------------------------------------------------------------
// FourierProfile

FourierProfile::FourierProfile(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) {
        throw InvalidArgument("profile needs at least one piece");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        validate_piece(pieces_[i]);
        if (i > 0 && pieces_[i].lo < pieces_[i - 1].hi) {
            throw InvalidArgument("profile pieces must be sorted and pairwise disjoint");
        }
    }
    energy_ = 0.0;
    for (const auto& p : pieces_) {
        energy_ += piece_integral(p, 0.0, true).real();
    }
    if (!(energy_ > 0.0)) {
        throw InvalidArgument("profile has zero energy (φ = 0)");
    }
}

FourierProfile FourierProfile::indicator(double lo, double hi, double height) {
    return FourierProfile({Piece{lo, hi, ConstantShape{height}}});
}

double FourierProfile::operator()(double xi) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), xi,
                               [](double x, const Piece& p) { return x < p.lo; });
    if (it == pieces_.begin()) {
        return 0.0;
    }
    --it;
    return xi < it->hi ? piece_value(*it, xi) : 0.0;
}

FourierProfile FourierProfile::scaled(double s) const {
    std::vector<Piece> out = pieces_;
    for (auto& p : out) {
        std::visit(
            [&](auto& shape) {
                using S = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<S, ConstantShape>) {
                    shape.value *= s;
                } else if constexpr (std::is_same_v<S, AffineShape>) {
                    shape.slope *= s;
                    shape.intercept *= s;
                } else {
                    for (double& c : shape.cells) {
                        c *= std::abs(s);
                    }
                }
            },
            p.shape);
    }
    return FourierProfile(std::move(out));
}

bool FourierProfile::is_even(double tol) const {
    if (std::abs(support_lo() + support_hi()) > tol) {
        return false;
    }
    std::vector<double> probes;
    for (const auto& p : pieces_) {
        probes.push_back(0.5 * (p.lo + p.hi));
        probes.push_back(p.lo + 0.25 * (p.hi - p.lo));
        probes.push_back(p.lo + 0.75 * (p.hi - p.lo));
    }
    const double scale = std::max(1.0, std::sqrt(energy_));
    for (double x : probes) {
        if (std::abs((*this)(x) - (*this)(-x)) > tol * scale) {
            return false;
        }
    }
    return true;
}

double eval_spectrum(const FourierProfile& profile, double xi) { return profile(xi); }

// ---------------------------------------------------------------------------
// Rate functions

double RateFunction::operator()(double x) const {
    if (x <= 0.0) {
        return 0.0;
    }
    return scale * std::pow(x, power) * std::pow(std::log(std::numbers::e + x), log_power);
}

RateCheck check_rate_function(const RateFunction& h) {
    RateCheck out;
    if (!(h.scale > 0.0) || !(h.power > 0.0)) {
        return out;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool increasing = true;
    double prev = 0.0;
    for (int k = -40; k <= 160; ++k) {
        const double x = std::ldexp(1.0, 0) * std::pow(2.0, k / 4.0);
        const double hx = h(x);
        const double ratio = h(2.0 * x) / hx;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        if (k > -40 && hx <= prev) {
            increasing = false;
        }
        prev = hx;
    }
    out.c1 = lo;
    out.c2 = hi;
    out.doubling_ok = increasing && lo > 1.0 && std::isfinite(hi);

    // Dyadic blocks of ∫_1^∞ h(t) t^{-2} dt, in the variable s = log t.
    const auto integrand = [&](double s) { return h(std::exp(s)) * std::exp(-s); };
    double total = 0.0;
    std::vector<double> blocks;
    for (int k = 1; k <= 40; ++k) {
        double err = 0.0;
        const double block = gk_integrate(integrand, (k - 1) * std::numbers::ln2,
                                          k * std::numbers::ln2, 1e-10, err);
        blocks.push_back(block);
        total += block;
        out.partial_sums.push_back(total);
    }
    // Block contents decaying like 1/k or slower mean divergence.
    const double late = 40.0 * blocks[39];
    const double mid = 20.0 * blocks[19];
    out.integral_diverges = late >= 0.9 * mid;
    return out;
}

// ---------------------------------------------------------------------------
// TimeEnvelope

TimeEnvelope TimeEnvelope::power(double a) {
    if (!(a > 0.5) || !std::isfinite(a)) {
        throw InvalidArgument("power envelope needs exponent a > 1/2 so that F is in L²");
    }
    TimeEnvelope e;
    e.kind_ = Kind::power;
    e.exponent_ = a;
    return e;
}

TimeEnvelope TimeEnvelope::exponential(double delta, RateFunction h) {
    if (!(delta > 0.0)) {
        throw InvalidArgument("exponential envelope needs delta > 0");
    }
    const RateCheck check = check_rate_function(h);
    if (!check.doubling_ok) {
        throw Refusal("rate function fails the doubling condition c1 h(x) <= h(2x) <= c2 h(x), 1 < c1");
    }
    if (!check.integral_diverges) {
        throw Refusal("rate function has convergent ∫_1^∞ h(t)/t² dt");
    }
    TimeEnvelope e;
    e.kind_ = Kind::exponential;
    e.delta_ = delta;
    e.rate_ = h;
    return e;
}

TimeEnvelope TimeEnvelope::tabulated(std::vector<double> x, std::vector<double> f) {
    if (x.size() != f.size() || x.size() < 2) {
        throw InvalidArgument("tabulated envelope needs at least two (x, F) knots of equal count");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(f[i] > 0.0) || !std::isfinite(x[i]) || !std::isfinite(f[i])) {
            throw InvalidArgument("tabulated envelope knots must be positive and finite");
        }
        if (i > 0 && (!(x[i] > x[i - 1]) || f[i] > f[i - 1])) {
            throw InvalidArgument("tabulated envelope must have increasing x and nonincreasing F");
        }
    }
    if (f.front() > 1.0) {
        throw InvalidArgument("tabulated envelope must be capped at 1");
    }
    TimeEnvelope e;
    e.kind_ = Kind::tabulated;
    e.knots_x_ = std::move(x);
    e.knots_f_ = std::move(f);
    for (std::size_t i = 0; i < e.knots_x_.size(); ++i) {
        e.log_x_.push_back(std::log(e.knots_x_[i]));
        e.log_f_.push_back(std::log(e.knots_f_[i]));
    }
    const std::size_t n = e.log_x_.size();
    const double slope = (e.log_f_[n - 1] - e.log_f_[n - 2]) / (e.log_x_[n - 1] - e.log_x_[n - 2]);
    if (!(slope < -0.5)) {
        throw InvalidArgument("tabulated envelope tail slope must be below -1/2 so that F is in L²");
    }
    e.exponent_ = -slope;
    return e;
}

double TimeEnvelope::operator()(double x) const {
    x = std::abs(x);
    switch (kind_) {
    case Kind::power:
        return x <= 1.0 ? 1.0 : std::pow(x, -exponent_);
    case Kind::exponential:
        return std::exp(-delta_ * rate_(x));
    case Kind::tabulated: {
        if (x <= knots_x_.front()) {
            return knots_f_.front();
        }
        const double lx = std::log(x);
        std::size_t i = static_cast<std::size_t>(
            std::upper_bound(log_x_.begin(), log_x_.end(), lx) - log_x_.begin());
        if (i >= log_x_.size()) {
            i = log_x_.size() - 1;
        }
        const double t = (lx - log_x_[i - 1]) / (log_x_[i] - log_x_[i - 1]);
        return std::exp(log_f_[i - 1] + t * (log_f_[i] - log_f_[i - 1]));
    }
    }
    return 0.0;
}

bool TimeEnvelope::integrable() const {
    return kind_ == Kind::exponential || exponent_ > 1.0;
}

std::optional<double> TimeEnvelope::power_exponent() const {
    if (kind_ == Kind::power) {
        return exponent_;
    }
    return std::nullopt;
}

double TimeEnvelope::tail_exponent() const {
    return kind_ == Kind::exponential ? std::numeric_limits<double>::infinity() : exponent_;
}

std::vector<double> TimeEnvelope::breakpoints() const {
    switch (kind_) {
    case Kind::power:
        return {1.0};
    case Kind::exponential:
        return {};
    case Kind::tabulated:
        return knots_x_;
    }
    return {};
}

double TimeEnvelope::integral(double x) const {
    if (x <= 0.0) {
        return 0.0;
    }
    switch (kind_) {
    case Kind::power: {
        if (x <= 1.0) {
            return x;
        }
        const double a = exponent_;
        if (std::abs(a - 1.0) < 1e-14) {
            return 1.0 + std::log(x);
        }
        return 1.0 + (std::pow(x, 1.0 - a) - 1.0) / (1.0 - a);
    }
    case Kind::exponential: {
        double err = 0.0;
        return gk_integrate([&](double t) { return (*this)(t); }, 0.0, x, 1e-12, err);
    }
    case Kind::tabulated: {
        double total = knots_f_.front() * std::min(x, knots_x_.front());
        const std::size_t n = knots_x_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const double start = knots_x_[i];
            if (x <= start) {
                break;
            }
            const bool last = (i + 1 == n);
            const double end = last ? x : std::min(x, knots_x_[i + 1]);
            const double s = last ? -exponent_
                                  : (log_f_[i + 1] - log_f_[i]) / (log_x_[i + 1] - log_x_[i]);
            const double r = end / start;
            total += std::abs(s + 1.0) < 1e-14
                         ? knots_f_[i] * start * std::log(r)
                         : knots_f_[i] * start * (std::pow(r, s + 1.0) - 1.0) / (s + 1.0);
            if (last) {
                break;
            }
        }
        return total;
    }
    }
    return 0.0;
}

double TimeEnvelope::tail_square_integral(double x) const {
    x = std::max(x, 0.0);
    switch (kind_) {
    case Kind::power: {
        const double a = exponent_;
        const double beyond_one = 1.0 / (2.0 * a - 1.0);
        if (x <= 1.0) {
            return (1.0 - x) + beyond_one;
        }
        return std::pow(x, 1.0 - 2.0 * a) / (2.0 * a - 1.0);
    }
    case Kind::exponential: {
        double err = 0.0;
        const auto sq = [&](double t) {
            const double v = (*this)(t);
            return v * v;
        };
        return gk_integrate(sq, x, std::numeric_limits<double>::infinity(), 1e-12, err);
    }
    case Kind::tabulated: {
        double total = 0.0;
        const double f0 = knots_f_.front();
        if (x < knots_x_.front()) {
            total += f0 * f0 * (knots_x_.front() - x);
        }
        const std::size_t n = knots_x_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const bool last = (i + 1 == n);
            const double seg_lo = std::max(x, knots_x_[i]);
            const double s2 = 2.0 * (last ? -exponent_
                                          : (log_f_[i + 1] - log_f_[i]) / (log_x_[i + 1] - log_x_[i]));
            const double fi2 = knots_f_[i] * knots_f_[i];
            const double xi = knots_x_[i];
            // F² = fi² (t/xi)^{s2} on this segment.
            const auto antiderivative_ratio = [&](double r) {
                return std::abs(s2 + 1.0) < 1e-14 ? std::log(r) : std::pow(r, s2 + 1.0) / (s2 + 1.0);
            };
            if (last) {
                // s2 < -1 guaranteed by the L² condition.
                total += fi2 * xi * (0.0 - antiderivative_ratio(seg_lo / xi));
            } else {
                const double seg_hi = knots_x_[i + 1];
                if (seg_lo < seg_hi) {
                    total += fi2 * xi * (antiderivative_ratio(seg_hi / xi) - antiderivative_ratio(seg_lo / xi));
                }
            }
        }
        return total;
    }
    }
    return 0.0;
}

std::string TimeEnvelope::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::power:
        os << "power(a=" << exponent_ << ")";
        break;
    case Kind::exponential:
        os << "exponential(delta=" << delta_ << ", h=" << rate_.scale << "*x^" << rate_.power
           << "*log(e+x)^" << rate_.log_power << ")";
        break;
    case Kind::tabulated:
        os << "tabulated(" << knots_x_.size() << " knots)";
        break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Autocorrelations

std::complex<double> autocorrelation(const FourierProfile& profile, double shift) {
    const double omega = kTwoPi * shift;
    std::complex<double> total{0.0, 0.0};
    for (const auto& p : profile.pieces()) {
        total += piece_integral(p, omega, true);
    }
    return total;
}

std::complex<double> inverse_transform(const FourierProfile& profile, double x) {
    const double omega = -kTwoPi * x;
    std::complex<double> total{0.0, 0.0};
    for (const auto& p : profile.pieces()) {
        total += piece_integral(p, omega, false);
    }
    return total;
}

double autocorrelation(const TimeEnvelope& envelope, double shift, double tol) {
    if (!(tol > 0.0)) {
        throw InvalidArgument("autocorrelation tolerance must be positive");
    }
    // ∫ψ(x)ψ(x−a)dx = ∫ψ(y+t)ψ(y−t)dy with t = |a|/2, even in y.
    const double t = 0.5 * std::abs(shift);
    const auto product = [&](double y) { return envelope(y + t) * envelope(y - t); };

    std::vector<double> cuts{0.0, t};
    double reach = t;
    for (double c : envelope.breakpoints()) {
        for (double y : {c - t, c + t, t - c}) {
            if (y > 0.0) {
                cuts.push_back(y);
            }
        }
        reach = std::max(reach, c + t);
    }
    const double tail_start = 2.0 * (reach + 1.0);
    cuts.push_back(tail_start);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const double seg_tol = 0.05 * tol;
    double error = 0.0;
    double half = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] > cuts[i]) {
            half += gk_integrate(product, cuts[i], cuts[i + 1], seg_tol, error);
        }
    }

    // Tail [X, ∞): y = X u^{-k} flattens an algebraic decay y^{-2p}.
    const double p = envelope.tail_exponent();
    const double k = std::isfinite(p) ? 1.0 / (2.0 * p - 1.0) : 1.0;
    const double X = tail_start;
    const double log_x = std::log(X);
    const auto tail_integrand = [&](double u) -> double {
        if (u <= 0.0) {
            return 0.0;
        }
        const double log_y = log_x - k * std::log(u);
        double log_value = std::log(k) + log_x - (k + 1.0) * std::log(u);
        if (log_y < 700.0) {
            const double y = std::exp(log_y);
            const double f = envelope(y + t) * envelope(y - t);
            if (f <= 0.0) {
                return 0.0;
            }
            log_value += std::log(f);
        } else if (std::isfinite(p)) {
            // Far tail of a power-law decay: F(y±t) ≈ C y^{-p}.
            const auto bps = envelope.breakpoints();
            const double y_ref = bps.empty() ? 1.0 : bps.back();
            log_value += 2.0 * (std::log(envelope(y_ref)) - p * (log_y - std::log(y_ref)));
        } else {
            return 0.0;
        }
        return log_value < -745.0 ? 0.0 : std::exp(log_value);
    };
    half += gk_integrate(tail_integrand, 0.0, 1.0, seg_tol, error);

    const double value = 2.0 * half;
    error *= 2.0;
    if (!(error <= tol * std::max(1.0, std::abs(value))) || !std::isfinite(value)) {
        throw QuadratureError("envelope autocorrelation did not reach the requested tolerance", error);
    }
    return value;
}

} // namespace frameseq
