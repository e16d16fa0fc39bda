#include "frameseq/gram.hpp"

#include "frameseq/error.hpp"
#include "frameseq/parallel.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace frameseq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& m) {
    double scale = 0.0;
    double imag = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            scale = std::max(scale, std::abs(m(i, j)));
            imag = std::max(imag, std::abs(m(i, j).imag()));
        }
    }
    Eigen::VectorXd ev;
    if (imag <= 1e-14 * scale) {
        const Eigen::MatrixXd re = m.real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(re, Eigen::EigenvaluesOnly);
        ev = solver.eigenvalues();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
        ev = solver.eigenvalues();
    }
    return {ev.data(), ev.data() + ev.size()};
}

struct LatticeAnalysis {
    Classification classification = Classification::undetermined;
    bool orthonormal = false;
    bool collapse = false;
    bool positive_zero_set = false;
    double inf_nonzero = 0.0;
    double sup = 0.0;
    std::size_t grid_size = 0;
};

// Frame properties of (τ_{n s}φ)_{n∈ℤ} from a refinement study of Φ_s.
LatticeAnalysis analyze_lattice(const FourierProfile& profile, double spacing, const Budgets& budgets,
                                std::vector<Evidence>& evidence) {
    const auto levels = refinement_study(profile, spacing, budgets.grid_size, budgets.refinement_levels, 1e-12);
    LatticeAnalysis out;
    const auto& first = levels.front();
    const auto& last = levels.back();
    out.grid_size = last.grid_size;
    out.sup = last.bounds.sup;
    out.inf_nonzero = last.bounds.inf_nonzero;

    out.orthonormal = true;
    bool nonincreasing = true;
    for (std::size_t l = 0; l < levels.size(); ++l) {
        const auto& eb = levels[l].bounds;
        if (eb.zero_fraction > 0.0 || std::abs(eb.sup - spacing) > 1e-10 * spacing ||
            std::abs(eb.inf_nonzero - spacing) > 1e-10 * spacing) {
            out.orthonormal = false;
        }
        if (l > 0 && eb.inf_nonzero > levels[l - 1].bounds.inf_nonzero * (1.0 + 1e-12)) {
            nonincreasing = false;
        }
    }
    out.collapse = nonincreasing && first.bounds.inf_nonzero >= 2.0 * last.bounds.inf_nonzero;
    const double zero_points = last.bounds.zero_fraction * static_cast<double>(last.grid_size);
    out.positive_zero_set = first.bounds.zero_fraction > 0.0 && zero_points >= 2.0 &&
                            last.bounds.zero_fraction >= 0.5 * first.bounds.zero_fraction;

    if (out.orthonormal) {
        out.classification = Classification::orthonormal;
    } else if (out.collapse) {
        out.classification = Classification::not_frame_sequence;
    } else if (out.positive_zero_set) {
        out.classification = Classification::frame_sequence;
    } else {
        out.classification = Classification::exact_frame_sequence;
    }

    Evidence ev{"grid refinement of the periodization", "periodization-bounds", {}};
    ev.values.emplace_back("spacing", spacing);
    for (const auto& level : levels) {
        const std::string m = std::to_string(level.grid_size);
        ev.values.emplace_back("inf_nonzero@" + m, level.bounds.inf_nonzero);
        ev.values.emplace_back("sup@" + m, level.bounds.sup);
        ev.values.emplace_back("zero_fraction@" + m, level.bounds.zero_fraction);
    }
    ev.values.emplace_back("orthonormal", out.orthonormal ? 1.0 : 0.0);
    ev.values.emplace_back("lower_collapse", out.collapse ? 1.0 : 0.0);
    ev.values.emplace_back("positive_measure_zero_set", out.positive_zero_set ? 1.0 : 0.0);
    evidence.push_back(std::move(ev));
    return out;
}

struct WindowEstimate {
    std::size_t size = 0;
    FrameEstimate estimate;
};

std::vector<WindowEstimate> nested_windows(const FourierProfile& profile, double b, const TranslationSet& lambda,
                                           const Budgets& budgets) {
    const std::size_t S = std::min(lambda.size(), budgets.max_dimension);
    std::vector<WindowEstimate> out;
    for (std::size_t size : {S / 8, S / 4, S / 2, S}) {
        if (size < 2) {
            continue;
        }
        const GramOperator g = build_gram(profile, b, lambda.prefix(size), budgets.tol, budgets.seed);
        out.push_back({size, frame_bound_estimates(g, budgets.kernel_tol)});
    }
    return out;
}

void record_gram(const std::vector<WindowEstimate>& windows, const std::string& rule, std::vector<Evidence>& evidence) {
    Evidence ev{"Gram eigenvalues over nested windows", rule, {}};
    for (const auto& w : windows) {
        const std::string n = std::to_string(w.size);
        ev.values.emplace_back("A_est@" + n, w.estimate.A_est);
        ev.values.emplace_back("B_est@" + n, w.estimate.B_est);
        ev.values.emplace_back("rank@" + n, static_cast<double>(w.estimate.numerical_rank));
    }
    evidence.push_back(std::move(ev));
}

} // namespace

GramOperator build_gram(const FourierProfile& profile, double b, const TranslationSet& lambda, double tol,
                        std::uint64_t seed) {
    if (!(b > 0.0)) {
        throw InvalidArgument("spacing b must be positive");
    }
    if (!(tol > 0.0)) {
        throw InvalidArgument("tolerance must be positive");
    }
    if (!lambda.integer_valued()) {
        throw InvalidArgument("Gram matrices need an integer translation set");
    }
    if (lambda.size() > kMaxGramDimension) {
        throw Refusal("Gram dimension " + std::to_string(lambda.size()) + " exceeds the cap of " +
                      std::to_string(kMaxGramDimension));
    }
    const auto pts = lambda.points();
    const auto span = static_cast<std::size_t>(pts.back() - pts.front());
    const std::size_t M = std::bit_ceil(std::max<std::size_t>(16, 2 * span + 2));
    if (M > (std::size_t{1} << 24)) {
        throw Refusal("translation set span too large for the coefficient grid");
    }
    const PeriodizedSpectrum ps = periodize(profile, b, M);

    std::vector<long> shifts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) {
            shifts.push_back(static_cast<long>(pts[j] - pts[i]));
        }
    }
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    std::vector<std::complex<double>> coeff(shifts.size());
    parallel_for(shifts.size(), [&](std::size_t k) { coeff[k] = fourier_coeff(ps, shifts[k]) / b; });

    GramOperator g;
    g.b = b;
    g.tol = tol;
    g.indices.assign(pts.begin(), pts.end());
    const auto n = static_cast<Eigen::Index>(pts.size());
    g.entries.resize(n, n);
    const auto lookup = [&](long d) {
        const auto it = std::lower_bound(shifts.begin(), shifts.end(), d);
        return coeff[static_cast<std::size_t>(it - shifts.begin())];
    };
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const auto d = static_cast<long>(pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(i)]);
            const std::complex<double> v = lookup(d);
            g.entries(i, j) = v;
            g.entries(j, i) = std::conj(v);
        }
        g.entries(i, i) = g.entries(i, i).real();
    }

    // Independent route on a random sample of the distinct shifts.
    std::vector<std::size_t> order(shifts.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        order[k] = k;
    }
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t sample = std::max<std::size_t>(1, (shifts.size() + 19) / 20);
    const double limit = 10.0 * tol * std::max(1.0, profile.energy());
    for (std::size_t s = 0; s < sample; ++s) {
        const std::size_t k = order[s];
        const std::complex<double> direct = autocorrelation(profile, static_cast<double>(shifts[k]) * b);
        const double err = std::abs(direct - coeff[k]);
        g.max_cross_check_error = std::max(g.max_cross_check_error, err);
        if (err > limit) {
            std::ostringstream os;
            os << "Gram entry at shift " << shifts[k] << " disagrees with the autocorrelation route by " << err;
            throw InconsistencyError(os.str());
        }
    }
    g.cross_checked = sample;
    return g;
}

FrameEstimate frame_bound_estimates(const GramOperator& g, double kernel_tol) {
    if (!(kernel_tol >= 0.0)) {
        throw InvalidArgument("kernel tolerance must be nonnegative");
    }
    const std::vector<double> ev = sorted_eigenvalues(g.entries);
    FrameEstimate out;
    out.min_eigenvalue = ev.front();
    out.B_est = ev.back();
    if (!(out.B_est > 0.0)) {
        out.degenerate = true;
        return out;
    }
    const double cut = kernel_tol * out.B_est;
    for (double v : ev) {
        if (v > cut) {
            if (out.numerical_rank == 0) {
                out.A_est = v;
            }
            ++out.numerical_rank;
        }
    }
    return out;
}

std::pair<double, double> bounds_from_phi(const PeriodizedSpectrum& ps, double zero_thresh) {
    const EssentialBounds eb = essential_bounds(ps, zero_thresh);
    const double A = std::isfinite(eb.inf_nonzero) ? eb.inf_nonzero / ps.b() : 0.0;
    return {A, eb.sup / ps.b()};
}

std::pair<double, double> bounds_from_phi(const PeriodizedSpectrum& ps) {
    return bounds_from_phi(ps, default_zero_threshold(ps));
}

std::string to_string(Classification c) {
    switch (c) {
    case Classification::orthonormal:
        return "orthonormal";
    case Classification::exact_frame_sequence:
        return "exact frame sequence";
    case Classification::frame_sequence:
        return "frame sequence (non-exact)";
    case Classification::upper_bound_only:
        return "upper bound only";
    case Classification::not_frame_sequence:
        return "not a frame sequence";
    case Classification::undetermined:
        return "undetermined";
    }
    return "undetermined";
}

bool is_frame(Classification c) {
    return c == Classification::orthonormal || c == Classification::exact_frame_sequence ||
           c == Classification::frame_sequence;
}

FrameReport classify(const FourierProfile& profile, double b, const TranslationSet& lambda, const Budgets& budgets) {
    if (!(b > 0.0)) {
        throw InvalidArgument("spacing b must be positive");
    }
    FrameReport report;
    report.b = b;
    report.spacing = b;
    report.window = lambda.describe();

    const auto kind = lambda.kind();
    const double spacing = kind == TranslationSet::Kind::multiples ? b * static_cast<double>(lambda.modulus()) : b;
    report.spacing = spacing;

    // Orthonormality of the full ℤ family passes to every subfamily.
    LatticeAnalysis base = analyze_lattice(profile, b, budgets, report.evidence);
    report.grid_size = base.grid_size;

    LatticeAnalysis lattice = base;
    if (kind == TranslationSet::Kind::multiples) {
        lattice = analyze_lattice(profile, spacing, budgets, report.evidence);
        const int m = static_cast<int>(lambda.modulus());
        Evidence ev{"Φ_{mb} equals the folded Φ_b", "dilation", {}};
        ev.values.emplace_back("m", m);
        ev.values.emplace_back("max_deviation", dilation_deviation(profile, b, m, 1024));
        report.evidence.push_back(std::move(ev));
    }
    report.A_phi = std::isfinite(lattice.inf_nonzero) ? lattice.inf_nonzero / spacing : 0.0;
    report.B_phi = lattice.sup / spacing;

    const bool integer_set = lambda.integer_valued();
    std::vector<WindowEstimate> windows;
    if (integer_set) {
        windows = nested_windows(profile, b, lambda, budgets);
        record_gram(windows, "gram-window", report.evidence);
    }
    if (!windows.empty()) {
        report.A_est = windows.back().estimate.A_est;
        report.B_est = windows.back().estimate.B_est;
        report.numerical_rank = windows.back().estimate.numerical_rank;
    }

    if (base.orthonormal) {
        report.classification = Classification::orthonormal;
        report.evidence.push_back({"Φ_b ≡ b on every refinement level", "orthonormal-periodization", {}});
        return report;
    }

    switch (kind) {
    case TranslationSet::Kind::integers:
    case TranslationSet::Kind::multiples:
        report.classification = lattice.classification;
        break;
    case TranslationSet::Kind::naturals: {
        // On a half line a frame sequence is automatically exact.
        report.classification = lattice.classification == Classification::exact_frame_sequence
                                    ? Classification::exact_frame_sequence
                                    : Classification::not_frame_sequence;
        Evidence ev{"frame over {1..N} iff exact over ℤ", "half-line-exactness", {}};
        ev.values.emplace_back("exact_over_Z", lattice.classification == Classification::exact_frame_sequence ? 1.0 : 0.0);
        report.evidence.push_back(std::move(ev));
        break;
    }
    default: {
        if (windows.size() < 3) {
            report.classification = Classification::undetermined;
            report.evidence.push_back({"fewer than three nested windows available", "gram-trend", {}});
            break;
        }
        const auto& a0 = windows.front().estimate;
        const auto& a1 = windows.back().estimate;
        bool a_monotone = true;
        bool full_rank = true;
        for (std::size_t k = 0; k < windows.size(); ++k) {
            if (k > 0 && windows[k].estimate.A_est > windows[k - 1].estimate.A_est * (1.0 + 1e-9)) {
                a_monotone = false;
            }
            if (windows[k].estimate.numerical_rank != windows[k].size) {
                full_rank = false;
            }
        }
        const bool b_grows = a1.B_est >= 2.0 * a0.B_est;
        const bool b_stable = !b_grows;
        const bool a_collapse = a_monotone && a0.A_est >= 2.0 * a1.A_est;
        const bool a_stable = a1.A_est >= 0.5 * a0.A_est;
        if (b_grows) {
            report.classification = Classification::not_frame_sequence;
        } else if (a_collapse) {
            report.classification = Classification::not_frame_sequence;
        } else if (a_stable && b_stable) {
            report.classification = full_rank ? Classification::exact_frame_sequence : Classification::frame_sequence;
        } else if (b_stable) {
            report.classification = Classification::upper_bound_only;
        } else {
            report.classification = Classification::undetermined;
        }
        Evidence ev{"trend of Gram extremal eigenvalues", "gram-trend", {}};
        ev.values.emplace_back("B_growth", a1.B_est / a0.B_est);
        ev.values.emplace_back("A_ratio_last_over_first", a1.A_est / a0.A_est);
        ev.values.emplace_back("A_monotone", a_monotone ? 1.0 : 0.0);
        ev.values.emplace_back("full_rank", full_rank ? 1.0 : 0.0);
        report.evidence.push_back(std::move(ev));
        break;
    }
    }

    if (!windows.empty()) {
        Evidence ev{"Gram spectrum inside the periodization range", "bracket", {}};
        const double slack = budgets.tol + 1e-9 * report.B_phi;
        const bool upper_ok = report.B_est <= report.B_phi + slack;
        ev.values.emplace_back("B_est", report.B_est);
        ev.values.emplace_back("B_phi", report.B_phi);
        ev.values.emplace_back("upper_ok", upper_ok ? 1.0 : 0.0);
        if (!lattice.positive_zero_set && kind != TranslationSet::Kind::multiples) {
            ev.values.emplace_back("A_est", report.A_est);
            ev.values.emplace_back("A_phi", report.A_phi);
            ev.values.emplace_back("lower_ok", report.A_phi <= report.A_est + slack ? 1.0 : 0.0);
        }
        report.evidence.push_back(std::move(ev));
    }
    return report;
}

std::vector<double> truncation_decay(const FourierProfile& profile, double b, const std::vector<long>& N_list,
                                     const Budgets& budgets) {
    std::vector<Evidence> evidence;
    const LatticeAnalysis lattice = analyze_lattice(profile, b, budgets, evidence);
    if (lattice.classification != Classification::frame_sequence) {
        throw Refusal("truncation decay needs a non-exact frame sequence over ℤ; this family is " +
                      to_string(lattice.classification));
    }
    std::vector<double> out;
    for (long N : N_list) {
        const GramOperator g = build_gram(profile, b, TranslationSet::naturals(N), budgets.tol, budgets.seed);
        out.push_back(frame_bound_estimates(g, budgets.kernel_tol).A_est);
    }
    return out;
}

IdentityCheck weighted_norm_identity_check(const FourierProfile& profile, double b, const GramOperator& gram,
                                           const std::vector<std::complex<double>>& coefficients) {
    if (coefficients.size() != gram.dimension()) {
        throw InvalidArgument("coefficient vector length must match the Gram dimension");
    }
    const Eigen::Map<const Eigen::VectorXcd> c(coefficients.data(), static_cast<Eigen::Index>(coefficients.size()));
    IdentityCheck out;
    out.lhs = c.dot(gram.entries * c).real();

    const double origin = gram.indices.front();
    const auto f_abs2 = [&](double xi) {
        std::complex<double> f{0.0, 0.0};
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            f += coefficients[k] * std::polar(1.0, -kTwoPi * (gram.indices[k] - origin) * xi);
        }
        return std::norm(f);
    };

    const std::size_t M = 4096;
    const PeriodizedSpectrum ps = periodize(profile, b, M);
    const double spread = std::max(1.0, gram.indices.back() - origin);
    double integral = 0.0;
    for (const auto& s : ps.segments()) {
        const auto pieces = static_cast<int>(std::ceil((s.hi - s.lo) * spread));
        const double w = (s.hi - s.lo) / pieces;
        for (int p = 0; p < pieces; ++p) {
            const double lo = s.lo + p * w;
            const double hi = p + 1 == pieces ? s.hi : lo + w;
            integral += boost::math::quadrature::gauss<double, 20>::integrate(
                [&](double xi) { return f_abs2(xi) * eval_quadratic(s.q, xi); }, lo, hi);
        }
    }
    out.rhs = integral / b;
    out.deviation = std::abs(out.lhs - out.rhs) / std::max(std::abs(out.lhs), 1e-300);
    return out;
}

} // namespace frameseq
