#include "frameseq/hausdorff.hpp"

#include "frameseq/error.hpp"
#include "frameseq/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace frameseq {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Coefficients normalize(Coefficients c, bool& changed) {
    double norm2 = 0.0;
    for (const auto& v : c) {
        norm2 += std::norm(v);
    }
    if (!(norm2 > 0.0)) {
        throw InvalidArgument("coefficient vector is zero");
    }
    changed = std::abs(norm2 - 1.0) > 1e-12;
    if (changed) {
        const double s = 1.0 / std::sqrt(norm2);
        for (auto& v : c) {
            v *= s;
        }
    }
    return c;
}

void require_matching(const TranslationSet& lambda, const Coefficients& c) {
    if (!lambda.integer_valued()) {
        throw InvalidArgument("trigonometric polynomials need an integer frequency set");
    }
    if (c.size() != lambda.size()) {
        throw InvalidArgument("coefficient count must match the frequency set size");
    }
}

// F̂(n) = Σ_{λ_k - λ_l = n} c_k conj(c_l) for F = |f|².
std::map<long, std::complex<double>> square_coefficients(const TranslationSet& lambda, const Coefficients& c) {
    const auto pts = lambda.points();
    std::map<long, std::complex<double>> out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        for (std::size_t l = 0; l < pts.size(); ++l) {
            out[static_cast<long>(pts[k] - pts[l])] += c[k] * std::conj(c[l]);
        }
    }
    return out;
}

double exact_interval_mass(const std::map<long, std::complex<double>>& F, double lo, double hi) {
    std::complex<double> total{0.0, 0.0};
    for (const auto& [n, v] : F) {
        if (n == 0) {
            total += v * (hi - lo);
        } else {
            const double w = kTwoPi * static_cast<double>(n);
            total += v * (std::polar(1.0, w * hi) - std::polar(1.0, w * lo)) / std::complex<double>(0.0, w);
        }
    }
    return total.real();
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::vector<int> all_depths(const PeriodizedSpectrum& ps) {
    const int top = std::countr_zero(ps.grid_size());
    std::vector<int> d;
    for (int i = 0; i <= top; ++i) {
        d.push_back(i);
    }
    return d;
}

CoverEstimate hausdorff_sublevel(const PeriodizedSpectrum& ps, double alpha, double epsilon,
                                 const std::vector<int>& depths) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("Hausdorff exponent must lie in (0, 1)");
    }
    if (depths.empty()) {
        throw InvalidArgument("at least one dyadic depth is required");
    }
    const std::size_t M = ps.grid_size();
    const int top = std::countr_zero(M);
    for (int d : depths) {
        if (d < 0 || d > top) {
            throw InvalidArgument("dyadic depth must lie in [0, log2 M]");
        }
    }
    const auto v = ps.values();
    CoverEstimate out;
    out.alpha = alpha;
    out.epsilon = epsilon;
    out.full_circle = epsilon >= *std::max_element(v.begin(), v.end());

    std::vector<char> marked(M, 0);
    for (std::size_t j = 0; j < M; ++j) {
        if (v[j] <= epsilon) {
            const bool left = v[(j + M - 1) % M] <= epsilon;
            const bool right = v[(j + 1) % M] <= epsilon;
            marked[j] = (left || right) ? 1 : 0;
        }
    }
    out.covered_points = static_cast<std::size_t>(std::count(marked.begin(), marked.end(), 1));

    double best = std::numeric_limits<double>::infinity();
    for (int d : depths) {
        const std::size_t per_box = M >> d;
        std::size_t boxes = 0;
        for (std::size_t k = 0; k < (std::size_t{1} << d); ++k) {
            if (std::any_of(marked.begin() + static_cast<std::ptrdiff_t>(k * per_box),
                            marked.begin() + static_cast<std::ptrdiff_t>((k + 1) * per_box),
                            [](char c) { return c != 0; })) {
                ++boxes;
            }
        }
        const double sum = static_cast<double>(boxes) * std::pow(std::ldexp(1.0, -d), alpha);
        out.per_depth.emplace_back(d, sum);
        if (sum < best) {
            best = sum;
            out.depth = d;
        }
    }
    out.measure_sum = best;
    const std::size_t per_box = M >> out.depth;
    const double len = std::ldexp(1.0, -out.depth);
    for (std::size_t k = 0; k < (std::size_t{1} << out.depth); ++k) {
        if (std::any_of(marked.begin() + static_cast<std::ptrdiff_t>(k * per_box),
                        marked.begin() + static_cast<std::ptrdiff_t>((k + 1) * per_box),
                        [](char c) { return c != 0; })) {
            out.intervals.emplace_back(static_cast<double>(k) * len, static_cast<double>(k + 1) * len);
        }
    }
    return out;
}

CoefficientDensityResult coefficient_density_check(const TranslationSet& lambda, Coefficients coefficients,
                                                   long j_lo, long j_hi) {
    require_matching(lambda, coefficients);
    if (j_hi < j_lo) {
        throw InvalidArgument("integer interval J is empty");
    }
    CoefficientDensityResult out;
    coefficients = normalize(std::move(coefficients), out.normalized);
    const auto F = square_coefficients(lambda, coefficients);
    for (auto it = F.lower_bound(j_lo); it != F.end() && it->first <= j_hi; ++it) {
        out.lhs += std::abs(it->second);
    }
    out.rhs = static_cast<double>(density(lambda, static_cast<double>(j_hi - j_lo + 1)));
    out.pass = out.lhs <= out.rhs + 1e-12;
    return out;
}

IntervalMassResult interval_mass_check(const TranslationSet& lambda, Coefficients coefficients, double lo, double hi) {
    require_matching(lambda, coefficients);
    if (!(hi > lo) || hi - lo > 1.0) {
        throw InvalidArgument("interval must satisfy 0 < length <= 1");
    }
    bool changed = false;
    coefficients = normalize(std::move(coefficients), changed);
    const auto F = square_coefficients(lambda, coefficients);
    IntervalMassResult out;
    out.integral = exact_interval_mass(F, lo, hi);
    out.length = hi - lo;
    out.density = static_cast<double>(density(lambda, 1.0 / out.length));
    out.ratio = out.integral / (out.length * out.density);
    return out;
}

IntervalMassScan interval_mass_scan(const TranslationSet& lambda, const Coefficients& coefficients,
                                    const std::vector<double>& lengths, double centre) {
    IntervalMassScan out;
    out.lengths = lengths;
    std::vector<double> lx;
    std::vector<double> ly;
    for (double len : lengths) {
        const auto r = interval_mass_check(lambda, coefficients, centre - 0.5 * len, centre + 0.5 * len);
        out.max_ratio.push_back(r.ratio);
        lx.push_back(std::log2(len));
        ly.push_back(std::log2(r.ratio));
    }
    out.slope = lengths.size() >= 2 ? ls_slope(lx, ly) : 0.0;
    return out;
}

IntervalMassScan interval_mass_random_scan(const TranslationSet& lambda, std::size_t trials,
                                           const std::vector<double>& lengths, std::uint64_t seed) {
    if (trials == 0 || lengths.empty()) {
        throw InvalidArgument("random scan needs trials and lengths");
    }
    std::vector<std::vector<double>> ratios(trials, std::vector<double>(lengths.size(), 0.0));
    parallel_for(trials, [&](std::size_t t) {
        std::mt19937_64 rng(splitmix(seed ^ splitmix(t)));
        std::normal_distribution<double> gauss;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Coefficients c(lambda.size());
        for (auto& v : c) {
            v = {gauss(rng), gauss(rng)};
        }
        const double centre = unit(rng);
        for (std::size_t l = 0; l < lengths.size(); ++l) {
            ratios[t][l] = interval_mass_check(lambda, c, centre - 0.5 * lengths[l], centre + 0.5 * lengths[l]).ratio;
        }
    });
    IntervalMassScan out;
    out.lengths = lengths;
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t l = 0; l < lengths.size(); ++l) {
        double m = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            m = std::max(m, ratios[t][l]);
        }
        out.max_ratio.push_back(m);
        lx.push_back(std::log2(lengths[l]));
        ly.push_back(std::log2(m));
    }
    out.slope = lengths.size() >= 2 ? ls_slope(lx, ly) : 0.0;
    return out;
}

DecayFit fit_decay(const FourierProfile& profile, int k_lo, int k_hi) {
    if (k_hi <= k_lo) {
        throw InvalidArgument("decay fit needs k_hi > k_lo");
    }
    DecayFit out;
    std::vector<double> lx;
    std::vector<double> ly;
    // Sample spacing resolves oscillations of the support width.
    const double width = profile.support_hi() - profile.support_lo();
    const double extent = std::max(std::abs(profile.support_lo()), std::abs(profile.support_hi()));
    for (int k = k_lo; k <= k_hi; ++k) {
        const double x0 = std::ldexp(1.0, k);
        const int samples = 512;
        double best = 0.0;
        for (int s = 0; s <= samples; ++s) {
            const double x = x0 * (1.0 + static_cast<double>(s) / samples);
            best = std::max(best, std::abs(inverse_transform(profile, x)));
        }
        // Sub-sample refinement near the block start where the envelope peaks.
        const double fine = 0.125 / std::max(width, extent);
        for (double x = x0; x < x0 + 2.0 / std::max(width, 1e-3); x += fine) {
            best = std::max(best, std::abs(inverse_transform(profile, x)));
        }
        out.samples.emplace_back(x0, best);
        lx.push_back(std::log(x0));
        ly.push_back(std::log(best));
    }
    out.exponent = -ls_slope(lx, ly);
    return out;
}

double density_exponent(const TranslationSet& lambda, int doublings) {
    if (doublings < 2) {
        throw InvalidArgument("density fit needs at least two doublings");
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (int j = 1; j <= doublings; ++j) {
        const double x = std::ldexp(lambda.extent(), -j);
        if (x <= 0.0) {
            break;
        }
        lx.push_back(std::log(x));
        ly.push_back(std::log(static_cast<double>(density(lambda, x))));
    }
    return ls_slope(lx, ly);
}

HypothesisEvidence sparse_exactness_evidence(const FourierProfile& profile, double b, const TranslationSet& lambda,
                                             double a, const Budgets& budgets) {
    if (!(a > 0.5 && a < 1.0)) {
        throw InvalidArgument("decay exponent a must satisfy 1/2 < a < 1");
    }
    HypothesisEvidence ev;
    ev.decay = fit_decay(profile);
    ev.decay_ok = ev.decay.exponent > a + 0.05;
    if (!ev.decay_ok) {
        ev.failed.push_back("decay |φ(x)| = O(x^{-a-δ})");
    }

    const PeriodizedSpectrum ps = periodize(profile, b, std::size_t{1} << 16);
    const double alpha = 2.0 * a - 1.0;
    const auto depths = all_depths(ps);
    const double sup = *std::max_element(ps.values().begin(), ps.values().end());
    bool monotone = true;
    for (double level : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const auto cover = hausdorff_sublevel(ps, alpha, level * sup, depths);
        if (!ev.hausdorff.empty() && cover.measure_sum > ev.hausdorff.back().second) {
            monotone = false;
        }
        ev.hausdorff.emplace_back(level * sup, cover.measure_sum);
    }
    ev.hausdorff_ok = monotone && ev.hausdorff.back().second <= 0.5 * ev.hausdorff.front().second;
    if (!ev.hausdorff_ok) {
        ev.failed.push_back("Hausdorff measure of {Φ_b <= ε} shrinking as ε → 0");
    }

    ev.density_exponent = density_exponent(lambda);
    ev.density_ok = ev.density_exponent <= 2.0 * (1.0 - a) + 0.05;
    if (!ev.density_ok) {
        ev.failed.push_back("density D_Λ(x) = O(x^{2(1-a)})");
    }
    ev.all_hold = ev.failed.empty();
    if (!ev.all_hold) {
        return ev;
    }

    const FrameReport report = classify(profile, b, lambda, budgets);
    ev.classification = report.classification;
    for (const auto& e : report.evidence) {
        if (e.rule != "gram-window") {
            continue;
        }
        std::size_t size = 0;
        for (const auto& [name, value] : e.values) {
            if (name.rfind("A_est@", 0) == 0) {
                size = static_cast<std::size_t>(std::stoul(name.substr(6)));
                ev.A_est.emplace_back(size, value);
            }
        }
    }
    ev.gram_checked = !ev.A_est.empty();
    if (ev.gram_checked) {
        ev.bounded_below = ev.A_est.back().second >= 0.5 * ev.A_est.front().second;
    }
    return ev;
}

} // namespace frameseq
