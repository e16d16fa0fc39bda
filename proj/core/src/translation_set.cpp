#include "frameseq/translation_set.hpp"

#include "frameseq/error.hpp"
#include "frameseq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace frameseq {
namespace {

bool all_integers(std::span<const double> pts) {
    return std::all_of(pts.begin(), pts.end(), [](double v) { return v == std::round(v); });
}

double log2_ratio(double num, double den) { return std::log2(num / den); }

} // namespace

TranslationSet TranslationSet::make(Kind kind, std::vector<double> points, bool integer_valued) {
    if (points.empty()) {
        throw InvalidArgument("translation set window is empty");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i] > points[i - 1])) {
            throw InvalidArgument("translation set points must be strictly increasing (duplicates rejected)");
        }
    }
    TranslationSet s;
    s.kind_ = kind;
    s.points_ = std::move(points);
    s.integer_valued_ = integer_valued;
    return s;
}

TranslationSet TranslationSet::explicit_points(std::vector<double> points) {
    for (double p : points) {
        if (!std::isfinite(p)) {
            throw InvalidArgument("translation set points must be finite");
        }
    }
    std::sort(points.begin(), points.end());
    const bool ints = all_integers(points);
    return make(Kind::explicit_points, std::move(points), ints);
}

TranslationSet TranslationSet::integers(long N) {
    return multiples(1, N);
}

TranslationSet TranslationSet::multiples(long m, long N) {
    if (m < 1 || N < m) {
        throw InvalidArgument("multiples set needs m >= 1 and window N >= m");
    }
    std::vector<double> pts;
    for (long k = -(N / m); k <= N / m; ++k) {
        pts.push_back(static_cast<double>(k * m));
    }
    TranslationSet s = make(m == 1 ? Kind::integers : Kind::multiples, std::move(pts), true);
    s.modulus_ = m;
    s.parameter_ = N;
    return s;
}

TranslationSet TranslationSet::naturals(long N) {
    if (N < 1) {
        throw InvalidArgument("naturals window needs N >= 1");
    }
    std::vector<double> pts;
    for (long k = 1; k <= N; ++k) {
        pts.push_back(static_cast<double>(k));
    }
    TranslationSet s = make(Kind::naturals, std::move(pts), true);
    s.parameter_ = N;
    return s;
}

TranslationSet TranslationSet::powers(int k, long n_max) {
    if (k < 1 || n_max < 1) {
        throw InvalidArgument("power sequence needs k >= 1 and n_max >= 1");
    }
    if (static_cast<double>(k) * std::log2(static_cast<double>(n_max)) > 52.0) {
        throw InvalidArgument("power sequence exceeds exact double range");
    }
    std::vector<double> pts;
    for (long n = 0; n <= n_max; ++n) {
        pts.push_back(std::pow(static_cast<double>(n), k));
    }
    TranslationSet s = make(Kind::powers, std::move(pts), true);
    s.parameter_ = n_max;
    s.modulus_ = k;
    return s;
}

TranslationSet TranslationSet::geometric(long base, long n_max) {
    if (base < 2 || n_max < 1 || static_cast<double>(n_max) * std::log2(static_cast<double>(base)) > 52.0) {
        throw InvalidArgument("geometric sequence needs base >= 2 and base^n_max < 2^52");
    }
    std::vector<double> pts;
    double v = 1.0;
    for (long n = 0; n <= n_max; ++n) {
        pts.push_back(v);
        v *= static_cast<double>(base);
    }
    TranslationSet s = make(Kind::geometric, std::move(pts), true);
    s.parameter_ = n_max;
    s.modulus_ = base;
    return s;
}

long dyadic_m(double alpha, long n) {
    const double v = std::floor(alpha * static_cast<double>(n) - std::sqrt(static_cast<double>(n)));
    return std::max(0L, static_cast<long>(v));
}

TranslationSet TranslationSet::dyadic(double alpha, long n_max) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("dyadic construction needs 0 < alpha < 1");
    }
    if (n_max < 1 || n_max > 40) {
        throw InvalidArgument("dyadic construction needs 1 <= n_max <= 40");
    }
    std::vector<double> pts;
    for (long n = 1; n <= n_max; ++n) {
        const long m = dyadic_m(alpha, n);
        const long count = 1L << (n - m);
        if (pts.size() + static_cast<std::size_t>(count) > (1u << 24)) {
            throw Refusal("dyadic construction window exceeds 2^24 points");
        }
        for (long k = 1; k <= count; ++k) {
            pts.push_back(std::ldexp(1.0, static_cast<int>(n)) + static_cast<double>(k) * std::ldexp(1.0, static_cast<int>(m)));
        }
    }
    TranslationSet s = make(Kind::dyadic, std::move(pts), true);
    s.alpha_ = alpha;
    s.parameter_ = n_max;
    return s;
}

TranslationSet TranslationSet::prefix(std::size_t count) const {
    if (count == 0 || count > points_.size()) {
        throw InvalidArgument("prefix size must be in [1, size]");
    }
    TranslationSet s = *this;
    s.points_.resize(count);
    return s;
}

TranslationSet TranslationSet::shifted(double shift) const {
    TranslationSet s = *this;
    for (double& p : s.points_) {
        p += shift;
    }
    s.integer_valued_ = integer_valued_ && shift == std::round(shift);
    return s;
}

std::string TranslationSet::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::explicit_points:
        os << "explicit(" << points_.size() << " points)";
        break;
    case Kind::integers:
        os << "Z∩[-" << parameter_ << "," << parameter_ << "]";
        break;
    case Kind::multiples:
        os << modulus_ << "Z∩[-" << parameter_ << "," << parameter_ << "]";
        break;
    case Kind::naturals:
        os << "{1.." << parameter_ << "}";
        break;
    case Kind::powers:
        os << "{n^" << modulus_ << " : 0<=n<=" << parameter_ << "}";
        break;
    case Kind::geometric:
        os << "{" << modulus_ << "^n : 0<=n<=" << parameter_ << "}";
        break;
    case Kind::dyadic:
        os << "dyadic(alpha=" << alpha_ << ", n_max=" << parameter_ << ")";
        break;
    }
    return os.str();
}

std::size_t density(const TranslationSet& lambda, double x) {
    if (!(x > 0.0)) {
        throw InvalidArgument("density needs x > 0");
    }
    if (lambda.windowed() && !(lambda.extent() > x)) {
        throw InvalidArgument("realised window is not longer than x");
    }
    const auto pts = lambda.points();
    std::size_t best = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        j = std::max(j, i);
        while (j + 1 < pts.size() && pts[j + 1] - pts[i] <= x) {
            ++j;
        }
        best = std::max(best, j - i + 1);
    }
    return best;
}

SparsityReport is_sparse(const TranslationSet& lambda, long n_max) {
    if (!lambda.integer_valued()) {
        throw InvalidArgument("sparsity diagnostic needs an integer set");
    }
    if (n_max < 1) {
        throw InvalidArgument("sparsity diagnostic needs n_max >= 1");
    }
    const auto pts = lambda.points();
    const auto count_shift = [&](std::size_t upto, long n) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < upto; ++i) {
            if (std::binary_search(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(upto),
                                   pts[i] - static_cast<double>(n))) {
                ++c;
            }
        }
        return c;
    };
    SparsityReport r;
    const std::size_t half = std::max<std::size_t>(1, pts.size() / 2);
    r.saturated = true;
    for (long n = 1; n <= n_max; ++n) {
        r.intersections.push_back(count_shift(pts.size(), n));
        r.half_intersections.push_back(count_shift(half, n));
        if (r.intersections.back() != r.half_intersections.back()) {
            r.saturated = false;
        }
    }
    if (pts.size() >= 3) {
        r.gaps_nondecreasing = true;
        for (std::size_t i = 2; i < pts.size(); ++i) {
            if (pts[i] - pts[i - 1] < pts[i - 1] - pts[i - 2]) {
                r.gaps_nondecreasing = false;
            }
        }
        r.first_gap = pts[1] - pts[0];
        r.last_gap = pts.back() - pts[pts.size() - 2];
        const double mid_gap = pts[half] - pts[half - 1];
        r.gaps_growing = r.last_gap >= 2.0 * mid_gap;
    }
    r.sparse = r.saturated;
    return r;
}

double g_function(const TimeEnvelope& F, double x) {
    if (!(x >= 0.0)) {
        throw InvalidArgument("G needs x >= 0");
    }
    return F(x) * F.integral(x) + F.tail_square_integral(x);
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::converges:
        return "converges";
    case Verdict::diverges:
        return "diverges";
    case Verdict::bounded:
        return "bounded";
    case Verdict::violated:
        return "violated";
    case Verdict::undetermined:
        return "undetermined";
    }
    return "undetermined";
}

SufficientReport upper_bound_sufficient(const TimeEnvelope& F, const TranslationSet& lambda, double x_max) {
    if (!(x_max > 4.0)) {
        throw InvalidArgument("x_max must exceed 4");
    }
    SufficientReport r;
    r.x_max = x_max;
    // Trapezoid in log x, 64 points per octave.
    const int steps = static_cast<int>(std::ceil(64.0 * std::log2(x_max)));
    const double h = std::log(x_max) / steps;
    double prev = g_function(F, 1.0) * static_cast<double>(density(lambda, 1.0));
    for (int k = 1; k <= steps; ++k) {
        const double x = std::exp(k * h);
        const double cur = g_function(F, x) * static_cast<double>(density(lambda, x));
        r.integral_estimate += 0.5 * h * (prev + cur);
        prev = cur;
    }

    const auto a = F.power_exponent();
    if (!a) {
        r.verdict = Verdict::undetermined;
        return r;
    }
    r.tail_modelled = true;
    r.g_exponent = *a < 1.0 ? 1.0 - 2.0 * *a : (*a == 1.0 ? -1.0 : -*a);
    r.d_exponent = 0.5 * log2_ratio(static_cast<double>(density(lambda, x_max)),
                                    static_cast<double>(density(lambda, x_max / 4.0)));
    const double total = r.g_exponent + r.d_exponent;
    if (total < -0.05) {
        r.tail_estimate = g_function(F, x_max) * static_cast<double>(density(lambda, x_max)) / -total;
        r.verdict = Verdict::converges;
    } else if (total > 0.05) {
        r.tail_estimate = std::numeric_limits<double>::infinity();
        r.verdict = Verdict::diverges;
    }
    return r;
}

NecessaryReport upper_bound_necessary(const TimeEnvelope& F, const TranslationSet& lambda, double x_max,
                                      double reference_fraction) {
    if (!(x_max > 1.0) || !(reference_fraction > 0.0 && reference_fraction < 1.0)) {
        throw InvalidArgument("need x_max > 1 and 0 < reference_fraction < 1");
    }
    NecessaryReport r;
    r.x_max = x_max;
    r.reference_fraction = reference_fraction;
    const double x_ref = reference_fraction * x_max;
    // x_k = x_max 2^{-k/32} down to 1, with x_ref added exactly.
    std::vector<double> grid{x_ref};
    for (int k = 0;; ++k) {
        const double x = x_max * std::exp2(-k / 32.0);
        if (x < 1.0) {
            break;
        }
        grid.push_back(x);
    }
    grid.push_back(1.0);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (double x : grid) {
        const double v = g_function(F, x) * static_cast<double>(density(lambda, x));
        r.table.emplace_back(x, v);
        r.sup_estimate = std::max(r.sup_estimate, v);
        if (x <= x_ref) {
            r.sup_reference = std::max(r.sup_reference, v);
        }
    }
    r.growth_factor = r.sup_estimate / r.sup_reference;
    if (r.growth_factor >= 1.5) {
        r.verdict = Verdict::violated;
    } else if (r.growth_factor < 1.1) {
        r.verdict = Verdict::bounded;
    }
    return r;
}

std::vector<IntervalEnergyRow> interval_energy_test(const TimeEnvelope& F, const TranslationSet& lambda,
                                                    std::span<const std::pair<double, double>> intervals) {
    if (F.kind() != TimeEnvelope::Kind::power) {
        throw Refusal("interval energy test needs a power envelope");
    }
    std::vector<IntervalEnergyRow> rows(intervals.size());
    const auto pts = lambda.points();
    parallel_for(intervals.size(), [&](std::size_t r) {
        auto& row = rows[r];
        row.lo = intervals[r].first;
        row.hi = intervals[r].second;
        const auto first = std::lower_bound(pts.begin(), pts.end(), row.lo);
        const auto last = std::upper_bound(pts.begin(), pts.end(), row.hi);
        const std::vector<double> in(first, last);
        row.count = in.size();
        if (in.empty()) {
            row.note = "empty interval skipped";
            return;
        }
        if (lambda.integer_valued()) {
            // Difference histogram, then one G evaluation per distinct gap.
            const auto span = static_cast<std::size_t>(in.back() - in.front());
            std::vector<std::size_t> hist(span + 1, 0);
            for (std::size_t i = 0; i < in.size(); ++i) {
                for (std::size_t j = i + 1; j < in.size(); ++j) {
                    ++hist[static_cast<std::size_t>(in[j] - in[i])];
                }
            }
            double total = static_cast<double>(in.size()) * g_function(F, 0.0);
            for (std::size_t d = 1; d <= span; ++d) {
                if (hist[d] != 0) {
                    total += 2.0 * static_cast<double>(hist[d]) * g_function(F, static_cast<double>(d));
                }
            }
            row.pair_sum = total;
        } else {
            double total = static_cast<double>(in.size()) * g_function(F, 0.0);
            for (std::size_t i = 0; i < in.size(); ++i) {
                for (std::size_t j = i + 1; j < in.size(); ++j) {
                    total += 2.0 * g_function(F, in[j] - in[i]);
                }
            }
            row.pair_sum = total;
        }
        row.ratio = row.pair_sum / static_cast<double>(row.count);
    });
    return rows;
}

RegularityReport regularity_constant_check(const TimeEnvelope& F, std::span<const double> x_grid) {
    std::vector<double> xs;
    for (double x : x_grid) {
        if (x >= 1.0) {
            xs.push_back(x);
        }
    }
    std::sort(xs.begin(), xs.end());
    if (xs.size() < 2) {
        throw InvalidArgument("regularity check needs at least two grid points >= 1");
    }
    const auto increasing_lower = [&](double eps) {
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if (std::pow(xs[i], 1.0 - eps) * F(xs[i]) <= std::pow(xs[i - 1], 1.0 - eps) * F(xs[i - 1])) {
                return false;
            }
        }
        return true;
    };
    const auto decreasing_upper = [&](double eps) {
        for (std::size_t i = 1; i < xs.size(); ++i) {
            const double fi = F(xs[i]);
            const double fp = F(xs[i - 1]);
            if (std::pow(xs[i], 1.0 + eps) * fi * fi >= std::pow(xs[i - 1], 1.0 + eps) * fp * fp) {
                return false;
            }
        }
        return true;
    };
    bool lower_any = false;
    bool upper_any = false;
    double eps_used = 0.0;
    for (double eps : {0.25, 0.1, 0.05, 0.02, 0.01}) {
        const bool lo = increasing_lower(eps);
        const bool up = decreasing_upper(eps);
        lower_any = lower_any || lo;
        upper_any = upper_any || up;
        if (lo && up) {
            eps_used = eps;
            break;
        }
    }
    if (eps_used == 0.0) {
        if (!lower_any) {
            throw Refusal("hypothesis failed: x^{1-ε}F(x) increasing for some ε > 0");
        }
        if (!upper_any) {
            throw Refusal("hypothesis failed: x^{1+ε}F(x)² decreasing for some ε > 0");
        }
        throw Refusal("hypotheses failed: no single ε > 0 makes x^{1-ε}F increasing and x^{1+ε}F² decreasing");
    }
    RegularityReport r;
    r.epsilon = eps_used;
    for (double x : xs) {
        const double f = F(x);
        const double xf2 = x * f * f;
        const double g = g_function(F, x);
        r.constant = std::max({r.constant, g / xf2, xf2 / g});
    }
    return r;
}

} // namespace frameseq
