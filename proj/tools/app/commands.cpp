#include "commands.hpp"

#include "frameseq/constructions.hpp"
#include "frameseq/error.hpp"
#include "frameseq/gram.hpp"
#include "frameseq/hausdorff.hpp"
#include "frameseq/periodization.hpp"
#include "frameseq/spectrum.hpp"
#include "frameseq/translation_set.hpp"
#include "frameseq_io/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

namespace frameseq::cli {
namespace {

using io::json;
using io::number;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot write " + path);
    }
    f << text;
}

std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(const std::vector<double>& row) { rows_.push_back(row); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < header_.size(); ++i) {
            s += (i ? "," : "") + header_[i];
        }
        s += "\n";
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                s += (i ? "," : "") + format(row[i]);
            }
            s += "\n";
        }
        return s;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

void emit(const json& report, const Table* table, const Output& out) {
    if (table != nullptr && !out.csv.empty()) {
        write_text(out.csv, table->str());
    }
    write_text(out.report, io::dump(report));
}

json bounds_json(const PeriodizedSpectrum& ps) {
    const double thresh = default_zero_threshold(ps);
    json j = io::to_json(essential_bounds(ps, thresh));
    j["zero_threshold"] = thresh;
    j["grid_size"] = ps.grid_size();
    j["truncation_range"] = ps.truncation_range();
    j["tail_bound"] = ps.tail_bound();
    return j;
}

json pair_json(const std::vector<std::pair<long, double>>& v, const char* key, const char* value) {
    json a = json::array();
    for (const auto& [k, x] : v) {
        a.push_back({{key, k}, {value, number(x)}});
    }
    return a;
}

Budgets make_budgets(std::size_t grid, int levels, double tol, double kernel_tol, std::uint64_t seed) {
    Budgets budgets;
    budgets.grid_size = grid;
    budgets.refinement_levels = levels;
    budgets.tol = tol;
    budgets.kernel_tol = kernel_tol;
    budgets.seed = seed;
    return budgets;
}

struct PairedVerdict {
    json report;
    bool determinate = false;
    bool as_expected = false;
};

// Frame at frame_spacing and not a frame at other_spacing, over ℤ.
PairedVerdict paired_verdict(const FourierProfile& profile, double frame_spacing, double other_spacing,
                             const PairOptions& opt, std::uint64_t seed) {
    const Budgets budgets = make_budgets(opt.grid, 4, 1e-10, 1e-6, seed);
    const TranslationSet lambda = TranslationSet::integers(opt.window);
    const FrameReport at_frame = classify(profile, frame_spacing, lambda, budgets);
    const FrameReport at_other = classify(profile, other_spacing, lambda, budgets);
    PairedVerdict v;
    v.determinate = at_frame.classification != Classification::undetermined &&
                    at_other.classification != Classification::undetermined;
    v.as_expected = is_frame(at_frame.classification) &&
                    at_other.classification == Classification::not_frame_sequence;
    v.report = {{"frame_spacing", io::to_json(at_frame)},
                {"other_spacing", io::to_json(at_other)},
                {"expected", "frame at spacing " + format(frame_spacing) + ", not a frame at spacing " +
                                 format(other_spacing)},
                {"reproduced", v.as_expected}};
    return v;
}

int paired_exit(const PairedVerdict& v) {
    if (!v.determinate) {
        return kUndetermined;
    }
    return v.as_expected ? kDeterminate : kInconsistent;
}

} // namespace

int run_analyze(const AnalyzeOptions& opt, const Output& out) {
    const json profile_spec = io::load_json_arg(opt.profile);
    const FourierProfile profile = io::profile_from_json(profile_spec);
    const TranslationSet lambda = io::lambda_from_spec(opt.lambda, opt.window);
    json config = {{"command", "analyze"},   {"profile", profile_spec}, {"b", opt.b},
                   {"lambda", opt.lambda},   {"window", opt.window},    {"grid", opt.grid},
                   {"levels", opt.levels},   {"tol", opt.tol},          {"kernel_tol", opt.kernel_tol}};
    json report = io::make_report(config, out.seed);

    const PeriodizedSpectrum ps = periodize(profile, opt.b, opt.grid);
    report["periodization"] = bounds_json(ps);
    const auto [A_phi, B_phi] = bounds_from_phi(ps);
    report["bounds"] = {{"A_phi", number(A_phi)}, {"B_phi", number(B_phi)}};
    report["lambda"] = {{"description", lambda.describe()}, {"size", lambda.size()}};

    const FrameReport frame = classify(profile, opt.b, lambda, make_budgets(opt.grid, opt.levels, opt.tol, opt.kernel_tol, out.seed));
    report["frame"] = io::to_json(frame);
    emit(report, nullptr, out);
    return frame.classification == Classification::undetermined ? kUndetermined : kDeterminate;
}

int run_periodize(const PeriodizeOptions& opt, const Output& out) {
    const json profile_spec = io::load_json_arg(opt.profile);
    const FourierProfile profile = io::profile_from_json(profile_spec);
    json config = {{"command", "periodize"}, {"profile", profile_spec}, {"b", opt.b},
                   {"grid", opt.grid},       {"levels", opt.levels},    {"coefficients", opt.coefficients}};
    json report = io::make_report(config, out.seed);

    const PeriodizedSpectrum ps = periodize(profile, opt.b, opt.grid);
    report["periodization"] = bounds_json(ps);
    report["grid_mean"] = ps.grid_mean();

    json refinement = json::array();
    for (const auto& level : refinement_study(profile, opt.b, opt.grid, opt.levels)) {
        json row = io::to_json(level.bounds);
        row["grid_size"] = level.grid_size;
        row["zero_runs"] = level.zero_runs;
        refinement.push_back(row);
    }
    report["refinement"] = refinement;

    const long n_max = std::min<long>(opt.coefficients, static_cast<long>(opt.grid / 2) - 1);
    json coeffs = json::array();
    for (long n = -n_max; n <= n_max; ++n) {
        const auto c = fourier_coeff(ps, n);
        const auto via_autocorrelation = opt.b * autocorrelation(profile, static_cast<double>(n) * opt.b);
        coeffs.push_back({{"n", n},
                          {"re", c.real()},
                          {"im", c.imag()},
                          {"autocorrelation_deviation", std::abs(c - via_autocorrelation)}});
    }
    report["fourier_coefficients"] = coeffs;

    Table table({"xi", "phi"});
    const auto values = ps.values();
    for (std::size_t j = 0; j < values.size(); ++j) {
        table.add({ps.xi(j), values[j]});
    }
    emit(report, &table, out);
    return kDeterminate;
}

int run_gram(const GramOptions& opt, const Output& out) {
    const json profile_spec = io::load_json_arg(opt.profile);
    const FourierProfile profile = io::profile_from_json(profile_spec);
    const TranslationSet lambda = io::lambda_from_spec(opt.lambda, opt.window);
    json config = {{"command", "gram"},   {"profile", profile_spec}, {"b", opt.b},          {"lambda", opt.lambda},
                   {"window", opt.window}, {"tol", opt.tol},          {"kernel_tol", opt.kernel_tol}};
    json report = io::make_report(config, out.seed);

    const GramOperator gram = build_gram(profile, opt.b, lambda, opt.tol, out.seed);
    const FrameEstimate est = frame_bound_estimates(gram, opt.kernel_tol);
    report["gram"] = {{"dimension", gram.dimension()},
                      {"lambda", lambda.describe()},
                      {"cross_checked", gram.cross_checked},
                      {"max_cross_check_error", gram.max_cross_check_error},
                      {"A_est", number(est.A_est)},
                      {"B_est", number(est.B_est)},
                      {"numerical_rank", est.numerical_rank},
                      {"min_eigenvalue", est.min_eigenvalue},
                      {"degenerate", est.degenerate}};

    std::mt19937_64 rng(out.seed);
    std::normal_distribution<double> normal;
    std::vector<std::complex<double>> c(gram.dimension());
    for (auto& v : c) {
        v = {normal(rng), normal(rng)};
    }
    const IdentityCheck identity = weighted_norm_identity_check(profile, opt.b, gram, c);
    report["weighted_norm_identity"] = {{"lhs", identity.lhs}, {"rhs", identity.rhs}, {"deviation", identity.deviation}};

    Table table({"i", "j", "re", "im"});
    const auto n = static_cast<Eigen::Index>(gram.dimension());
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            table.add({static_cast<double>(i), static_cast<double>(j), gram.entries(i, j).real(), gram.entries(i, j).imag()});
        }
    }
    emit(report, &table, out);
    return est.degenerate ? kUndetermined : kDeterminate;
}

int run_density(const DensityOptions& opt, const Output& out) {
    const TranslationSet lambda = io::lambda_from_spec(opt.lambda, opt.window);
    const double x_max = opt.x_max > 0.0 ? opt.x_max : 0.5 * lambda.extent();
    json config = {{"command", "density"}, {"lambda", opt.lambda}, {"window", opt.window},
                   {"x_max", x_max},       {"reference", opt.reference}, {"x", opt.x}};
    std::optional<TimeEnvelope> envelope;
    if (!opt.envelope.empty()) {
        const json spec = io::load_json_arg(opt.envelope);
        config["envelope"] = spec;
        envelope = io::envelope_from_json(spec);
    }
    json report = io::make_report(config, out.seed);
    report["lambda"] = {{"description", lambda.describe()}, {"size", lambda.size()}, {"extent", lambda.extent()}};

    std::vector<double> xs = opt.x;
    if (xs.empty()) {
        for (double x = 1.0; x <= x_max; x *= 2.0) {
            xs.push_back(x);
        }
    }
    Table table({"x", "D", "G", "product"});
    json rows = json::array();
    for (double x : xs) {
        const auto d = static_cast<double>(density(lambda, x));
        const double g = envelope ? g_function(*envelope, x) : std::nan("");
        table.add({x, d, g, g * d});
        rows.push_back({{"x", x}, {"D", d}, {"G", number(g)}, {"product", number(g * d)}});
    }
    report["density"] = rows;
    report["density_exponent"] = density_exponent(lambda);
    if (lambda.integer_valued()) {
        const SparsityReport sparse = is_sparse(lambda, 16);
        report["sparsity"] = {{"sparse", sparse.sparse},
                              {"saturated", sparse.saturated},
                              {"gaps_nondecreasing", sparse.gaps_nondecreasing},
                              {"gaps_growing", sparse.gaps_growing},
                              {"first_gap", sparse.first_gap},
                              {"last_gap", sparse.last_gap}};
    }

    int code = kDeterminate;
    if (envelope) {
        report["envelope"] = envelope->describe();
        const SufficientReport suff = upper_bound_sufficient(*envelope, lambda, x_max);
        report["upper_bound_sufficient"] = {{"integral_estimate", number(suff.integral_estimate)},
                                            {"tail_estimate", number(suff.tail_estimate)},
                                            {"tail_modelled", suff.tail_modelled},
                                            {"g_exponent", suff.g_exponent},
                                            {"d_exponent", suff.d_exponent},
                                            {"x_max", suff.x_max},
                                            {"verdict", to_string(suff.verdict)}};
        const NecessaryReport nec = upper_bound_necessary(*envelope, lambda, x_max, opt.reference);
        report["upper_bound_necessary"] = {{"sup_estimate", number(nec.sup_estimate)},
                                           {"sup_reference", number(nec.sup_reference)},
                                           {"growth_factor", number(nec.growth_factor)},
                                           {"x_max", nec.x_max},
                                           {"reference_fraction", nec.reference_fraction},
                                           {"verdict", to_string(nec.verdict)}};
        std::vector<double> grid;
        for (double x = 1.0; x <= x_max; x *= std::exp2(0.25)) {
            grid.push_back(x);
        }
        try {
            const RegularityReport reg = regularity_constant_check(*envelope, grid);
            report["regularity"] = {{"constant", reg.constant}, {"epsilon", reg.epsilon}};
        } catch (const Refusal& e) {
            report["regularity"] = {{"refused", e.what()}};
        }
        if (suff.verdict == Verdict::undetermined && nec.verdict == Verdict::undetermined) {
            code = kUndetermined;
        }
    }
    emit(report, &table, out);
    return code;
}

int run_hausdorff(const HausdorffOptions& opt, const Output& out) {
    const json profile_spec = io::load_json_arg(opt.profile);
    const FourierProfile profile = io::profile_from_json(profile_spec);
    json config = {{"command", "hausdorff"}, {"profile", profile_spec}, {"b", opt.b},      {"grid", opt.grid},
                   {"alpha", opt.alpha},     {"eps", opt.eps},          {"absolute", opt.absolute}};
    json report = io::make_report(config, out.seed);

    const PeriodizedSpectrum ps = periodize(profile, opt.b, opt.grid);
    const double sup = *std::max_element(ps.values().begin(), ps.values().end());
    report["periodization"] = bounds_json(ps);
    const std::vector<int> depths = all_depths(ps);
    Table table({"eps", "alpha", "measure_sum"});
    json covers = json::array();
    std::vector<double> sums;
    for (double e : opt.eps) {
        const double eps = opt.absolute ? e : e * sup;
        const CoverEstimate cover = hausdorff_sublevel(ps, opt.alpha, eps, depths);
        covers.push_back(io::to_json(cover));
        table.add({eps, opt.alpha, cover.measure_sum});
        sums.push_back(cover.measure_sum);
    }
    report["covers"] = covers;
    bool shrinking = true;
    for (std::size_t i = 1; i < sums.size(); ++i) {
        shrinking = shrinking && sums[i] <= sums[i - 1];
    }
    report["nonincreasing_in_eps_order"] = shrinking;
    emit(report, &table, out);
    return kDeterminate;
}

int run_gallery_plateau_ramp(const PairOptions& opt, const Output& out) {
    json config = {{"command", "gallery plateau-ramp"}, {"a", opt.a}, {"b", opt.b}, {"grid", opt.grid}, {"window", opt.window}};
    json report = io::make_report(config, out.seed);
    const FourierProfile profile = plateau_ramp_profile(opt.a, opt.b);
    report["profile"] = io::to_json(profile);
    const PairedVerdict v = paired_verdict(profile, opt.a, opt.b, opt, out.seed);
    report["verdicts"] = v.report;
    emit(report, nullptr, out);
    return paired_exit(v);
}

int run_gallery_ramp_plateau(const PairOptions& opt, const Output& out) {
    json config = {{"command", "gallery ramp-plateau"}, {"a", opt.a}, {"b", opt.b}, {"grid", opt.grid}, {"window", opt.window}};
    json report = io::make_report(config, out.seed);
    const RampPlateau rp = ramp_plateau_profile(opt.a, opt.b);
    report["profile"] = io::to_json(rp.profile);
    report["epsilon"] = rp.epsilon;
    report["lower_constant"] = rp.lower_constant;
    const PairedVerdict v = paired_verdict(rp.profile, opt.b, opt.a, opt, out.seed);
    report["verdicts"] = v.report;
    emit(report, nullptr, out);
    return paired_exit(v);
}

int run_gallery_dyadic(const DyadicOptions& opt, const Output& out) {
    json config = {{"command", "gallery dyadic"}, {"alpha", opt.alpha}, {"n_max", opt.n_max}, {"grid", opt.grid}};
    json report = io::make_report(config, out.seed);
    const DyadicWeight w = dyadic_weight(opt.alpha, opt.n_max, opt.grid);
    json levels = json::array();
    bool within = true;
    for (const auto& l : w.levels) {
        levels.push_back({{"n", l.n},
                          {"m", l.m},
                          {"large_set_measure", l.large_set_measure},
                          {"large_set_bound", l.large_set_bound},
                          {"small_set_energy", l.small_set_energy},
                          {"small_set_bound", l.small_set_bound}});
        within = within && l.large_set_measure <= l.large_set_bound && l.small_set_energy <= l.small_set_bound;
    }
    report["levels"] = levels;
    report["levels_within_bounds"] = within;
    report["periodization"] = bounds_json(w.phi);
    const DyadicConstruction c = dyadic_construction(opt.alpha, opt.n_max);
    report["lambda"] = {{"description", c.lambda.describe()}, {"size", c.lambda.size()}};
    if (!opt.profile_out.empty()) {
        write_text(opt.profile_out, io::dump(io::to_json(w.profile)));
    }
    Table table({"xi", "phi"});
    for (std::size_t j = 0; j < w.phi.grid_size(); ++j) {
        table.add({w.phi.xi(j), w.phi.values()[j]});
    }
    emit(report, &table, out);
    return kDeterminate;
}

int run_verify_dyadic(const DyadicOptions& opt, const Output& out) {
    const long n_hi = opt.n_hi > 0 ? opt.n_hi : opt.n_max;
    json config = {{"command", "verify dyadic"}, {"alpha", opt.alpha}, {"n_max", opt.n_max},
                   {"n_lo", opt.n_lo},           {"n_hi", n_hi},       {"grid", opt.grid}};
    json report = io::make_report(config, out.seed);
    const CounterexampleTrend t = dyadic_counterexample_trend(opt.alpha, opt.n_max, opt.n_lo, n_hi, opt.grid);
    report["weights"] = pair_json(t.weights, "n", "w");
    report["norms"] = pair_json(t.norms, "n", "norm_squared");
    report["decreasing"] = t.decreasing;
    report["phi_positive"] = t.phi_positive;
    report["density"] = pair_json(t.density, "p", "D");
    report["density_exponent"] = t.density_exponent;
    report["density_exponent_bound"] = 1.0 - opt.alpha + 0.1;
    report["density_ok"] = t.density_ok;
    report["density_constant"] = t.density_constant;
    report["conclusion"] = t.conclusion;

    const DyadicWeight w = dyadic_weight(opt.alpha, opt.n_max, opt.grid);
    const std::vector<int> depths = all_depths(w.phi);
    json covers = json::array();
    std::vector<double> sums;
    for (int k : {6, 8, 10, 12}) {
        const CoverEstimate cover = hausdorff_sublevel(w.phi, opt.alpha, std::ldexp(1.0, -k), depths);
        covers.push_back(io::to_json(cover));
        sums.push_back(cover.measure_sum);
    }
    bool shrinking = true;
    for (std::size_t i = 1; i < sums.size(); ++i) {
        shrinking = shrinking && sums[i] < sums[i - 1];
    }
    report["hausdorff"] = covers;
    report["hausdorff_decreasing"] = shrinking;

    Table table({"n", "w_n"});
    for (const auto& [n, wn] : t.weights) {
        table.add({static_cast<double>(n), wn});
    }
    emit(report, &table, out);
    return t.decreasing && t.phi_positive ? kDeterminate : kUndetermined;
}

int run_selftest(const Output& out) {
    json config = {{"command", "selftest"}};
    json report = io::make_report(config, out.seed);
    json checks = json::array();
    bool all_pass = true;
    auto record = [&](const std::string& name, bool pass, json values, bool gating = true) {
        checks.push_back({{"name", name}, {"pass", pass}, {"gating", gating}, {"values", std::move(values)}});
        if (gating) {
            all_pass = all_pass && pass;
        }
    };

    const FourierProfile box({Piece{0.0, 1.0, ConstantShape{1.0}}});
    const FourierProfile ramp({Piece{0.0, 1.0, AffineShape{1.0, 0.0}}});
    const FourierProfile half({Piece{0.0, 0.5, ConstantShape{1.0}}});
    const FourierProfile pr = plateau_ramp_profile(2.0, 1.0);
    const FourierProfile rp = ramp_plateau_profile(3.0, 2.0).profile;

    {
        const PeriodizedSpectrum ps = periodize(box, 1.0, 4096);
        double dev = 0.0;
        for (double v : ps.values()) {
            dev = std::max(dev, std::abs(v - 1.0));
        }
        record("box periodization is identically one", dev < 1e-12, {{"max_deviation", dev}});
    }
    {
        double sym = 0.0;
        double route = 0.0;
        const PeriodizedSpectrum ps = periodize(ramp, 1.5, 1024);
        for (long n = 1; n <= 16; ++n) {
            sym = std::max(sym, std::abs(autocorrelation(ramp, -1.5 * n) - std::conj(autocorrelation(ramp, 1.5 * n))));
            route = std::max(route, std::abs(fourier_coeff(ps, n) - 1.5 * autocorrelation(ramp, 1.5 * n)));
        }
        record("autocorrelation conjugate symmetry", sym < 1e-14, {{"max_deviation", sym}});
        record("coefficients agree with autocorrelation", route < 1e-12, {{"max_deviation", route}});
    }
    {
        double dev = 0.0;
        for (const FourierProfile* p : {&ramp, &pr, &rp}) {
            dev = std::max(dev, dilation_deviation(*p, 1.0, 2, 4096));
        }
        record("dilation identity", dev < 1e-10, {{"max_deviation", dev}});
    }
    {
        bool psd = true;
        bool nested = true;
        double worst = 0.0;
        for (const FourierProfile* p : {&box, &ramp, &half, &pr, &rp}) {
            double prev_A = std::numeric_limits<double>::infinity();
            double prev_B = 0.0;
            for (long N : {8L, 16L, 32L}) {
                const GramOperator g = build_gram(*p, 1.0, TranslationSet::integers(N), 1e-10, out.seed);
                const FrameEstimate e = frame_bound_estimates(g);
                worst = std::min(worst, e.min_eigenvalue / p->energy());
                psd = psd && e.min_eigenvalue >= -1e-8 * p->energy();
                nested = nested && e.min_eigenvalue <= prev_A * (1 + 1e-9) && e.B_est >= prev_B * (1 - 1e-9);
                prev_A = e.min_eigenvalue;
                prev_B = e.B_est;
            }
        }
        record("gram positive semidefinite", psd, {{"worst_relative_min_eigenvalue", worst}});
        record("gram eigenvalues interlace over nested windows", nested, json::object());
    }
    {
        const GramOperator g = build_gram(pr, 1.0, TranslationSet::integers(16), 1e-10, out.seed);
        std::mt19937_64 rng(out.seed);
        std::normal_distribution<double> normal;
        std::vector<std::complex<double>> c(g.dimension());
        for (auto& v : c) {
            v = {normal(rng), normal(rng)};
        }
        const IdentityCheck id = weighted_norm_identity_check(pr, 1.0, g, c);
        record("weighted norm identity", id.deviation < 1e-10, {{"lhs", id.lhs}, {"rhs", id.rhs}, {"deviation", id.deviation}});
    }
    {
        std::mt19937_64 rng(out.seed ^ 0x5eedULL);
        std::normal_distribution<double> normal;
        std::size_t violations = 0;
        const TranslationSet sets[] = {TranslationSet::powers(2, 24), TranslationSet::integers(128),
                                       TranslationSet::geometric(2, 14)};
        for (int t = 0; t < 300; ++t) {
            const TranslationSet& lambda = sets[t % 3];
            Coefficients c(lambda.size());
            for (auto& v : c) {
                v = {normal(rng), normal(rng)};
            }
            std::uniform_int_distribution<long> lo(-200, 200);
            std::uniform_int_distribution<long> len(0, 60);
            const long j_lo = lo(rng);
            const auto r = coefficient_density_check(lambda, std::move(c), j_lo, j_lo + len(rng));
            violations += (r.lhs > r.rhs * (1.0 + 1e-12)) ? 1 : 0;
        }
        record("coefficient density bound", violations == 0, {{"trials", 300}, {"violations", violations}});
    }
    {
        std::vector<double> lengths = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
        const TranslationSet lambda = TranslationSet::integers(512);
        const Coefficients characters(lambda.size(), 1.0);
        const IntervalMassScan scan = interval_mass_scan(lambda, characters, lengths, 0.0);
        record("interval mass ratio flat for characters", std::abs(scan.slope) <= 0.2, {{"slope", scan.slope}});
    }
    {
        const CounterexampleTrend t = dyadic_counterexample_trend(0.5, 12, 4, 12, 65536);
        record("dyadic weights decrease", t.decreasing && t.phi_positive,
               {{"w_first", t.weights.front().second}, {"w_last", t.weights.back().second}});
        record("dyadic density exponent", t.density_ok,
               {{"exponent", t.density_exponent}, {"bound", 0.6}}, false);
    }

    report["checks"] = checks;
    report["all_gating_pass"] = all_pass;
    emit(report, nullptr, out);
    return all_pass ? kDeterminate : kInconsistent;
}

} // namespace frameseq::cli
