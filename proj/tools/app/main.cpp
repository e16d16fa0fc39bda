#include "commands.hpp"

#include "frameseq/error.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

namespace {

using namespace frameseq::cli;

void add_output(CLI::App* app, Output& out, bool with_csv) {
    app->add_option("--out", out.report, "JSON report path ('-' for stdout)");
    app->add_option("--seed", out.seed, "Root seed, recorded in the report");
    if (with_csv) {
        app->add_option("--csv", out.csv, "CSV table path ('-' for stdout)");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frame properties of integer translates: periodization, Gram bounds, density tests, constructions"};
    app.require_subcommand(1);
    app.footer("Exit status: 0 determinate, 1 usage/schema/refusal, 2 undetermined, 3 internal inconsistency.\n"
               "FRAMESEQ_THREADS caps worker threads.");

    std::function<int()> action;
    Output out;

    AnalyzeOptions analyze;
    auto* a = app.add_subcommand("analyze", "Periodize, bound and classify (τ_{λb}φ)_{λ∈Λ}");
    a->add_option("--profile", analyze.profile, "Profile JSON (inline or path)")->required();
    a->add_option("--b", analyze.b, "Spacing b")->check(CLI::PositiveNumber);
    a->add_option("--lambda", analyze.lambda, "Z, N, mZ or a generator JSON");
    a->add_option("--window", analyze.window, "Window N for Z, N and mZ")->check(CLI::PositiveNumber);
    a->add_option("--grid", analyze.grid, "Periodization grid size (power of two)");
    a->add_option("--levels", analyze.levels, "Refinement levels")->check(CLI::Range(1, 8));
    a->add_option("--tol", analyze.tol, "Coefficient tolerance");
    a->add_option("--kernel-tol", analyze.kernel_tol, "Relative kernel threshold for A_est");
    add_output(a, out, false);
    a->callback([&] { action = [&] { return run_analyze(analyze, out); }; });

    PeriodizeOptions periodize;
    auto* p = app.add_subcommand("periodize", "Sample Φ_b and its Fourier coefficients");
    p->add_option("--profile", periodize.profile, "Profile JSON (inline or path)")->required();
    p->add_option("--b", periodize.b, "Spacing b")->check(CLI::PositiveNumber);
    p->add_option("--grid", periodize.grid, "Grid size (power of two)");
    p->add_option("--levels", periodize.levels, "Refinement levels")->check(CLI::Range(1, 8));
    p->add_option("--coefficients", periodize.coefficients, "Report Φ̂_b(n) for |n| <= this")->check(CLI::NonNegativeNumber);
    add_output(p, out, true);
    p->footer("CSV columns: xi,phi (midpoint grid).");
    p->callback([&] { action = [&] { return run_periodize(periodize, out); }; });

    GramOptions gram;
    auto* g = app.add_subcommand("gram", "Finite Gram matrix and its frame bound estimates");
    g->add_option("--profile", gram.profile, "Profile JSON (inline or path)")->required();
    g->add_option("--b", gram.b, "Spacing b")->check(CLI::PositiveNumber);
    g->add_option("--lambda", gram.lambda, "Z, N, mZ or a generator JSON");
    g->add_option("--window", gram.window, "Window N for Z, N and mZ")->check(CLI::PositiveNumber);
    g->add_option("--tol", gram.tol, "Coefficient tolerance");
    g->add_option("--kernel-tol", gram.kernel_tol, "Relative kernel threshold for A_est");
    add_output(g, out, true);
    g->footer("CSV columns: i,j,re,im (Gram entries).");
    g->callback([&] { action = [&] { return run_gram(gram, out); }; });

    DensityOptions density;
    auto* d = app.add_subcommand("density", "Density function of Λ and the upper-bound tests for an envelope");
    d->add_option("--lambda", density.lambda, "Z, N, mZ or a generator JSON");
    d->add_option("--window", density.window, "Window N for Z, N and mZ")->check(CLI::PositiveNumber);
    d->add_option("--envelope", density.envelope, "Envelope JSON (inline or path)");
    d->add_option("--x-max", density.x_max, "Largest x for the tests (default: half the extent)");
    d->add_option("--reference", density.reference, "Reference fraction of x_max for the growth factor")
        ->check(CLI::Range(0.01, 0.99));
    d->add_option("--x", density.x, "Evaluation points (default: powers of two up to x_max)");
    add_output(d, out, true);
    d->footer("CSV columns: x,D,G,product (G and product are nan without an envelope).");
    d->callback([&] { action = [&] { return run_density(density, out); }; });

    HausdorffOptions hausdorff;
    auto* h = app.add_subcommand("hausdorff", "Dyadic cover sums of the sublevel sets {Φ_b <= ε}");
    h->add_option("--profile", hausdorff.profile, "Profile JSON (inline or path)")->required();
    h->add_option("--b", hausdorff.b, "Spacing b")->check(CLI::PositiveNumber);
    h->add_option("--grid", hausdorff.grid, "Grid size (power of two)");
    h->add_option("--alpha", hausdorff.alpha, "Exponent α")->check(CLI::Range(0.0, 1.0));
    h->add_option("--eps", hausdorff.eps, "Levels ε, relative to sup Φ_b unless --absolute");
    h->add_flag("--absolute", hausdorff.absolute, "Treat --eps as absolute levels");
    add_output(h, out, true);
    h->footer("CSV columns: eps,alpha,measure_sum.");
    h->callback([&] { action = [&] { return run_hausdorff(hausdorff, out); }; });

    auto* gallery = app.add_subcommand("gallery", "Constructions with known answers");
    gallery->require_subcommand(1);

    PairOptions pr;
    auto* gpr = gallery->add_subcommand("plateau-ramp", "Frame at spacing a, not a frame at spacing b < a");
    gpr->add_option("--a", pr.a, "Spacing a")->check(CLI::PositiveNumber);
    gpr->add_option("--b", pr.b, "Spacing b")->check(CLI::PositiveNumber);
    gpr->add_option("--grid", pr.grid, "Grid size (power of two)");
    gpr->add_option("--window", pr.window, "Gram window N for Z")->check(CLI::PositiveNumber);
    add_output(gpr, out, false);
    gpr->callback([&] { action = [&] { return run_gallery_plateau_ramp(pr, out); }; });

    PairOptions rp;
    rp.a = 3.0;
    rp.b = 2.0;
    auto* grp = gallery->add_subcommand("ramp-plateau", "Frame at spacing b, not a frame at spacing a > b");
    grp->add_option("--a", rp.a, "Spacing a")->check(CLI::PositiveNumber);
    grp->add_option("--b", rp.b, "Spacing b")->check(CLI::PositiveNumber);
    grp->add_option("--grid", rp.grid, "Grid size (power of two)");
    grp->add_option("--window", rp.window, "Gram window N for Z")->check(CLI::PositiveNumber);
    add_output(grp, out, false);
    grp->callback([&] { action = [&] { return run_gallery_ramp_plateau(rp, out); }; });

    DyadicOptions gd;
    auto* gdy = gallery->add_subcommand("dyadic", "Dyadic block weight Φ and its level sets");
    gdy->add_option("--alpha", gd.alpha, "Exponent α")->check(CLI::Range(0.0, 1.0));
    gdy->add_option("--nmax", gd.n_max, "Number of blocks")->check(CLI::Range(1, 20));
    gdy->add_option("--grid", gd.grid, "Grid size (power of two, >= 2^{nmax+2})");
    gdy->add_option("--profile-out", gd.profile_out, "Write the sampled profile JSON here");
    add_output(gdy, out, true);
    gdy->footer("CSV columns: xi,phi.");
    gdy->callback([&] { action = [&] { return run_gallery_dyadic(gd, out); }; });

    auto* verify = app.add_subcommand("verify", "Reproduce construction-level claims");
    verify->require_subcommand(1);
    DyadicOptions vd;
    auto* vdy = verify->add_subcommand("dyadic", "Weights w_n = ∫|f_n|²Φ along the dyadic blocks");
    vdy->add_option("--alpha", vd.alpha, "Exponent α")->check(CLI::Range(0.0, 1.0));
    vdy->add_option("--nmax", vd.n_max, "Number of blocks")->check(CLI::Range(2, 20));
    vdy->add_option("--nlo", vd.n_lo, "First block reported")->check(CLI::PositiveNumber);
    vdy->add_option("--nhi", vd.n_hi, "Last block reported (default nmax)");
    vdy->add_option("--grid", vd.grid, "Grid size (power of two, >= 2^{nmax+2})");
    add_output(vdy, out, true);
    vdy->footer("CSV columns: n,w_n.");
    vdy->callback([&] { action = [&] { return run_verify_dyadic(vd, out); }; });

    auto* self = app.add_subcommand("selftest", "Deterministic invariant suite");
    add_output(self, out, false);
    self->callback([&] { action = [&] { return run_selftest(out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kDeterminate : kUsage;
    }

    try {
        return action();
    } catch (const frameseq::InconsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kInconsistent;
    } catch (const frameseq::Refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kUsage;
    } catch (const frameseq::QuadratureError& e) {
        std::cerr << "quadrature: " << e.what() << " (achieved " << e.achieved_error() << ")\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
