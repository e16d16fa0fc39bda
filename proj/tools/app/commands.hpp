#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frameseq::cli {

enum ExitCode : int {
    kDeterminate = 0,
    kUsage = 1,
    kUndetermined = 2,
    kInconsistent = 3,
};

struct Output {
    std::string report = "-"; // JSON report path, "-" for stdout
    std::string csv;          // CSV table path, empty for none
    std::uint64_t seed = 0;
};

struct AnalyzeOptions {
    std::string profile;
    double b = 1.0;
    std::string lambda = "Z";
    long window = 256;
    std::size_t grid = 4096;
    int levels = 4;
    double tol = 1e-10;
    double kernel_tol = 1e-6;
};

struct PeriodizeOptions {
    std::string profile;
    double b = 1.0;
    std::size_t grid = 4096;
    int levels = 4;
    long coefficients = 8;
};

struct GramOptions {
    std::string profile;
    double b = 1.0;
    std::string lambda = "Z";
    long window = 64;
    double tol = 1e-10;
    double kernel_tol = 1e-6;
};

struct DensityOptions {
    std::string lambda = "Z";
    long window = 1024;
    std::string envelope;
    double x_max = 0.0; // 0: half the extent of Λ
    double reference = 0.25;
    std::vector<double> x;
};

struct HausdorffOptions {
    std::string profile;
    double b = 1.0;
    std::size_t grid = 65536;
    double alpha = 0.5;
    std::vector<double> eps = {1e-2, 1e-3, 1e-4, 1e-5};
    bool absolute = false;
};

struct PairOptions {
    double a = 2.0;
    double b = 1.0;
    std::size_t grid = 4096;
    long window = 256;
};

struct DyadicOptions {
    double alpha = 0.5;
    long n_max = 12;
    long n_lo = 4;
    long n_hi = 0; // 0: n_max
    std::size_t grid = 65536;
    std::string profile_out;
};

int run_analyze(const AnalyzeOptions& opt, const Output& out);
int run_periodize(const PeriodizeOptions& opt, const Output& out);
int run_gram(const GramOptions& opt, const Output& out);
int run_density(const DensityOptions& opt, const Output& out);
int run_hausdorff(const HausdorffOptions& opt, const Output& out);
int run_gallery_plateau_ramp(const PairOptions& opt, const Output& out);
int run_gallery_ramp_plateau(const PairOptions& opt, const Output& out);
int run_gallery_dyadic(const DyadicOptions& opt, const Output& out);
int run_verify_dyadic(const DyadicOptions& opt, const Output& out);
int run_selftest(const Output& out);

} // namespace frameseq::cli
