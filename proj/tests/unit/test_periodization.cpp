#include "frameseq/constructions.hpp"
#include "frameseq/error.hpp"
#include "frameseq/periodization.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace frameseq;

namespace {

FourierProfile box() { return FourierProfile::indicator(0.0, 1.0); }

FourierProfile triangle() { return plateau_ramp_profile(2.0, 1.0); }

FourierProfile mixed() {
    return FourierProfile({
        Piece{-0.75, -0.25, ConstantShape{0.5}},
        Piece{0.0, 0.6, AffineShape{-1.5, 1.2}},
        Piece{0.8, 1.3, SampledShape{{0.2, 1.0, 0.4, 0.7}}},
    });
}

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

} // namespace

TEST_CASE("indicator periodizes to the constant b") {
    const PeriodizedSpectrum one = periodize(box(), 1.0, 4096);
    for (double v : one.values()) {
        CHECK(v == 1.0);
    }
    CHECK(one.tail_bound() == 0.0);
    const PeriodizedSpectrum two = periodize(box(), 2.0, 256);
    for (std::size_t j = 0; j < two.grid_size(); ++j) {
        CHECK(two.values()[j] == doctest::Approx(oracle::periodization(box(), 2.0, two.xi(j))));
        CHECK(two.values()[j] == 2.0);
    }
}

TEST_CASE("values match direct summation") {
    for (const auto& p : {triangle(), mixed(), ramp_plateau_profile(3.0, 2.0).profile}) {
        for (double b : {0.5, 1.0, 1.7, 3.0}) {
            const PeriodizedSpectrum ps = periodize(p, b, 512);
            for (std::size_t j = 0; j < ps.grid_size(); j += 7) {
                CHECK(ps.values()[j] == doctest::Approx(oracle::periodization(p, b, ps.xi(j))).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("triangle spectrum at b = 1 is the squared profile") {
    const PeriodizedSpectrum ps = periodize(triangle(), 1.0, 1024);
    for (std::size_t j = 0; j < ps.grid_size(); ++j) {
        const double v = triangle()(ps.xi(j));
        CHECK(ps.values()[j] == doctest::Approx(v * v).epsilon(1e-14));
    }
    CHECK(ps.values().back() < 1e-5);
}

TEST_CASE("fourier coefficients of the indicator spectra") {
    const PeriodizedSpectrum one = periodize(box(), 1.0, 64);
    CHECK(std::abs(fourier_coeff(one, 0) - 1.0) < 1e-15);
    const PeriodizedSpectrum two = periodize(box(), 2.0, 64);
    CHECK(std::abs(fourier_coeff(two, 0) - 2.0) < 1e-15);
    for (long n = 1; n < 32; ++n) {
        CHECK(std::abs(fourier_coeff(one, n)) < 1e-15);
        CHECK(std::abs(fourier_coeff(two, -n)) < 1e-15);
    }
}

TEST_CASE("fourier coefficients match the autocorrelation route") {
    // Φ̂_b(n) / b = ⟨τ_{nb} φ, φ⟩ from quadrature of |φ̂|² e^{-2πi n b ξ}.
    for (const auto& p : {triangle(), mixed()}) {
        for (double b : {1.0, 2.0, 0.75}) {
            const PeriodizedSpectrum ps = periodize(p, b, 1024);
            for (long n = -12; n <= 12; ++n) {
                const auto expected = b * oracle::autocorrelation(p, static_cast<double>(n) * b);
                CHECK(std::abs(fourier_coeff(ps, n) - expected) < 1e-10);
            }
        }
    }
}

TEST_CASE("grid coefficients are the discrete transform of the samples") {
    const PeriodizedSpectrum ps = periodize(mixed(), 1.3, 256);
    const auto values = to_vector(ps.values());
    for (long n : {0L, 1L, -5L, 17L}) {
        CHECK(std::abs(grid_fourier_coeff(ps, n) - oracle::grid_dft(values, n)) < 1e-13);
    }
    const PeriodizedSpectrum sampled = PeriodizedSpectrum::from_samples(1.0, values);
    CHECK(std::abs(fourier_coeff(sampled, 3) - oracle::grid_dft(values, 3)) < 1e-13);
}

TEST_CASE("aliased coefficients are refused") {
    const PeriodizedSpectrum ps = periodize(box(), 1.0, 64);
    CHECK_THROWS_AS(fourier_coeff(ps, 32), Refusal);
    CHECK_THROWS_AS(fourier_coeff(ps, -40), Refusal);
}

TEST_CASE("periodize validates its inputs") {
    CHECK_THROWS_AS(periodize(box(), 0.0, 64), InvalidArgument);
    CHECK_THROWS_AS(periodize(box(), 1.0, 8), InvalidArgument);
    CHECK_THROWS_AS(periodize(box(), 1.0, 100), InvalidArgument);
}

TEST_CASE("mean identity") {
    // (1/M) Σ Φ_b(ξ_j) ≈ Φ̂_b(0) = b ‖φ‖².
    for (const auto& p : {triangle(), mixed()}) {
        for (double b : {1.0, 2.5}) {
            const PeriodizedSpectrum ps = periodize(p, b, 8192);
            const double exact = b * p.energy();
            CHECK(fourier_coeff(ps, 0).real() == doctest::Approx(exact).epsilon(1e-13));
            CHECK(ps.grid_mean() == doctest::Approx(exact).epsilon(1e-3));
        }
    }
}

TEST_CASE("essential bounds") {
    const PeriodizedSpectrum one = periodize(box(), 1.0, 256);
    const EssentialBounds e = essential_bounds(one, 1e-9);
    CHECK(e.inf_nonzero == 1.0);
    CHECK(e.sup == 1.0);
    CHECK(e.zero_fraction == 0.0);

    double previous = 1.0;
    for (std::size_t M : {1024, 2048, 4096, 8192}) {
        const EssentialBounds t = essential_bounds(periodize(triangle(), 1.0, M), 1e-14);
        CHECK(t.inf_nonzero < previous);
        CHECK(t.zero_fraction == 0.0);
        previous = t.inf_nonzero;
    }
}

TEST_CASE("ramp-plateau spectrum is zero or bounded below") {
    const RampPlateau rp = ramp_plateau_profile(3.0, 2.0);
    const PeriodizedSpectrum ps = periodize(rp.profile, 2.0, 4096);
    const EssentialBounds e = essential_bounds(ps, default_zero_threshold(ps));
    CHECK(e.inf_nonzero >= rp.lower_constant);
}

TEST_CASE("zero counting") {
    const PeriodizedSpectrum one = periodize(box(), 1.0, 256);
    CHECK(zero_count(one, 1e-9).count == 0);

    std::vector<double> sine(1024);
    for (std::size_t j = 0; j < sine.size(); ++j) {
        const double s = std::sin(oracle::kPi * (static_cast<double>(j) + 0.5) / 1024.0);
        sine[j] = s * s;
    }
    const ZeroRuns wrapped = zero_count(PeriodizedSpectrum::from_samples(1.0, sine), 1e-4);
    REQUIRE(wrapped.count == 1);
    CHECK(wrapped.intervals[0].second > 1.0);

    const PeriodizedSpectrum tri = periodize(triangle(), 1.0, 4096);
    const ZeroRuns near_one = zero_count(tri, 1e-6);
    REQUIRE(near_one.count == 1);
    CHECK(near_one.intervals[0].first > 0.99);

    const PeriodizedSpectrum half = periodize(FourierProfile::indicator(0.0, 0.25), 1.0, 256);
    CHECK_THROWS_AS(zero_count(half, 1e-9), Refusal);
}

TEST_CASE("refinement study doubles the grid") {
    const auto levels = refinement_study(triangle(), 1.0, 512, 3);
    REQUIRE(levels.size() == 3);
    CHECK(levels[1].grid_size == 1024);
    CHECK(levels[2].grid_size == 2048);
    CHECK(levels[2].bounds.inf_nonzero < levels[0].bounds.inf_nonzero);
}

TEST_CASE("dilation identity") {
    for (const auto& p : {triangle(), mixed(), ramp_plateau_profile(3.0, 2.0).profile, plateau_ramp_profile(3.0, 1.0)}) {
        for (int m : {2, 3}) {
            CHECK(dilation_deviation(p, 1.0, m, 2048) < 1e-10);
            CHECK(dilation_deviation(p, 0.7, m, 512) < 1e-10);
        }
    }
}

TEST_CASE("dilation identity against direct summation") {
    const FourierProfile p = mixed();
    for (double xi : {0.01, 0.3, 0.77}) {
        const double lhs = oracle::periodization(p, 2.0, xi);
        const double rhs = oracle::periodization(p, 1.0, xi / 2.0) + oracle::periodization(p, 1.0, (xi + 1.0) / 2.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    }
}

TEST_CASE("coefficient sequence is positive semidefinite") {
    for (const auto& p : {triangle(), mixed(), FourierProfile::indicator(0.0, 0.5)}) {
        for (double b : {1.0, 2.0}) {
            const PeriodizedSpectrum ps = periodize(p, b, 1024);
            for (std::size_t size : {4, 16, 64}) {
                CHECK(toeplitz_min_eigenvalue(ps, size) >= -1e-8);
            }
        }
    }
}
