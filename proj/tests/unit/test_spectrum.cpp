#include "frameseq/constructions.hpp"
#include "frameseq/error.hpp"
#include "frameseq/spectrum.hpp"
#include "frameseq/translation_set.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace frameseq;

namespace {

FourierProfile box() { return FourierProfile::indicator(0.0, 1.0); }

FourierProfile ramp() { return FourierProfile({Piece{0.0, 1.0, AffineShape{1.0, 0.0}}}); }

FourierProfile mixed() {
    return FourierProfile({
        Piece{-0.75, -0.25, ConstantShape{0.5}},
        Piece{0.0, 0.6, AffineShape{-1.5, 1.2}},
        Piece{0.8, 1.3, SampledShape{{0.2, 1.0, 0.4, 0.7}}},
    });
}

} // namespace

TEST_CASE("eval_spectrum on the indicator") {
    CHECK(eval_spectrum(box(), 0.5) == 1.0);
    CHECK(eval_spectrum(box(), 1.0) == 0.0);
    CHECK(eval_spectrum(box(), -0.1) == 0.0);
    CHECK(eval_spectrum(box(), 7.0) == 0.0);
}

TEST_CASE("plateau-ramp profile value on the ramp") {
    // 2(1 - ξ) on [1/2, 1) for (a, b) = (2, 1).
    CHECK(eval_spectrum(plateau_ramp_profile(2.0, 1.0), 0.75) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_spectrum(plateau_ramp_profile(2.0, 1.0), 0.25) == 1.0);
}

TEST_CASE("sampled shapes are piecewise constant over equal cells") {
    const FourierProfile p = mixed();
    CHECK(p(0.8 + 0.01) == 0.2);
    CHECK(p(0.8 + 0.125 + 0.01) == 1.0);
    CHECK(p(1.3 - 0.01) == 0.7);
    CHECK(p(0.7) == 0.0);
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(FourierProfile({}), InvalidArgument);
    CHECK_THROWS_AS(FourierProfile({Piece{0.0, 1.0, ConstantShape{0.0}}}), InvalidArgument);
    CHECK_THROWS_AS(FourierProfile({Piece{0.5, 1.0, ConstantShape{1.0}}, Piece{0.0, 0.6, ConstantShape{1.0}}}),
                    InvalidArgument);
    CHECK_THROWS_AS(FourierProfile({Piece{0.0, 1.0, SampledShape{{1.0, -0.5}}}}), InvalidArgument);
    CHECK_THROWS_AS(FourierProfile({Piece{1.0, 1.0, ConstantShape{1.0}}}), InvalidArgument);
}

TEST_CASE("energy matches quadrature of the squared profile") {
    for (const auto& p : {box(), ramp(), mixed(), plateau_ramp_profile(3.0, 1.0)}) {
        CHECK(p.energy() == doctest::Approx(oracle::autocorrelation(p, 0.0).real()).epsilon(1e-12));
    }
}

TEST_CASE("autocorrelation of the indicator") {
    CHECK(autocorrelation(box(), 0.0).real() == doctest::Approx(1.0).epsilon(1e-15));
    for (int n = 1; n <= 20; ++n) {
        CHECK(std::abs(autocorrelation(box(), n)) < 1e-14);
        CHECK(std::abs(autocorrelation(box(), -n)) < 1e-14);
    }
}

TEST_CASE("autocorrelation agrees with direct quadrature") {
    for (const auto& p : {ramp(), mixed(), plateau_ramp_profile(2.0, 1.0), ramp_plateau_profile(3.0, 2.0).profile}) {
        for (double a : {0.0, 0.37, 1.0, 2.5, -3.0, 11.0, 64.0}) {
            CHECK(std::abs(autocorrelation(p, a) - oracle::autocorrelation(p, a)) < 1e-11);
        }
    }
}

TEST_CASE("autocorrelation is conjugate symmetric and bounded by the energy") {
    for (const auto& p : {ramp(), mixed(), plateau_ramp_profile(2.0, 1.0)}) {
        const double e = autocorrelation(p, 0.0).real();
        for (double a = 0.1; a < 40.0; a += 0.7) {
            const auto plus = autocorrelation(p, a);
            CHECK(std::abs(autocorrelation(p, -a) - std::conj(plus)) < 1e-14);
            CHECK(std::abs(plus) <= e + 2e-14);
        }
    }
}

TEST_CASE("even profiles have real autocorrelation") {
    const FourierProfile even({Piece{-1.0, -0.5, AffineShape{2.0, 2.0}}, Piece{-0.5, 0.5, ConstantShape{1.0}},
                               Piece{0.5, 1.0, AffineShape{-2.0, 2.0}}});
    CHECK(even.is_even());
    CHECK_FALSE(ramp().is_even());
    for (double a = 0.0; a < 10.0; a += 0.3) {
        CHECK(std::abs(autocorrelation(even, a).imag()) < 1e-15);
    }
}

TEST_CASE("inverse transform agrees with quadrature") {
    const FourierProfile p = mixed();
    for (double x : {0.0, 0.5, 3.25, -7.0, 40.0}) {
        const auto expected = oracle::gauss_legendre<std::complex<double>>(
            [&](double xi) { return p(xi) * std::polar(1.0, 2.0 * oracle::kPi * x * xi); }, -0.75, -0.25, 512) +
            oracle::gauss_legendre<std::complex<double>>(
                [&](double xi) { return p(xi) * std::polar(1.0, 2.0 * oracle::kPi * x * xi); }, 0.0, 0.6, 512) +
            oracle::gauss_legendre<std::complex<double>>(
                [&](double xi) { return p(xi) * std::polar(1.0, 2.0 * oracle::kPi * x * xi); }, 0.8, 1.3, 2048);
        CHECK(std::abs(inverse_transform(p, x) - expected) < 1e-9);
    }
}

TEST_CASE("scaling multiplies the energy by s squared") {
    const FourierProfile p = mixed();
    CHECK(p.scaled(3.0).energy() == doctest::Approx(9.0 * p.energy()).epsilon(1e-14));
}

TEST_CASE("power envelope") {
    const TimeEnvelope F = TimeEnvelope::power(0.75);
    CHECK(F(0.5) == 1.0);
    CHECK(F(16.0) == doctest::Approx(0.125));
    CHECK_FALSE(F.integrable());
    CHECK(TimeEnvelope::power(1.5).integrable());
    CHECK(F.integral(16.0) == doctest::Approx(1.0 + 4.0 * (2.0 - 1.0)));
    CHECK(F.tail_square_integral(4.0) == doctest::Approx(std::pow(4.0, -0.5) / 0.5));
    CHECK_THROWS_AS(TimeEnvelope::power(0.5), InvalidArgument);
}

TEST_CASE("tabulated envelope interpolates log-linearly") {
    const TimeEnvelope F = TimeEnvelope::tabulated({1.0, 10.0, 100.0}, {1.0, 0.1, 0.001});
    CHECK(F(0.2) == 1.0);
    CHECK(F(std::sqrt(10.0)) == doctest::Approx(std::pow(10.0, -0.5)));
    CHECK(F(1000.0) == doctest::Approx(1e-5));
    CHECK(F.tail_exponent() == doctest::Approx(2.0));
    CHECK(F.integrable());
    CHECK_THROWS_AS(TimeEnvelope::tabulated({1.0, 2.0}, {1.0, 2.0}), InvalidArgument);
    CHECK_THROWS_AS(TimeEnvelope::tabulated({1.0, 2.0}, {2.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(TimeEnvelope::tabulated({1.0, 100.0}, {1.0, 0.5}), InvalidArgument);
}

TEST_CASE("rate function admissibility") {
    const RateCheck linear = check_rate_function(RateFunction{1.0, 1.0, 0.0});
    CHECK(linear.admissible());
    CHECK(linear.c1 == doctest::Approx(2.0));
    CHECK(linear.c2 == doctest::Approx(2.0));
    CHECK(check_rate_function(RateFunction{1.0, 1.0, 1.0}).admissible());
    CHECK_FALSE(check_rate_function(RateFunction{1.0, 0.5, 0.0}).integral_diverges);
    CHECK_FALSE(check_rate_function(RateFunction{1.0, 0.0, 1.0}).doubling_ok);
    CHECK_THROWS_AS(TimeEnvelope::exponential(1.0, RateFunction{1.0, 0.5, 0.0}), Refusal);
    const TimeEnvelope e = TimeEnvelope::exponential(0.5, RateFunction{1.0, 1.0, 0.0});
    CHECK(e(2.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(e.integrable());
}

TEST_CASE("envelope autocorrelation at zero is the squared norm") {
    const TimeEnvelope F = TimeEnvelope::power(0.75);
    // 2 (1 + ∫_1^∞ x^{-3/2}) = 2 (1 + 2).
    CHECK(autocorrelation(F, 0.0) == doctest::Approx(6.0).epsilon(1e-9));
    const TimeEnvelope e = TimeEnvelope::exponential(1.0, RateFunction{1.0, 1.0, 0.0});
    // 2 ∫_0^∞ e^{-2x} dx.
    CHECK(autocorrelation(e, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("envelope autocorrelation sits inside the G bracket") {
    // (4/3) G(3t) <= ∫ψ(x+t)ψ(x-t) dx <= 4 G(t).
    for (double a : {0.6, 0.75, 0.9, 1.5}) {
        const TimeEnvelope F = TimeEnvelope::power(a);
        for (double t = 0.5; t < 2000.0; t *= 1.7) {
            const double value = autocorrelation(F, 2.0 * t);
            CHECK(value >= 4.0 / 3.0 * g_function(F, 3.0 * t) * (1 - 1e-9));
            CHECK(value <= 4.0 * g_function(F, t) * (1 + 1e-9));
        }
    }
}

TEST_CASE("envelope autocorrelation is even and bounded") {
    const TimeEnvelope F = TimeEnvelope::tabulated({1.0, 10.0, 100.0}, {1.0, 0.2, 0.01});
    const double zero = autocorrelation(F, 0.0);
    for (double a : {0.3, 2.0, 17.0, 250.0}) {
        CHECK(autocorrelation(F, a) == doctest::Approx(autocorrelation(F, -a)).epsilon(1e-12));
        CHECK(autocorrelation(F, a) <= zero);
    }
}

TEST_CASE("unreachable tolerance raises a quadrature error") {
    CHECK_THROWS_AS(autocorrelation(TimeEnvelope::power(0.51), 3.0, 1e-300), QuadratureError);
    CHECK_THROWS_AS(autocorrelation(TimeEnvelope::power(0.75), 3.0, 0.0), InvalidArgument);
}
