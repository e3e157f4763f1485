#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spectra/fourier.hpp"

using namespace spectra;

namespace {

FloatIntervals random_union(std::mt19937& rng, int max_pieces) {
    std::uniform_int_distribution<int> pieces(1, max_pieces);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    std::uniform_real_distribution<double> len(0.1, 1.0);
    std::vector<std::pair<double, double>> raw;
    double cursor = pos(rng);
    const int n = pieces(rng);
    for (int i = 0; i < n; ++i) {
        const double a = cursor + len(rng);
        const double b = a + len(rng);
        raw.emplace_back(a, b);
        cursor = b;
    }
    return normalize(std::move(raw));
}

}  // namespace

TEST_SUITE("fourier") {

TEST_CASE("unit interval transform is the sinc closed form") {
    const auto unit = normalize<double>({{-0.5, 0.5}});
    const FourierEvaluator f(unit);
    for (const double xi : {0.1, 0.3, 0.5, 1.7, -2.3, 7.0}) {
        const double expected = std::sin(M_PI * xi) / (M_PI * xi);
        CHECK(f.chi_hat(xi).real() == doctest::Approx(expected).epsilon(1e-13));
        CHECK(std::abs(f.chi_hat(xi).imag()) < 1e-13);
    }
    CHECK(f.chi_hat(0.0).real() == doctest::Approx(1.0));
    CHECK(f.measure() == doctest::Approx(1.0));
}

TEST_CASE("transform agrees with the quadrature oracle on random unions") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> xis(-8.0, 8.0);
    for (int trial = 0; trial < 40; ++trial) {
        const FloatIntervals omega = random_union(rng, 3);
        const FourierEvaluator f(omega);
        const double xi = xis(rng);
        const complexd direct = f.chi_hat(xi);
        const complexd oracle = quadrature_chi_hat(omega, xi, 1e-11);
        CHECK(std::abs(direct - oracle) < 1e-9);
    }
}

TEST_CASE("removable singularity branch is continuous") {
    const auto omega = normalize<double>({{0.25, 0.75}, {1.0, 2.5}});
    const FourierEvaluator f(omega);
    // Straddle the small-xi switchover and compare against quadrature.
    for (const double xi : {1e-9, 1e-7, 9.9e-7, 1.01e-6, 1e-5, 1e-3}) {
        const complexd oracle = quadrature_chi_hat(omega, xi, 1e-12);
        CHECK(std::abs(f.chi_hat(xi) - oracle) < 1e-10);
        CHECK(std::abs(f.chi_hat(-xi) - std::conj(f.chi_hat(xi))) < 1e-15);
    }
}

TEST_CASE("exp_sum ties to chi_hat by the exact factor") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const FloatIntervals omega = random_union(rng, 4);
        const FourierEvaluator f(omega);
        std::uniform_real_distribution<double> xis(0.01, 5.0);
        const double xi = xis(rng);
        const complexd lhs = f.exp_sum(xi);
        const complexd rhs = complexd(0.0, 2.0 * M_PI * xi) * f.chi_hat(xi);
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("conjugate symmetry of the transform") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> xis(-20.0, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
        const FloatIntervals omega = random_union(rng, 4);
        const FourierEvaluator f(omega);
        const double xi = xis(rng);
        CHECK(std::abs(f.chi_hat(-xi) - std::conj(f.chi_hat(xi))) < 1e-14);
        CHECK(std::abs(f.exp_sum(-xi) - std::conj(f.exp_sum(xi))) < 1e-14);
    }
}

TEST_CASE("decay and derivative bounds hold") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> xis(-40.0, 40.0);
    for (int trial = 0; trial < 25; ++trial) {
        const FloatIntervals omega = random_union(rng, 4);
        const FourierEvaluator f(omega);
        for (int k = 0; k < 10; ++k) {
            const double xi = xis(rng);
            if (std::abs(xi) > 1e-3)
                CHECK(std::abs(f.chi_hat(xi)) <= f.decay_coefficient() / std::abs(xi) + 1e-12);
            CHECK(std::abs(f.exp_sum(xi)) <= 2.0 * f.interval_count() + 1e-12);
            // Finite-difference check that exp_sum_deriv is the derivative.
            const double h = 1e-6;
            const complexd fd = (f.exp_sum(xi + h) - f.exp_sum(xi - h)) / (2.0 * h);
            CHECK(std::abs(fd - f.exp_sum_deriv(xi)) <
                  1e-4 * (1.0 + f.exp_sum_deriv_bound()));
            CHECK(std::abs(f.exp_sum_deriv(xi)) <= f.exp_sum_deriv_bound() + 1e-9);
        }
    }
}

TEST_CASE("tail bound dominates empirical separated tails") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> gaps(0.3, 2.0);
    std::uniform_real_distribution<double> jitter(0.0, 0.9);
    for (int trial = 0; trial < 10; ++trial) {
        const FloatIntervals omega = random_union(rng, 3);
        const FourierEvaluator f(omega);
        const double gap = gaps(rng);
        const double radius = 5.0 + trial;
        const TailBound bound = tail_sum_bound(f, gap, radius);
        // A gap-separated set beyond the radius, mirrored to both sides.
        double tail = 0.0;
        double y = radius + jitter(rng) * gap;
        while (y < radius + 400.0) {
            tail += std::norm(f.chi_hat(y)) + std::norm(f.chi_hat(-y));
            y += gap * (1.0 + jitter(rng));
        }
        CHECK(tail <= bound.value());
    }
}

TEST_CASE("quadrature oracle refuses an impossible budget") {
    const auto omega = normalize<double>({{0.0, 1.0}});
    CHECK_THROWS_AS(quadrature_chi_hat(omega, 1e9, 1e-15), std::runtime_error);
}

}  // TEST_SUITE
