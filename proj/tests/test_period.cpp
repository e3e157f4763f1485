#include <doctest.h>

#include <vector>

#include "spectra/period.hpp"

using namespace spectra;

TEST_SUITE("period") {

TEST_CASE("integer lattice detects period one") {
    const auto w = unroll(make_periodic<double>({0.0}, 1.0), 0.0, 12.0);
    const auto cand = detect_period(w, 3.0, 1e-9);
    REQUIRE(cand.has_value());
    CHECK(cand->value == doctest::Approx(1.0));
    CHECK(cand->width == 3.0);
    CHECK(cand->anchor_high - cand->anchor_low == doctest::Approx(cand->value));
}

TEST_CASE("coset spectrum detects its true period, not a divisor") {
    const auto w = unroll(make_periodic<double>({0.0, 0.5}, 2.0), 0.0, 14.0);
    const auto cand = detect_period(w, 2.0, 1e-9);
    REQUIRE(cand.has_value());
    CHECK(cand->value == doctest::Approx(2.0));
}

TEST_CASE("aperiodic windows yield nothing") {
    const auto w = make_window<double>({0.0, 1.0, 2.5, 3.1, 5.9});
    CHECK(!detect_period(w, 1.5, 1e-9).has_value());
}

TEST_CASE("detection refuses a width the data cannot support") {
    const auto w = make_window<double>({0.0, 1.0, 2.0, 3.0});
    CHECK_THROWS_AS(detect_period(w, 2.0, 1e-9), std::invalid_argument);
}

TEST_CASE("verify_period accepts the true period and flags integrality") {
    const auto w = unroll(make_periodic<double>({0.0, 0.5}, 2.0), 0.0, 16.0);
    const VerificationReport rep = verify_period(w, 2.0, 1e-9);
    CHECK(rep.passed());
    CHECK(rep.condition == "window-periodic");
    CHECK(rep.details.at("window_periodic").get<bool>());
    CHECK(rep.details.at("integer").get<bool>());
    CHECK(rep.details.at("count_consistent").get<bool>());
    CHECK(rep.details.at("count_per_period").get<long long>() == 2);
}

TEST_CASE("verify_period reports non-integer periods") {
    const auto w = unroll(make_periodic<double>({0.0}, 1.5), 0.0, 15.0);
    const VerificationReport rep = verify_period(w, 1.5, 1e-9);
    CHECK(rep.passed());
    CHECK(!rep.details.at("integer").get<bool>());
}

TEST_CASE("verify_period fails with a directed witness") {
    // 0.5 breaks 2-periodicity: 0.5 + 2 = 2.5 is absent.
    const auto w = make_window<double>({0.0, 0.5, 2.0, 4.0, 6.0});
    const VerificationReport rep = verify_period(w, 2.0, 1e-9);
    CHECK(!rep.passed());
    CHECK(rep.witness.contains("expected_point"));
    CHECK(rep.witness.contains("direction"));
}

TEST_CASE("detected candidates verify") {
    const auto w = unroll(make_periodic<double>({0.0, 0.3, 1.1}, 3.0), 0.0, 21.0);
    const auto cand = detect_period(w, 3.0, 1e-9);
    REQUIRE(cand.has_value());
    CHECK(cand->value == doctest::Approx(3.0));
    CHECK(verify_period(w, cand->value, 1e-9).passed());
}

}  // TEST_SUITE
