#include <doctest.h>

#include <cmath>
#include <vector>

#include "spectra/verify.hpp"

using namespace spectra;

namespace {

const FloatIntervals& unit_f() {
    static const FloatIntervals u = normalize<double>({{-0.5, 0.5}});
    return u;
}

const RationalIntervals& unit_q() {
    static const RationalIntervals u =
        normalize<Rational>({{Rational(-1, 2), Rational(1, 2)}});
    return u;
}

const RationalIntervals& two_q() {
    static const RationalIntervals t = normalize<Rational>(
        {{Rational(0), Rational(1, 2)}, {Rational(1), Rational(3, 2)}});
    return t;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("window packing value equals the brute-force sum") {
    const auto w = make_window<double>({-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0});
    const FourierEvaluator f(unit_f());
    const PackingValue pv = packing_value(unit_f(), w, 0.25, 2.5);
    double direct = 0.0;
    for (const double lam : w.points)
        if (std::abs(0.25 - lam) <= 2.5) direct += std::norm(f.chi_hat(0.25 - lam));
    CHECK(pv.lo == doctest::Approx(direct).epsilon(1e-12));
    CHECK(pv.hi == doctest::Approx(pv.lo + pv.tail));
    CHECK(pv.tail > 0.0);
    CHECK(pv.terms == 5);
    // Window too small for the requested radius is refused.
    CHECK_THROWS_AS(packing_value(unit_f(), w, 0.25, 10.0), std::domain_error);
}

TEST_CASE("periodic and window packing values agree on shared radius") {
    const auto p = make_periodic<double>({0.0}, 1.0);
    const auto w = unroll(p, -40.0, 40.0);
    const PackingValue a = packing_value(unit_f(), p, 0.3, 30.0);
    const PackingValue b = packing_value(unit_f(), w, 0.3, 30.0);
    CHECK(a.lo == doctest::Approx(b.lo).epsilon(1e-12));
    CHECK(a.terms == b.terms);
}

TEST_CASE("packing brackets tighten as the radius grows") {
    const auto p = make_periodic<double>({0.0}, 1.0);
    double prev_lo = -1.0;
    double prev_tail = 1e300;
    for (const double r : {10.0, 100.0, 1000.0}) {
        const PackingValue pv = packing_value(unit_f(), p, 0.5, r);
        CHECK(pv.lo >= prev_lo);   // lo only gains nonnegative terms
        CHECK(pv.tail < prev_tail);  // tail budget shrinks
        CHECK(pv.lo <= pv.hi);
        prev_lo = pv.lo;
        prev_tail = pv.tail;
    }
    // F(1/2) for the unit interval against Z is exactly 1 (tiling); the
    // bracket must contain it.
    const PackingValue tight = packing_value(unit_f(), p, 0.5, 2000.0);
    CHECK(tight.lo <= 1.0);
    CHECK(1.0 <= tight.hi);
    CHECK(tight.hi - tight.lo < 1e-3);
}

TEST_CASE("minimal cyclic gap includes the wrap-around") {
    CHECK(min_cyclic_gap(make_periodic<double>({0.0, 0.5}, 2.0)) == doctest::Approx(0.5));
    CHECK(min_cyclic_gap(make_periodic<double>({0.0, 1.7}, 2.0)) == doctest::Approx(0.3));
    CHECK(min_cyclic_gap(make_periodic<double>({0.0}, 1.0)) == doctest::Approx(1.0));
    CHECK(min_cyclic_gap(make_periodic<Rational>({Rational(0), Rational(7, 4)},
                                                 Rational(2))) == Rational(1, 4));
}

TEST_CASE("lipschitz constant dominates observed difference quotients") {
    const FourierEvaluator f(unit_f());
    const double L = tiling_sum_lipschitz(f, 1.0);
    CHECK(L > 0.0);
    const auto p = make_periodic<double>({0.0}, 1.0);
    const double r = 50.0;
    auto F = [&](double x) { return packing_value(unit_f(), p, x, r).lo; };
    for (const double x : {0.1, 0.3, 0.47}) {
        const double h = 1e-5;
        const double quotient = std::abs(F(x + h) - F(x)) / h;
        CHECK(quotient <= L);
    }
}

TEST_CASE("zeros condition passes integers against the unit interval") {
    const auto w = make_window<double>({-3.0, -2.0, -1.0, 0.0, 1.0, 2.0, 3.0});
    const VerificationReport rep = check_zeros_condition(unit_f(), w, 1e-9);
    CHECK(rep.passed());
    CHECK(rep.condition == "zeros-condition");
    CHECK(rep.details.at("pairs_checked").get<long long>() == 21);
}

TEST_CASE("zeros condition fails with the violating pair as witness") {
    const auto w = make_window<double>({0.0, 0.3, 1.0});
    const VerificationReport rep = check_zeros_condition(unit_f(), w, 1e-9);
    CHECK(!rep.passed());
    CHECK(rep.witness.at("difference").get<double>() == doctest::Approx(0.3));
    CHECK(rep.witness.at("chi_hat_abs").get<double>() ==
          doctest::Approx(std::sin(0.3 * M_PI) / (0.3 * M_PI)).epsilon(1e-10));
}

TEST_CASE("exact zeros condition on the two-interval pair") {
    const auto p = make_periodic<Rational>({Rational(0), Rational(1, 2)}, Rational(2));
    const auto w = unroll(p, Rational(-6), Rational(6));
    const VerificationReport pass = check_zeros_condition(two_q(), w, 1e-9);
    CHECK(pass.passed());
    CHECK(pass.parameters.at("path") == "exact");

    const auto bad = make_window<Rational>({Rational(0), Rational(1)});
    const VerificationReport fail = check_zeros_condition(two_q(), bad, 1e-9);
    CHECK(!fail.passed());
    CHECK(fail.witness.at("difference") == nlohmann::ordered_json::array({1, 1}));
}

TEST_CASE("tiling condition holds for the unit interval against integers") {
    const auto p = make_periodic<double>({0.0}, 1.0);
    const VerificationReport rep =
        check_tiling_condition(unit_f(), p, 0.25, 1e-4);
    CHECK(rep.passed());
    CHECK(rep.details.at("max_certified_deviation").get<double>() <= 1e-4);
    CHECK(rep.parameters.at("tail").get<double>() <= 5e-5);
}

TEST_CASE("tiling condition rejects a spectrum that is too sparse") {
    const auto p = make_periodic<double>({0.0}, 2.0);
    std::vector<TilingSample> samples;
    const VerificationReport rep =
        check_tiling_condition(unit_f(), p, 0.25, 1e-4, &samples);
    CHECK(!rep.passed());
    // The certified bracket at the witness must exclude 1 entirely.
    CHECK(rep.witness.at("F_hi").get<double>() < 1.0 - 1e-4);
    CHECK(!samples.empty());
    for (const TilingSample& s : samples) CHECK(s.lo <= s.hi);
}

TEST_CASE("exact translational tiling of the two-interval pair") {
    const auto s = make_periodic<Rational>({Rational(0), Rational(1, 2)}, Rational(2));
    const VerificationReport rep = check_translational_tiling(two_q(), s);
    CHECK(rep.passed());
    CHECK(rep.details.at("cover_count").get<int>() == 1);
}

TEST_CASE("exact translational tiling detects gaps and overlaps") {
    // Gap: unit interval translated by 2Z leaves half the line uncovered.
    const auto sparse = make_periodic<Rational>({Rational(0)}, Rational(2));
    const VerificationReport gap = check_translational_tiling(unit_q(), sparse);
    CHECK(!gap.passed());
    CHECK(gap.witness.at("cover_count").get<int>() == 0);

    // Overlap: two translates per unit cell double-cover.
    const auto dense = make_periodic<Rational>({Rational(0), Rational(1, 2)}, Rational(1));
    const VerificationReport over = check_translational_tiling(unit_q(), dense);
    CHECK(!over.passed());
    CHECK(over.witness.at("cover_count").get<int>() == 2);
}

TEST_CASE("float translational tiling agrees with the exact verdicts") {
    const auto p = make_periodic<double>({0.0}, 1.0);
    CHECK(check_translational_tiling(unit_f(), p, 0.05).passed());
    const auto sparse = make_periodic<double>({0.0}, 2.0);
    CHECK(!check_translational_tiling(unit_f(), sparse, 0.05).passed());
}

}  // TEST_SUITE
