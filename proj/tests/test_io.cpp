#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/io.hpp"

using namespace spectra;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("doubles survive the decimal-string round trip bit-for-bit") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> vals(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double x = vals(rng);
        CHECK(parse_double(format_double(x)) == x);
    }
    CHECK(parse_double(format_double(0.1)) == 0.1);
    CHECK(parse_double(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK_THROWS_AS(parse_double("not-a-number"), std::invalid_argument);
    CHECK_THROWS_AS(parse_double("1.5extra"), std::invalid_argument);
}

TEST_CASE("exact interval unions round-trip through JSON") {
    const auto omega = normalize<Rational>(
        {{Rational(0), Rational(1, 2)}, {Rational(1), Rational(3, 2)}});
    const json j = interval_union_json(omega);
    const IntervalInput back = parse_interval_union(j);
    REQUIRE(back.exact.has_value());
    CHECK(back.exact->intervals() == omega.intervals());
    REQUIRE(back.numeric.has_value());
    CHECK(measure(*back.numeric) == doctest::Approx(1.0));
}

TEST_CASE("float interval unions round-trip exactly") {
    const auto omega = normalize<double>({{0.1, 0.30000000000000004}, {1.5, 2.25}});
    const json j = interval_union_json(omega);
    const IntervalInput back = parse_interval_union(j);
    CHECK(!back.exact.has_value());
    REQUIRE(back.numeric.has_value());
    CHECK(back.numeric->intervals() == omega.intervals());
}

TEST_CASE("bare arrays parse as interval lists") {
    const json j = json::parse(R"([[ [0,1], [1,2] ]])");
    const IntervalInput in = parse_interval_union(j);
    REQUIRE(in.exact.has_value());
    CHECK(measure(*in.exact) == Rational(1, 2));
}

TEST_CASE("integer endpoints parse exactly") {
    const json j = json::parse(R"({"intervals": [[0, 1]]})");
    const IntervalInput in = parse_interval_union(j);
    REQUIRE(in.exact.has_value());
    CHECK(measure(*in.exact) == Rational(1));
}

TEST_CASE("spectra round-trip in both representations") {
    const auto p = make_periodic<Rational>({Rational(0), Rational(1, 2)}, Rational(2));
    const SpectrumInput back = parse_spectrum(spectrum_json(p));
    CHECK(back.periodic);
    REQUIRE(back.exact_periodic.has_value());
    CHECK(back.exact_periodic->base == p.base);
    CHECK(back.exact_periodic->period == p.period);

    const auto w = make_window<double>({-1.25, 0.0, 2.5});
    const SpectrumInput wback = parse_spectrum(spectrum_json(w));
    CHECK(!wback.periodic);
    CHECK(!wback.exact());
    REQUIRE(wback.numeric_window.has_value());
    CHECK(wback.numeric_window->points == w.points);
}

TEST_CASE("malformed inputs are refused with invalid_argument") {
    CHECK_THROWS_AS(parse_interval_union(json::parse(R"({"intervals": [[1, 0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_interval_union(json::parse(R"({"intervals": "zap"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_spectrum(json::parse(R"({"base": [0]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_spectrum(json::parse(R"({"points": [[1,0]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("serialized reports are byte-stable across reruns") {
    const auto omega = normalize<double>({{-0.5, 0.5}});
    const auto p = make_periodic<double>({0.0}, 1.0);
    const auto rep1 = check_tiling_condition(omega, p, 0.25, 1e-4);
    const auto rep2 = check_tiling_condition(omega, p, 0.25, 1e-4);
    CHECK(rep1.to_json().dump(2) == rep2.to_json().dump(2));
}

TEST_CASE("zeros CSV carries a header and one row per zero") {
    const auto omega = normalize<double>({{-0.5, 0.5}});
    const ZeroSet zs = find_zeros(omega, 3.5, 1e-10);
    std::ostringstream os;
    write_zeros_csv(os, zs);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "zero,certified_radius");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("sample CSV and SVG render the certified band") {
    const std::vector<TilingSample> samples = {{0.0, 0.9, 1.1}, {0.5, 0.95, 1.05}};
    std::ostringstream os;
    write_samples_csv(os, samples);
    CHECK(os.str().rfind("x,F_lo,F_hi\n", 0) == 0);

    const std::string svg = svg_function_band(samples, "band");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("band") != std::string::npos);
    CHECK_THROWS_AS(svg_function_band({}, "empty"), std::invalid_argument);
}

TEST_CASE("zero set JSON exposes certification and cosets") {
    const auto omega = normalize<Rational>({{Rational(-1, 2), Rational(1, 2)}});
    const ZeroSet zs = find_zeros(omega, 2.5, 1e-10);
    const json j = zero_set_json(zs);
    CHECK(parse_double(j.at("window_radius").get<std::string>()) == 2.5);
    CHECK(j.at("zeros").size() == 4);
    CHECK(j.contains("cosets"));
    CHECK(j.at("cosets").at("modulus").get<long long>() == 2);
}

}  // TEST_SUITE
