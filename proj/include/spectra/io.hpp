#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/intervals.hpp"
#include "spectra/report.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/verify.hpp"
#include "spectra/zero_set.hpp"

namespace spectra {

/// Doubles travel through JSON as shortest round-trip decimal strings and
/// rationals as [num, den] integer pairs, so both paths survive
/// serialization bit-for-bit.
std::string format_double(double x);
double parse_double(const std::string& s);

nlohmann::ordered_json endpoint_json(double x);
nlohmann::ordered_json endpoint_json(const Rational& r);

/// Parsed interval union. exact is engaged iff every endpoint in the file
/// was rational; numeric is always engaged.
struct IntervalInput {
    std::optional<RationalIntervals> exact;
    std::optional<FloatIntervals> numeric;
};

/// Parsed spectrum: either a finite window ({"points": [...]}) or a
/// periodic set ({"base": [...], "period": p}).
struct SpectrumInput {
    bool periodic = false;
    std::optional<RationalWindow> exact_window;
    std::optional<FloatWindow> numeric_window;
    std::optional<RationalPeriodic> exact_periodic;
    std::optional<FloatPeriodic> numeric_periodic;

    bool exact() const { return exact_window.has_value() || exact_periodic.has_value(); }
};

// {"intervals": [[a, b], ...]}, each endpoint [num, den] or decimal string.
IntervalInput parse_interval_union(const nlohmann::json& j);
SpectrumInput parse_spectrum(const nlohmann::json& j);

nlohmann::ordered_json interval_union_json(const RationalIntervals& u);
nlohmann::ordered_json interval_union_json(const FloatIntervals& u);
nlohmann::ordered_json spectrum_json(const RationalWindow& w);
nlohmann::ordered_json spectrum_json(const FloatWindow& w);
nlohmann::ordered_json spectrum_json(const RationalPeriodic& p);
nlohmann::ordered_json spectrum_json(const FloatPeriodic& p);
nlohmann::ordered_json zero_set_json(const ZeroSet& zs);
nlohmann::ordered_json coset_json(const CosetDescription& cosets);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

void write_zeros_csv(std::ostream& os, const ZeroSet& zs);

void write_samples_csv(std::ostream& os, const std::vector<TilingSample>& samples);

/// Static line chart of the certified F band over one period, with a
/// reference line at height 1.
std::string svg_function_band(const std::vector<TilingSample>& samples, const std::string& title);

}  // namespace spectra
