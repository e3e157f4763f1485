#include "spectra/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spectra {

namespace {

struct Endpoint {
    bool exact = false;
    Rational r;
    double d = 0.0;
};

Endpoint parse_endpoint(const nlohmann::json& v) {
    if (v.is_array()) {
        if (v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw std::invalid_argument("endpoint array must be [numerator, denominator]");
        const Rational r(v[0].get<long long>(), v[1].get<long long>());
        return {true, r, r.to_double()};
    }
    if (v.is_string()) return {false, Rational(0), parse_double(v.get<std::string>())};
    if (v.is_number_integer()) {
        const auto n = v.get<long long>();
        return {true, Rational(n), static_cast<double>(n)};
    }
    if (v.is_number()) return {false, Rational(0), v.get<double>()};
    throw std::invalid_argument("endpoint must be [num,den], a decimal string, or a number");
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || (end && *end != '\0'))
        throw std::invalid_argument("not a decimal number: " + s);
    return v;
}

nlohmann::ordered_json endpoint_json(double x) { return format_double(x); }

nlohmann::ordered_json endpoint_json(const Rational& r) { return rational_json(r); }

IntervalInput parse_interval_union(const nlohmann::json& j) {
    const nlohmann::json* list = nullptr;
    if (j.is_array()) {
        list = &j;
    } else if (j.is_object() && j.contains("intervals")) {
        list = &j.at("intervals");
    } else {
        throw std::invalid_argument("interval union must be {\"intervals\": [...]} or an array");
    }
    if (!list->is_array() || list->empty())
        throw std::invalid_argument("interval list must be a nonempty array");

    bool all_exact = true;
    std::vector<std::pair<Rational, Rational>> exact_raw;
    std::vector<std::pair<double, double>> float_raw;
    for (const auto& item : *list) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("each interval must be a two-element array");
        const Endpoint a = parse_endpoint(item[0]);
        const Endpoint b = parse_endpoint(item[1]);
        all_exact = all_exact && a.exact && b.exact;
        exact_raw.emplace_back(a.r, b.r);
        float_raw.emplace_back(a.d, b.d);
    }
    IntervalInput out;
    if (all_exact) out.exact = normalize(std::move(exact_raw));
    out.numeric = out.exact ? to_float(*out.exact) : normalize(std::move(float_raw));
    return out;
}

SpectrumInput parse_spectrum(const nlohmann::json& j) {
    if (!j.is_object())
        throw std::invalid_argument("spectrum must be {\"points\": ...} or {\"base\", \"period\"}");
    SpectrumInput out;
    if (j.contains("points")) {
        const auto& pts = j.at("points");
        if (!pts.is_array()) throw std::invalid_argument("points must be an array");
        bool all_exact = true;
        std::vector<Rational> exact_pts;
        std::vector<double> float_pts;
        for (const auto& item : pts) {
            const Endpoint p = parse_endpoint(item);
            all_exact = all_exact && p.exact;
            exact_pts.push_back(p.r);
            float_pts.push_back(p.d);
        }
        if (all_exact) out.exact_window = make_window(std::move(exact_pts));
        out.numeric_window =
            out.exact_window ? to_float_window(*out.exact_window) : make_window(std::move(float_pts));
        return out;
    }
    if (j.contains("base") && j.contains("period")) {
        out.periodic = true;
        const auto& base = j.at("base");
        if (!base.is_array()) throw std::invalid_argument("base must be an array");
        bool all_exact = true;
        std::vector<Rational> exact_pts;
        std::vector<double> float_pts;
        for (const auto& item : base) {
            const Endpoint p = parse_endpoint(item);
            all_exact = all_exact && p.exact;
            exact_pts.push_back(p.r);
            float_pts.push_back(p.d);
        }
        const Endpoint period = parse_endpoint(j.at("period"));
        all_exact = all_exact && period.exact;
        if (all_exact) out.exact_periodic = make_periodic(std::move(exact_pts), period.r);
        out.numeric_periodic = out.exact_periodic
                                   ? to_float_periodic(*out.exact_periodic)
                                   : make_periodic(std::move(float_pts), period.d);
        return out;
    }
    throw std::invalid_argument("spectrum needs \"points\" or \"base\" + \"period\"");
}

namespace {

template <class Union>
nlohmann::ordered_json union_json_impl(const Union& u) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [l, r] : u.intervals())
        list.push_back(nlohmann::ordered_json::array({endpoint_json(l), endpoint_json(r)}));
    return nlohmann::ordered_json{{"intervals", std::move(list)}};
}

template <class Window>
nlohmann::ordered_json window_json_impl(const Window& w) {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : w.points) pts.push_back(endpoint_json(p));
    return nlohmann::ordered_json{{"points", std::move(pts)}};
}

template <class Periodic>
nlohmann::ordered_json periodic_json_impl(const Periodic& p) {
    nlohmann::ordered_json base = nlohmann::ordered_json::array();
    for (const auto& b : p.base) base.push_back(endpoint_json(b));
    return nlohmann::ordered_json{{"base", std::move(base)}, {"period", endpoint_json(p.period)}};
}

}  // namespace

nlohmann::ordered_json interval_union_json(const RationalIntervals& u) {
    return union_json_impl(u);
}
nlohmann::ordered_json interval_union_json(const FloatIntervals& u) { return union_json_impl(u); }
nlohmann::ordered_json spectrum_json(const RationalWindow& w) { return window_json_impl(w); }
nlohmann::ordered_json spectrum_json(const FloatWindow& w) { return window_json_impl(w); }
nlohmann::ordered_json spectrum_json(const RationalPeriodic& p) { return periodic_json_impl(p); }
nlohmann::ordered_json spectrum_json(const FloatPeriodic& p) { return periodic_json_impl(p); }

nlohmann::ordered_json coset_json(const CosetDescription& cosets) {
    nlohmann::ordered_json offsets = nlohmann::ordered_json::array();
    for (const auto& r : cosets.offsets) offsets.push_back(rational_json(r));
    nlohmann::ordered_json out{{"offsets", std::move(offsets)}, {"modulus", cosets.modulus},
                               {"complete", cosets.complete}};
    if (!cosets.numeric_offsets.empty()) {
        nlohmann::ordered_json numeric = nlohmann::ordered_json::array();
        for (const double x : cosets.numeric_offsets) numeric.push_back(format_double(x));
        out["numeric_offsets"] = std::move(numeric);
    }
    return out;
}

nlohmann::ordered_json zero_set_json(const ZeroSet& zs) {
    nlohmann::ordered_json zeros = nlohmann::ordered_json::array();
    for (const auto& z : zs.zeros)
        zeros.push_back(nlohmann::ordered_json{{"location", format_double(z.location)},
                                               {"radius", format_double(z.radius)},
                                               {"certified", z.certified}});
    nlohmann::ordered_json out{{"window_radius", format_double(zs.window_radius)},
                               {"all_certified", zs.all_certified},
                               {"separation_floor", format_double(zs.separation_floor)},
                               {"zeros", std::move(zeros)}};
    if (zs.exact_cosets) out["cosets"] = coset_json(*zs.exact_cosets);
    return out;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_zeros_csv(std::ostream& os, const ZeroSet& zs) {
    os << "zero,certified_radius\n";
    for (const auto& z : zs.zeros)
        os << format_double(z.location) << ',' << format_double(z.radius) << '\n';
}

void write_samples_csv(std::ostream& os, const std::vector<TilingSample>& samples) {
    os << "x,F_lo,F_hi\n";
    for (const auto& s : samples)
        os << format_double(s.x) << ',' << format_double(s.lo) << ',' << format_double(s.hi)
           << '\n';
}

std::string svg_function_band(const std::vector<TilingSample>& samples,
                              const std::string& title) {
    if (samples.empty()) throw std::invalid_argument("svg plot needs at least one sample");
    const double width = 800, height = 400;
    const double ml = 70, mr = 20, mt = 40, mb = 50;

    double x_min = samples.front().x, x_max = samples.front().x;
    double y_min = samples.front().lo, y_max = samples.front().hi;
    for (const auto& s : samples) {
        x_min = std::min(x_min, s.x);
        x_max = std::max(x_max, s.x);
        y_min = std::min(y_min, s.lo);
        y_max = std::max(y_max, s.hi);
    }
    y_min = std::min(y_min, 1.0);
    y_max = std::max(y_max, 1.0);
    const double x_span = x_max > x_min ? x_max - x_min : 1.0;
    const double y_pad = 0.05 * (y_max > y_min ? y_max - y_min : 1.0);
    y_min -= y_pad;
    y_max += y_pad;

    auto px = [&](double x) { return ml + (x - x_min) / x_span * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb); };

    auto polyline = [&](auto value_of) {
        std::ostringstream pts;
        for (const auto& s : samples) pts << px(s.x) << ',' << py(value_of(s)) << ' ';
        return pts.str();
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "  <text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
           "font-family=\"sans-serif\">"
        << title << "</text>\n";
    svg << "  <line x1=\"" << ml << "\" y1=\"" << py(y_min) << "\" x2=\"" << ml << "\" y2=\""
        << py(y_max) << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    svg << "  <line x1=\"" << ml << "\" y1=\"" << py(1.0) << "\" x2=\"" << width - mr
        << "\" y2=\"" << py(1.0) << "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
    svg << "  <text x=\"" << ml - 8 << "\" y=\"" << py(1.0) + 4
        << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">1</text>\n";
    svg << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\""
        << polyline([](const TilingSample& s) { return s.lo; }) << "\"/>\n";
    svg << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\""
        << polyline([](const TilingSample& s) { return s.hi; }) << "\"/>\n";
    svg << "  <text x=\"" << ml << "\" y=\"" << height - mb + 20
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << format_double(x_min)
        << "</text>\n";
    svg << "  <text x=\"" << width - mr << "\" y=\"" << height - mb + 20
        << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
        << format_double(x_max) << "</text>\n";
    svg << "  <text x=\"" << ml - 8 << "\" y=\"" << py(y_min) + 4
        << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
        << format_double(y_min) << "</text>\n";
    svg << "  <text x=\"" << ml - 8 << "\" y=\"" << py(y_max) + 4
        << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
        << format_double(y_max) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace spectra
