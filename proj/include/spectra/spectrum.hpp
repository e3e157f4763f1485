#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

/// Finite sorted window of a candidate spectrum. Points are strictly
/// increasing; the window may be empty (an unrolled periodic spectrum can
/// miss a short range entirely).
template <class Scalar>
struct SpectrumWindow {
    std::vector<Scalar> points;
};

/// Periodic spectrum base + period*Z with base inside [0, period).
template <class Scalar>
struct PeriodicSpectrum {
    std::vector<Scalar> base;
    Scalar period;
};

/// Offsets of the spectrum points seen through the closed window
/// [anchor, anchor + width], relative to the anchor.
template <class Scalar>
struct WindowFingerprint {
    Scalar anchor;
    Scalar width;
    std::vector<Scalar> offsets;
};

namespace detail {
inline void check_point(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("spectrum point must be finite");
}
inline void check_point(const Rational&) {}
}  // namespace detail

template <class Scalar>
SpectrumWindow<Scalar> make_window(std::vector<Scalar> pts) {
    for (const auto& p : pts) detail::check_point(p);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1] < pts[i]))
            throw std::invalid_argument("spectrum points must be strictly increasing");
    return SpectrumWindow<Scalar>{std::move(pts)};
}

template <class Scalar>
PeriodicSpectrum<Scalar> make_periodic(std::vector<Scalar> base, Scalar period) {
    if (!(Scalar(0) < period)) throw std::invalid_argument("period must be positive");
    detail::check_point(period);
    SpectrumWindow<Scalar> w = make_window(std::move(base));
    for (const auto& b : w.points)
        if (b < Scalar(0) || !(b < period))
            throw std::invalid_argument("periodic base points must lie in [0, period)");
    return PeriodicSpectrum<Scalar>{std::move(w.points), period};
}

/// All points of base + period*Z inside the closed range [lo, hi].
template <class Scalar>
SpectrumWindow<Scalar> unroll(const PeriodicSpectrum<Scalar>& p, const Scalar& lo,
                              const Scalar& hi) {
    if (!(lo < hi)) throw std::invalid_argument("unroll: lo must be below hi");
    std::vector<Scalar> pts;
    if (p.base.empty()) return SpectrumWindow<Scalar>{std::move(pts)};
    // k range chosen so base[j] + k*period covers [lo, hi] with one block of slack
    const long long k_lo = static_cast<long long>(
                               std::floor(to_double(lo) / to_double(p.period))) -
                           2;
    const long long k_hi = static_cast<long long>(
                               std::ceil(to_double(hi) / to_double(p.period))) +
                           2;
    for (long long k = k_lo; k <= k_hi; ++k) {
        const Scalar shift = Scalar(k) * p.period;
        for (const auto& b : p.base) {
            const Scalar x = b + shift;
            if (!(x < lo) && !(hi < x)) pts.push_back(x);
        }
    }
    std::sort(pts.begin(), pts.end());
    return SpectrumWindow<Scalar>{std::move(pts)};
}

/// Consecutive differences of the window; needs at least two points.
template <class Scalar>
std::vector<Scalar> gaps(const SpectrumWindow<Scalar>& w) {
    if (w.points.size() < 2)
        throw std::invalid_argument("gaps: window must contain at least two points");
    std::vector<Scalar> out;
    out.reserve(w.points.size() - 1);
    for (std::size_t i = 1; i < w.points.size(); ++i)
        out.push_back(w.points[i] - w.points[i - 1]);
    return out;
}

/// Offsets of the window points in [anchor, anchor + width], snapped to the
/// boundary when within tol of it (float windows of truly periodic sets may
/// land on a boundary up to rounding; pass tol = 0 on the exact path).
/// Throws std::invalid_argument when anchor is not a point of the window and
/// std::domain_error when [anchor, anchor + width] sticks out of the data,
/// since "no data" must not read as "no points".
template <class Scalar>
WindowFingerprint<Scalar> fingerprint(const SpectrumWindow<Scalar>& w, const Scalar& anchor,
                                      const Scalar& width, const Scalar& tol) {
    if (!(Scalar(0) < width)) throw std::invalid_argument("fingerprint: width must be positive");
    if (tol < Scalar(0)) throw std::invalid_argument("fingerprint: tol must be nonnegative");
    bool anchored = false;
    for (const auto& p : w.points)
        if (abs_value(p - anchor) <= tol) { anchored = true; break; }
    if (!anchored) throw std::invalid_argument("fingerprint: anchor is not a spectrum point");
    if (anchor < w.points.front() - tol || w.points.back() + tol < anchor + width)
        throw std::domain_error("fingerprint: window exceeds available data");

    WindowFingerprint<Scalar> out{anchor, width, {}};
    for (const auto& p : w.points) {
        if (p < anchor - tol || anchor + width + tol < p) continue;
        Scalar off = p - anchor;
        if (abs_value(off) <= tol) off = Scalar(0);
        if (abs_value(off - width) <= tol) off = width;
        out.offsets.push_back(off);
    }
    return out;
}

template <class Scalar>
bool fingerprints_equal(const WindowFingerprint<Scalar>& a, const WindowFingerprint<Scalar>& b,
                        const Scalar& tol) {
    if (abs_value(a.width - b.width) > tol) return false;
    if (a.offsets.size() != b.offsets.size()) return false;
    for (std::size_t i = 0; i < a.offsets.size(); ++i)
        if (abs_value(a.offsets[i] - b.offsets[i]) > tol) return false;
    return true;
}

/// Number of window points in the half-open interval [x, x + t). The window
/// must cover the whole interval, else the count would silently undercount.
template <class Scalar>
long long density_count(const SpectrumWindow<Scalar>& w, const Scalar& x, const Scalar& t) {
    if (!(Scalar(0) < t)) throw std::invalid_argument("density_count: length must be positive");
    if (w.points.empty() || x < w.points.front() || w.points.back() < x + t)
        throw std::domain_error("density_count: interval not covered by window");
    auto lo = std::lower_bound(w.points.begin(), w.points.end(), x);
    auto hi = std::lower_bound(w.points.begin(), w.points.end(), x + t);
    return static_cast<long long>(hi - lo);
}

using FloatWindow = SpectrumWindow<double>;
using RationalWindow = SpectrumWindow<Rational>;
using FloatPeriodic = PeriodicSpectrum<double>;
using RationalPeriodic = PeriodicSpectrum<Rational>;

inline FloatWindow to_float_window(const RationalWindow& w) {
    std::vector<double> pts;
    pts.reserve(w.points.size());
    for (const auto& p : w.points) pts.push_back(p.to_double());
    return FloatWindow{std::move(pts)};
}

inline FloatPeriodic to_float_periodic(const RationalPeriodic& p) {
    std::vector<double> base;
    base.reserve(p.base.size());
    for (const auto& b : p.base) base.push_back(b.to_double());
    return FloatPeriodic{std::move(base), p.period.to_double()};
}

}  // namespace spectra
