#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

/// Finite union of disjoint open intervals on the real line.
///
/// The scalar type selects the representation: IntervalUnion<Rational> is
/// the exact path (all arithmetic exact, common denominator available),
/// IntervalUnion<double> the floating path. The two never mix inside one
/// union. Instances are canonical by construction: intervals sorted by
/// left endpoint, pairwise disjoint, each with left < right. Overlapping
/// or abutting raw intervals are merged by normalize(); the merge changes
/// the set only by a null set, which none of the downstream Fourier or
/// covering checks can see.
template <class Scalar>
class IntervalUnion {
public:
    using Interval = std::pair<Scalar, Scalar>;

    const std::vector<Interval>& intervals() const { return intervals_; }
    int count() const { return static_cast<int>(intervals_.size()); }

    const Scalar& min_endpoint() const { return intervals_.front().first; }
    const Scalar& max_endpoint() const { return intervals_.back().second; }

    template <class S>
    friend IntervalUnion<S> normalize(std::vector<std::pair<S, S>> raw);

private:
    explicit IntervalUnion(std::vector<Interval> canonical)
        : intervals_(std::move(canonical)) {}

    std::vector<Interval> intervals_;
};

using RationalIntervals = IntervalUnion<Rational>;
using FloatIntervals = IntervalUnion<double>;

namespace detail {
inline void check_finite(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("interval endpoint is not finite");
}
inline void check_finite(const Rational&) {}
}  // namespace detail

/// Canonicalize a raw list of open intervals: validate, sort, merge
/// overlapping and abutting pieces. Throws on empty input or a pair with
/// left >= right.
template <class S>
IntervalUnion<S> normalize(std::vector<std::pair<S, S>> raw) {
    if (raw.empty()) throw std::invalid_argument("normalize: empty interval list");
    for (const auto& [l, r] : raw) {
        detail::check_finite(l);
        detail::check_finite(r);
        if (!(l < r)) throw std::invalid_argument("normalize: interval with left >= right");
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<S, S>> merged;
    merged.push_back(raw.front());
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i].first <= merged.back().second) {
            if (merged.back().second < raw[i].second) merged.back().second = raw[i].second;
        } else {
            merged.push_back(raw[i]);
        }
    }
    return IntervalUnion<S>(std::move(merged));
}

/// Total length of the union. Exact on the rational path.
template <class S>
S measure(const IntervalUnion<S>& u) {
    S total{0};
    for (const auto& [l, r] : u.intervals()) total += r - l;
    return total;
}

/// Indicator of the open set: 1 iff x lies strictly inside some interval.
template <class S>
int indicator(const IntervalUnion<S>& u, const S& x) {
    const auto& iv = u.intervals();
    auto it = std::upper_bound(iv.begin(), iv.end(), x,
                               [](const S& v, const auto& p) { return v < p.first; });
    if (it == iv.begin()) return 0;
    --it;
    return (it->first < x && x < it->second) ? 1 : 0;
}

/// Least common denominator of all endpoints (exact path only).
inline long long common_denominator(const RationalIntervals& u) {
    long long n = 1;
    for (const auto& [l, r] : u.intervals()) {
        n = checked_lcm(n, l.den());
        n = checked_lcm(n, r.den());
    }
    return n;
}

inline FloatIntervals to_float(const RationalIntervals& u) {
    std::vector<std::pair<double, double>> raw;
    raw.reserve(u.intervals().size());
    for (const auto& [l, r] : u.intervals()) raw.emplace_back(l.to_double(), r.to_double());
    return normalize(std::move(raw));
}

inline const FloatIntervals& to_float(const FloatIntervals& u) { return u; }

}  // namespace spectra
