#pragma once

#include <optional>
#include <vector>

#include "spectra/fourier.hpp"
#include "spectra/intervals.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// One numerically located zero of chi_hat. When certified is true, the
/// transform provably has modulus <= the certification residual somewhere in
/// [location - radius, location + radius], the crossing there is transversal,
/// and no zero was lost between this interval and its neighbours. Tangential
/// near-zeros (derivative too small to rotate into a sign change) stay
/// uncertified and must be treated as possibly present by callers.
struct CertifiedZero {
    double location = 0.0;
    double radius = 0.0;
    bool certified = false;
};

/// Exact description of a periodic zero set as a union of arithmetic
/// progressions r + modulus*Z. Offsets lie in [0, modulus). When the
/// endpoint polynomial has unit-circle roots that are not roots of unity,
/// their angular positions land in numeric_offsets and complete is false:
/// the exact offsets then underdescribe the zero set.
struct CosetDescription {
    long long modulus = 1;
    std::vector<Rational> offsets;
    std::vector<double> numeric_offsets;
    bool complete = true;
};

/// The zero set of chi_hat on (-window_radius, window_radius), origin
/// excluded. On the exact-rational path exact_cosets additionally describes
/// the full periodic zero set on all of R.
struct ZeroSet {
    double window_radius = 0.0;
    std::vector<CertifiedZero> zeros;  // sorted by location, symmetric about 0
    bool all_certified = true;
    double separation_floor = 0.0;  // certified minimal distance between listed zeros
    std::optional<FloatIntervals> omega;  // the scanned set, kept for witness evaluation
    std::optional<CosetDescription> exact_cosets;

    double min_positive_zero() const;
};

/// Certified scan for the zeros of chi_hat in (-radius, radius).
///
/// Completeness comes from a Lipschitz grid: an interval of width w whose
/// midpoint value exceeds |g'|-bound * w/2 cannot contain a zero of the
/// endpoint exponential sum, and a neighbourhood of the origin is excluded
/// via |chi_hat| >= measure - 2 pi measure max|endpoint| |xi|. Suspect
/// intervals are split to width ~tol, polished by a Newton step on the
/// exponential sum, and certified by a derivative-phase rotation: after
/// rotating by the unit conjugate of g' the real part must change sign
/// across the interval by more than the residual bound on the imaginary
/// part. Throws std::runtime_error when the subdivision budget is exhausted.
ZeroSet find_zeros(const FloatIntervals& omega, double radius, double tol);

/// Same scan, plus the exact coset description of the full zero set.
ZeroSet find_zeros(const RationalIntervals& omega, double radius, double tol);

/// Exact zero cosets of chi_hat for rational endpoints: substituting
/// w = e^{-2 pi i xi / N} turns the exponential sum into an integer
/// polynomial whose unit-circle roots cut out the zero set; roots of unity
/// of order m map to offsets -N k / m mod N. The origin is NOT removed here
/// (cosets describe the zeros of the exponential sum, which always include
/// 0); membership tests exclude it.
CosetDescription rational_zero_cosets(const RationalIntervals& omega);

/// Exact membership of xi in the coset description (zero of the exponential
/// sum, origin not excluded).
bool coset_contains(const CosetDescription& cosets, const Rational& xi);

/// All chi_hat zeros of an exact coset description in [-radius, radius],
/// sorted, origin excluded. Requires a complete description.
std::vector<Rational> enumerate_coset_zeros(const CosetDescription& cosets, const Rational& radius);

/// Outcome of an is_zero query, carrying either the matched zero or the
/// witness value |chi_hat(xi)| that refutes membership.
struct ZeroQuery {
    bool is_zero = false;
    std::optional<double> matched_zero;
    std::optional<Rational> matched_offset;
    std::optional<double> witness_value;
};

/// Test xi against the zero set: match a certified zero within tol, or on
/// the exact path membership in a coset (any xi, not just the window).
/// Non-members get |chi_hat(xi)| as witness. Throws std::domain_error for a
/// xi outside the numeric window when no exact description exists.
ZeroQuery is_zero(const ZeroSet& zs, double xi, double tol);

}  // namespace spectra
