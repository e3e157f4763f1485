#pragma once

#include <vector>

#include "spectra/fourier.hpp"
#include "spectra/intervals.hpp"
#include "spectra/report.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

/// Certified bracket for the packing sum F(x) = sum over lambda of
/// |chi_hat|^2(x - lambda): lo sums the points within distance radius of x,
/// hi adds the tail bound for any min_gap-separated continuation beyond.
struct PackingValue {
    double lo = 0.0;
    double hi = 0.0;
    double tail = 0.0;      // hi - lo, the certified tail budget
    double radius = 0.0;    // truncation radius actually used
    long long terms = 0;    // number of points summed
};

/// Packing sum against a finite window. The window must cover
/// [x - radius, x + radius] (throws std::domain_error otherwise), since
/// points it does not know about would silently undercount lo.
PackingValue packing_value(const FloatIntervals& omega, const FloatWindow& w, double x,
                           double radius);

/// Packing sum against a periodic spectrum; the progression is summed with
/// iterated unit rotations, so radius may be large.
PackingValue packing_value(const FloatIntervals& omega, const FloatPeriodic& p, double x,
                           double radius);

/// Minimal gap of the periodic set base + period*Z, including the wrap
/// from the last base point to the first of the next block.
double min_cyclic_gap(const FloatPeriodic& p);
Rational min_cyclic_gap(const RationalPeriodic& p);

/// Lipschitz constant for x -> F(x) over a min_gap-separated point set:
/// near terms (within distance 1) use |(|chi_hat|^2)'| <= 4 pi max|endpoint|
/// measure^2, far terms decay like 1/y^2. Used to extend grid certification
/// to every point in between.
double tiling_sum_lipschitz(const FourierEvaluator& f, double min_gap);

/// Pairwise orthogonality: every difference of distinct window points must
/// be a zero of chi_hat (|chi_hat(diff)| <= tol numerically, exact root-of-
/// unity arithmetic on the rational path). Fail carries the first violating
/// pair and the witness value.
VerificationReport check_zeros_condition(const FloatIntervals& omega, const FloatWindow& w,
                                         double tol);
VerificationReport check_zeros_condition(const RationalIntervals& omega, const RationalWindow& w,
                                         double tol);

/// One tiling grid point with its certified bracket for F(x).
struct TilingSample {
    double x = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Tiling condition F = 1 a.e. for a periodic spectrum, checked on a grid
/// over one period with certified truncation (tail <= tol/2) plus a
/// Lipschitz bound between grid points. Throws std::runtime_error when the
/// required truncation radius exceeds the term budget. samples_out, when
/// given, receives the per-grid-point brackets.
VerificationReport check_tiling_condition(const FloatIntervals& omega, const FloatPeriodic& p,
                                          double grid_step, double tol,
                                          std::vector<TilingSample>* samples_out = nullptr);

/// Translational tiling sum_s chi_Omega(x - s) = 1 a.e. Exact path: the sum
/// is period-periodic and piecewise constant, so refine one period by every
/// translated endpoint and count cover multiplicity at each cell midpoint.
VerificationReport check_translational_tiling(const RationalIntervals& omega,
                                              const RationalPeriodic& s);

/// Float path: indicator sums on an endpoint-avoiding grid; a grid point
/// that keeps colliding with interval endpoints after resampling throws.
VerificationReport check_translational_tiling(const FloatIntervals& omega, const FloatPeriodic& s,
                                              double grid_step);

}  // namespace spectra
