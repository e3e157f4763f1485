#pragma once

#include <complex>

#include <Eigen/Core>

#include "spectra/intervals.hpp"

namespace spectra {

using complexd = std::complex<double>;

/// e^{-2 pi i t}, with the argument reduced modulo 1 before the trig calls
/// so large |t| does not lose phase accuracy.
inline complexd unit_phase(double t) {
    double u = std::remainder(t, 1.0);
    double a = 2.0 * M_PI * u;
    return complexd(std::cos(a), -std::sin(a));
}

/// sin(t)/t, with a Taylor branch near 0.
inline double stable_sinc(double t) {
    if (std::abs(t) < 1e-4) {
        double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

/// Evaluates the Fourier transform of the indicator of an interval union
/// and the associated endpoint exponential sum.
///
/// For Omega = union of (a_j, b_j), the transform of the indicator is
///
///   chi_hat(xi) = exp_sum(xi) / (2 pi i xi),
///   exp_sum(xi) = sum_j e^{-2 pi i a_j xi} - e^{-2 pi i b_j xi},
///
/// with chi_hat(0) = measure(Omega). exp_sum is entire and satisfies
/// |exp_sum| <= 2n, so |chi_hat(xi)| <= n / (pi |xi|); that decay rate is
/// what the tail bounds below are built from.
class FourierEvaluator {
public:
    explicit FourierEvaluator(const FloatIntervals& omega);
    explicit FourierEvaluator(const RationalIntervals& omega)
        : FourierEvaluator(to_float(omega)) {}

    /// The endpoint exponential sum. Vanishes at xi = 0.
    complexd exp_sum(double xi) const;

    /// Derivative of exp_sum, used for Newton polishing and curvature bounds.
    complexd exp_sum_deriv(double xi) const;

    /// Transform of the indicator. The removable singularity at 0 is
    /// evaluated through the per-interval closed form
    /// (b-a) e^{-pi i (a+b) xi} sinc(pi (b-a) xi), which agrees with the
    /// ratio branch to ~1e-15 in the switchover region.
    complexd chi_hat(double xi) const;

    double measure() const { return measure_; }
    int interval_count() const { return n_; }

    /// sup over xi of |exp_sum'|: 2 pi sum_j (|a_j| + |b_j|).
    double exp_sum_deriv_bound() const { return deriv_bound_; }
    /// sup over xi of |exp_sum''|: 4 pi^2 sum_j (a_j^2 + b_j^2).
    double exp_sum_second_deriv_bound() const { return second_deriv_bound_; }
    /// |chi_hat(xi)| <= decay_coefficient() / |xi| for all xi != 0.
    double decay_coefficient() const { return n_ / M_PI; }
    double max_abs_endpoint() const { return max_abs_endpoint_; }

    const Eigen::ArrayXd& left_endpoints() const { return left_; }
    const Eigen::ArrayXd& right_endpoints() const { return right_; }

private:
    Eigen::ArrayXd left_, right_;
    double measure_ = 0;
    double deriv_bound_ = 0;
    double second_deriv_bound_ = 0;
    double max_abs_endpoint_ = 0;
    int n_ = 0;
    static constexpr double kSmallXi = 1e-6;
};

inline complexd exp_sum(const FloatIntervals& omega, double xi) {
    return FourierEvaluator(omega).exp_sum(xi);
}
inline complexd chi_hat(const FloatIntervals& omega, double xi) {
    return FourierEvaluator(omega).chi_hat(xi);
}

/// Independent check of chi_hat: adaptive Simpson quadrature of
/// integral_Omega e^{-2 pi i xi x} dx to absolute error <= tol.
/// Deliberately shares no code with FourierEvaluator::chi_hat.
/// Throws std::runtime_error if the error target needs more than the
/// evaluation budget.
complexd quadrature_chi_hat(const FloatIntervals& omega, double xi, double tol);

/// Certified tail bound for sums of |chi_hat|^2 over separated sets.
///
/// For ANY point set A with minimum gap min_gap,
///
///   sum_{a in A, |a| > R} |chi_hat(a)|^2  <=  constant / R   for all R >= radius.
///
/// Derivation: |chi_hat(y)| <= n/(pi |y|), and on each side of 0 the k-th
/// point of A beyond R sits at distance >= R + k*min_gap, so
/// sum 1/a^2 <= 2 (1/R^2 + 1/(min_gap R)). Multiplying by n^2/pi^2 gives
/// constant = 2 n^2 (1/min_gap + 1/radius) / pi^2.
struct TailBound {
    double constant;
    double min_gap;
    double radius;
    double value() const { return constant / radius; }
};

TailBound tail_sum_bound(const FourierEvaluator& f, double min_gap, double radius);

template <class S>
TailBound tail_sum_bound(const IntervalUnion<S>& omega, double min_gap, double radius) {
    return tail_sum_bound(FourierEvaluator(omega), min_gap, radius);
}

}  // namespace spectra
