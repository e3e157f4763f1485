#pragma once

#include <Eigen/Dense>

#include <vector>

#include "spectra/intervals.hpp"
#include "spectra/rational.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

using complexd = std::complex<double>;

/// Image of a point under the phase map: the 2n unit-modulus coordinates
/// (e^{-2 pi i a_j x})_j followed by (e^{-2 pi i b_j x})_j.
struct PhiVector {
    double source = 0.0;
    Eigen::VectorXcd coordinates;
};

PhiVector phi(const FloatIntervals& omega, double x);

/// The indefinite form A(z, w) = <z_first_half, w_first_half> -
/// <z_second_half, w_second_half> (Hermitian inner products, second
/// argument conjugated). Satisfies A(phi(l), phi(m)) = exp_sum(l - m), which
/// ties orthogonality of exponentials to linear algebra on phase vectors.
/// Throws std::invalid_argument on mismatched or odd lengths.
complexd form_A(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w);

/// A finite point set with its phase matrix and numeric rank. generating is
/// set by is_generating once the basis has been compared against a
/// reference window; membership_test insists on it.
struct PhiBasis {
    std::vector<double> points;
    Eigen::MatrixXcd matrix;  // 2n x |points|, column j = phi(points[j])
    int rank = 0;
    double rank_tol = 0.0;
    bool generating = false;
};

/// Numeric rank of the phase matrix of pts: singular values are thresholded
/// at rank_tol times the largest one.
PhiBasis rank_of(const FloatIntervals& omega, const std::vector<double>& pts, double rank_tol);

/// Exact rank of the phase matrix when endpoints and points are rational:
/// entries are roots of unity, so Gaussian elimination runs in the
/// cyclotomic field of their common order.
int exact_rank(const RationalIntervals& omega, const std::vector<Rational>& pts);

/// True iff basis spans the same phase space as the whole window:
/// rank(basis) == rank(window). Sets basis.generating. Basis points must
/// all appear in the window.
bool is_generating(const FloatIntervals& omega, PhiBasis& basis, const FloatWindow& w);

/// Membership oracle against a generating basis: x belongs to the spectrum
/// iff every A(phi(x), phi(b_j)) vanishes (residuals up to tol). Requires
/// basis.generating, since only then is the criterion an equivalence.
struct MembershipResult {
    bool member = false;
    double max_residual = 0.0;
    std::vector<double> residuals;
};

MembershipResult membership_test(const FloatIntervals& omega, const PhiBasis& basis, double x,
                                 double tol);

/// Exact membership against rational basis points: each pairwise
/// exponential sum is tested for exact vanishing in the cyclotomic field.
bool membership_test_exact(const RationalIntervals& omega, const std::vector<Rational>& basis_pts,
                           const Rational& x);

enum class AnchorStatus { Generating, NotGenerating, Unknown };

/// Result of scanning window widths: width is the smallest pairwise
/// difference d of the window such that every fully covered anchored
/// sub-window [lambda, lambda + d) reaches the rank of the whole window.
/// Window contents only change at difference values, so the scan over those
/// values is exhaustive. Anchors whose sub-window sticks out of the data
/// are Unknown and do not vote.
struct GeneratingWindowScan {
    double width = 0.0;
    int window_rank = 0;
    std::vector<std::pair<double, AnchorStatus>> anchors;  // verdicts at the winning width
};

/// Throws std::runtime_error when no width up to the window span works.
/// A singleton window is generating at any width; 1.0 is reported.
GeneratingWindowScan find_generating_window(const FloatIntervals& omega, const FloatWindow& w,
                                            double rank_tol);

}  // namespace spectra
