#pragma once

#include <optional>

#include "spectra/report.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

/// A detected period: the distance between two anchors whose window
/// fingerprints matched. value = anchor_high - anchor_low > 0.
struct PeriodCandidate {
    double value = 0.0;
    double anchor_high = 0.0;
    double anchor_low = 0.0;
    double width = 0.0;  // fingerprint width used
};

/// Scan all anchors whose fingerprint window [lambda, lambda + width] fits
/// in the data and return the smallest positive anchor distance with equal
/// fingerprints, or nothing when all fingerprints differ. A window sampled
/// from a truly periodic set must repeat a fingerprint once the span is
/// large enough (finitely many patterns of a fixed width exist).
/// Throws std::invalid_argument when span(w) < 2 * width.
std::optional<PeriodCandidate> detect_period(const FloatWindow& w, double width, double tol);

/// Check T-periodicity on the window: the points above min + T must equal
/// the points below max - T shifted by T, pointwise within tol. A pass is
/// "window-periodic" only, never a claim beyond the data. Also reports
/// whether T rounds to an integer within tol and whether the per-period
/// point count matches the window density at sampled anchors.
VerificationReport verify_period(const FloatWindow& w, double t, double tol);

}  // namespace spectra
