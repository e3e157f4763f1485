#pragma once

#include <optional>
#include <vector>

#include "spectra/intervals.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/zero_set.hpp"

namespace spectra {

/// Knobs for the backtracking spectrum search.
struct SearchConfig {
    int max_period = 4;              // integer periods 1..max_period are tried
    long long node_budget = 1'000'000;
    double tol = 1e-8;               // orthogonality tolerance on the float path
    double tiling_tol = 1e-6;        // final tiling verification tolerance
    double tiling_grid_step = 0.05;  // grid for the final tiling verification
    int packing_samples = 8;         // packing prune samples per partial candidate
    double zero_window = 0.0;        // float gap pool radius; 0 = derived from max_period
};

struct ExactSearchOutcome {
    std::vector<RationalPeriodic> spectra;  // canonical, sorted by (period, base)
    bool budget_exhausted = false;
    bool gap_pool_complete = true;  // false when the coset description was incomplete
    long long nodes = 0;
};

struct FloatSearchOutcome {
    std::vector<FloatPeriodic> spectra;
    bool budget_exhausted = false;
    long long nodes = 0;
};

/// All points of the coset description inside [lo, hi), sorted.
std::vector<Rational> coset_grid(const CosetDescription& cosets, const Rational& lo,
                                 const Rational& hi);

/// Canonical representative of base + tZ up to translation: reduce to the
/// primitive period, then pick the lexicographically least translate that
/// keeps a base point at 0.
RationalPeriodic canonical_spectrum(std::vector<Rational> base, long long t);

/// Wrap a strictly increasing point list starting at 0 into a period-T
/// candidate: every wrapped difference base_i - base_j + k T must be a zero
/// of chi_hat. On the exact path membership of d + k T in a coset depends
/// only on k mod N/gcd(T, N), so checking one cycle of k certifies every
/// wrap. Returns nothing when some wrapped difference is not a zero.
std::optional<RationalPeriodic> close_period(const RationalIntervals& omega,
                                             const RationalWindow& partial, long long t);

/// Float path: wrapped differences are checked against the supplied zero
/// set up to the horizon 3T only, so a success is numerical evidence, not a
/// certificate. The zero set window must cover [-3T, 3T] unless it carries
/// an exact coset description.
std::optional<FloatPeriodic> close_period(const ZeroSet& zeros, const FloatWindow& partial,
                                          long long t, double tol = 1e-8);

/// Depth-first search for periodic spectra with base points on the coset
/// grid, the first point pinned at 0, and integer periods up to
/// cfg.max_period. Prefix pruning: every new pairwise difference must be an
/// exact zero, and a partial packing sum certifiably above 1 + tol kills
/// the branch (partial sums only grow, so no true spectrum is pruned).
/// Accepted candidates must close their period and pass the tiling
/// verification. Results are canonical: primitive period, lexicographically
/// least translate, sorted by (period, base).
ExactSearchOutcome search_spectra(const RationalIntervals& omega, const SearchConfig& cfg);

/// Same search over the numeric zero set; candidates carry float points.
FloatSearchOutcome search_spectra(const FloatIntervals& omega, const SearchConfig& cfg);

}  // namespace spectra
