#include "spectra/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "spectra/cyclotomic.hpp"
#include "spectra/fourier.hpp"
#include "spectra/verify.hpp"

namespace spectra {

namespace {

// Exact zero test for a residue r = xi mod N, memoized. r == 0 means xi is a
// nonzero multiple of the endpoint period N, where the exponential sum
// vanishes identically; the xi == 0 case never reaches here.
class ResidueOracle {
public:
    ResidueOracle(const RationalIntervals& omega, const CosetDescription& cosets)
        : omega_(omega), cosets_(cosets) {}

    bool is_zero(const Rational& residue) {
        if (residue.is_zero()) return true;
        auto it = cache_.find(residue);
        if (it != cache_.end()) return it->second;
        const bool z = cosets_.complete ? coset_contains(cosets_, residue)
                                        : exp_sum_is_zero_exact(omega_, residue);
        cache_.emplace(residue, z);
        return z;
    }

private:
    const RationalIntervals& omega_;
    const CosetDescription& cosets_;
    std::map<Rational, bool> cache_;
};

// Every wrapped difference d + kT, k in Z, of a period-T candidate reduces
// mod N to d + (k mod N/gcd(T,N)) T, so one cycle of k certifies all wraps.
bool wraps_are_zeros(const std::vector<Rational>& base, long long t, long long modulus,
                     ResidueOracle& oracle) {
    const long long cycle = modulus / std::gcd(t, modulus);
    const Rational period(t);
    const Rational n(modulus);
    std::vector<Rational> diffs;
    diffs.push_back(Rational(0));  // covers lambda vs lambda + kT
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j)
            if (i != j) diffs.push_back(base[i] - base[j]);
    for (const Rational& d : diffs)
        for (long long k = 0; k < cycle; ++k)
            if (!oracle.is_zero((d + Rational(k) * period).mod(n))) return false;
    return true;
}

}  // namespace

RationalPeriodic canonical_spectrum(std::vector<Rational> base, long long t) {
    std::sort(base.begin(), base.end());
    for (long long div = 1; div < t; ++div) {
        if (t % div != 0) continue;
        const Rational step(div);
        const Rational period(t);
        bool closed = true;
        for (const auto& b : base) {
            const Rational shifted = (b + step).mod(period);
            if (!std::binary_search(base.begin(), base.end(), shifted)) {
                closed = false;
                break;
            }
        }
        if (closed) {
            std::vector<Rational> reduced;
            for (const auto& b : base) reduced.push_back(b.mod(step));
            std::sort(reduced.begin(), reduced.end());
            reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
            base = std::move(reduced);
            t = div;
            break;
        }
    }
    const Rational period(t);
    std::vector<Rational> best;
    for (const auto& origin : base) {
        std::vector<Rational> rot;
        rot.reserve(base.size());
        for (const auto& b : base) rot.push_back((b - origin).mod(period));
        std::sort(rot.begin(), rot.end());
        if (best.empty() || rot < best) best = std::move(rot);
    }
    return make_periodic(std::move(best), Rational(t));
}

namespace {

bool cyclic_match(double x, double target, double period, double eps) {
    double d = std::abs(x - target);
    d = std::min(d, period - d);
    return d <= eps;
}

FloatPeriodic canonical_form_float(std::vector<double> base, double t, double eps) {
    std::sort(base.begin(), base.end());
    const long long ti = llround(t);
    for (long long div = 1; div < ti; ++div) {
        if (ti % div != 0) continue;
        bool closed = true;
        for (const double b : base) {
            double shifted = b + static_cast<double>(div);
            if (shifted >= t) shifted -= t;
            bool found = false;
            for (const double c : base)
                if (cyclic_match(shifted, c, t, eps)) {
                    found = true;
                    break;
                }
            if (!found) {
                closed = false;
                break;
            }
        }
        if (closed) {
            std::vector<double> reduced;
            for (double b : base) {
                double r = std::fmod(b, static_cast<double>(div));
                if (r < 0) r += static_cast<double>(div);
                bool dup = false;
                for (const double c : reduced)
                    if (cyclic_match(r, c, static_cast<double>(div), eps)) {
                        dup = true;
                        break;
                    }
                if (!dup) reduced.push_back(r);
            }
            std::sort(reduced.begin(), reduced.end());
            base = std::move(reduced);
            t = static_cast<double>(div);
            break;
        }
    }
    std::vector<double> best;
    for (const double origin : base) {
        std::vector<double> rot;
        rot.reserve(base.size());
        for (const double b : base) {
            double v = b - origin;
            if (v < 0) v += t;
            if (v >= t) v -= t;
            if (std::abs(v) <= eps || std::abs(v - t) <= eps) v = 0.0;
            rot.push_back(v);
        }
        std::sort(rot.begin(), rot.end());
        if (best.empty() || std::lexicographical_compare(rot.begin(), rot.end(), best.begin(),
                                                         best.end()))
            best = std::move(rot);
    }
    return make_periodic(std::move(best), t);
}

bool same_candidate(const RationalPeriodic& a, const RationalPeriodic& b) {
    return a.period == b.period && a.base == b.base;
}

bool same_candidate_float(const FloatPeriodic& a, const FloatPeriodic& b, double eps) {
    if (std::abs(a.period - b.period) > eps) return false;
    if (a.base.size() != b.base.size()) return false;
    for (std::size_t i = 0; i < a.base.size(); ++i)
        if (std::abs(a.base[i] - b.base[i]) > eps) return false;
    return true;
}

// Packing prune: the partial sum over the chosen prefix already lower-bounds
// F for every completion, so a value certifiably above 1 + tol is fatal.
bool packing_violated(const FourierEvaluator& f, const std::vector<double>& chosen, double t,
                      int samples, double tol) {
    for (int s = 0; s < samples; ++s) {
        const double x = t * (static_cast<double>(s) + 0.5) / samples;
        double sum = 0.0;
        for (const double b : chosen) sum += std::norm(f.chi_hat(x - b));
        if (sum > 1.0 + tol) return true;
    }
    return false;
}

}  // namespace

std::vector<Rational> coset_grid(const CosetDescription& cosets, const Rational& lo,
                                 const Rational& hi) {
    std::vector<Rational> out;
    const Rational n(cosets.modulus);
    for (const Rational& r : cosets.offsets) {
        long long k = ((lo - r) / n).ceil();
        for (Rational x = r + Rational(k) * n; x < hi; x += n)
            if (!(x < lo)) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<RationalPeriodic> close_period(const RationalIntervals& omega,
                                             const RationalWindow& partial, long long t) {
    if (t <= 0) throw std::invalid_argument("close_period: period must be positive");
    if (partial.points.empty()) return std::nullopt;
    const CosetDescription cosets = rational_zero_cosets(omega);
    ResidueOracle oracle(omega, cosets);
    if (!wraps_are_zeros(partial.points, t, cosets.modulus, oracle)) return std::nullopt;
    return make_periodic(partial.points, Rational(t));
}

std::optional<FloatPeriodic> close_period(const ZeroSet& zeros, const FloatWindow& partial,
                                          long long t, double tol) {
    if (t <= 0) throw std::invalid_argument("close_period: period must be positive");
    if (partial.points.empty()) return std::nullopt;
    const double horizon = 3.0 * static_cast<double>(t);
    for (std::size_t i = 0; i < partial.points.size(); ++i)
        for (std::size_t j = 0; j < partial.points.size(); ++j) {
            const double d = partial.points[i] - partial.points[j];
            const long long k_lo =
                static_cast<long long>(std::ceil((-horizon - d) / static_cast<double>(t)));
            const long long k_hi =
                static_cast<long long>(std::floor((horizon - d) / static_cast<double>(t)));
            for (long long k = k_lo; k <= k_hi; ++k) {
                const double delta = d + static_cast<double>(k * t);
                if (i == j && k == 0) continue;
                if (!is_zero(zeros, delta, tol).is_zero) return std::nullopt;
            }
        }
    return make_periodic(partial.points, static_cast<double>(t));
}

ExactSearchOutcome search_spectra(const RationalIntervals& omega, const SearchConfig& cfg) {
    if (cfg.max_period < 1) throw std::invalid_argument("search: max_period must be >= 1");
    ExactSearchOutcome outcome;
    const CosetDescription cosets = rational_zero_cosets(omega);
    outcome.gap_pool_complete = cosets.complete;
    ResidueOracle oracle(omega, cosets);
    const Rational total = measure(omega);
    const FloatIntervals omega_f = to_float(omega);
    const FourierEvaluator eval(omega_f);
    const Rational n(cosets.modulus);

    std::vector<RationalPeriodic> found;
    long long nodes = 0;
    bool budget_hit = false;

    for (long long t = 1; t <= cfg.max_period && !budget_hit; ++t) {
        const Rational expected = Rational(t) * total;
        if (!expected.is_integer() || !(Rational(0) < expected)) continue;
        const auto count = static_cast<std::size_t>(expected.floor());
        const std::vector<Rational> grid = coset_grid(cosets, Rational(0), Rational(t));
        if (grid.empty() || !grid.front().is_zero() || grid.size() < count) continue;

        std::vector<Rational> chosen;
        std::vector<double> chosen_f;
        chosen.push_back(Rational(0));
        chosen_f.push_back(0.0);

        std::function<void(std::size_t)> dfs = [&](std::size_t next) {
            if (budget_hit) return;
            if (chosen.size() == count) {
                if (!wraps_are_zeros(chosen, t, cosets.modulus, oracle)) return;
                RationalPeriodic canon = canonical_spectrum(chosen, t);
                for (const auto& p : found)
                    if (same_candidate(p, canon)) return;
                auto report = check_tiling_condition(omega_f, to_float_periodic(canon),
                                                     cfg.tiling_grid_step, cfg.tiling_tol);
                if (report.passed()) found.push_back(std::move(canon));
                return;
            }
            for (std::size_t i = next; i < grid.size(); ++i) {
                if (grid.size() - i < count - chosen.size()) break;
                const Rational& x = grid[i];
                bool ok = true;
                for (const auto& b : chosen)
                    if (!oracle.is_zero((x - b).mod(n))) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                if (++nodes > cfg.node_budget) {
                    budget_hit = true;
                    return;
                }
                chosen.push_back(x);
                chosen_f.push_back(x.to_double());
                if (!packing_violated(eval, chosen_f, static_cast<double>(t),
                                      cfg.packing_samples, cfg.tol))
                    dfs(i + 1);
                chosen.pop_back();
                chosen_f.pop_back();
                if (budget_hit) return;
            }
        };
        if (count == 1) {
            // Base is just {0}; still must close (wrapped self-differences).
            if (++nodes > cfg.node_budget) {
                budget_hit = true;
            } else if (wraps_are_zeros(chosen, t, cosets.modulus, oracle)) {
                RationalPeriodic canon = canonical_spectrum(chosen, t);
                bool dup = false;
                for (const auto& p : found)
                    if (same_candidate(p, canon)) dup = true;
                if (!dup) {
                    auto report = check_tiling_condition(omega_f, to_float_periodic(canon),
                                                         cfg.tiling_grid_step, cfg.tiling_tol);
                    if (report.passed()) found.push_back(std::move(canon));
                }
            }
        } else {
            dfs(1);
        }
    }

    std::sort(found.begin(), found.end(), [](const RationalPeriodic& a, const RationalPeriodic& b) {
        if (a.period != b.period) return a.period < b.period;
        return a.base < b.base;
    });
    outcome.spectra = std::move(found);
    outcome.budget_exhausted = budget_hit;
    outcome.nodes = nodes;
    return outcome;
}

FloatSearchOutcome search_spectra(const FloatIntervals& omega, const SearchConfig& cfg) {
    if (cfg.max_period < 1) throw std::invalid_argument("search: max_period must be >= 1");
    constexpr double kEps = 1e-9;
    FloatSearchOutcome outcome;
    const double window =
        cfg.zero_window > 0 ? cfg.zero_window : 3.0 * static_cast<double>(cfg.max_period) + 1.0;
    const ZeroSet zeros = find_zeros(omega, window, 1e-10);
    const FourierEvaluator eval(omega);
    const double total = measure(omega);

    std::vector<FloatPeriodic> found;
    long long nodes = 0;
    bool budget_hit = false;

    for (long long t = 1; t <= cfg.max_period && !budget_hit; ++t) {
        const double expected = static_cast<double>(t) * total;
        const auto count = static_cast<std::size_t>(llround(expected));
        if (count < 1 || std::abs(expected - static_cast<double>(count)) > 1e-9) continue;

        std::vector<double> grid;
        grid.push_back(0.0);
        for (const auto& z : zeros.zeros)
            if (z.location > kEps && z.location < static_cast<double>(t) - kEps)
                grid.push_back(z.location);
        if (grid.size() < count) continue;

        std::vector<double> chosen;
        chosen.push_back(0.0);

        auto try_accept = [&] {
            auto closed = close_period(zeros, make_window(chosen), t, cfg.tol);
            if (!closed) return;
            FloatPeriodic canon = canonical_form_float(closed->base, closed->period, kEps);
            for (const auto& p : found)
                if (same_candidate_float(p, canon, 1e-7)) return;
            auto report =
                check_tiling_condition(omega, canon, cfg.tiling_grid_step, cfg.tiling_tol);
            if (report.passed()) found.push_back(std::move(canon));
        };

        std::function<void(std::size_t)> dfs = [&](std::size_t next) {
            if (budget_hit) return;
            if (chosen.size() == count) {
                try_accept();
                return;
            }
            for (std::size_t i = next; i < grid.size(); ++i) {
                if (grid.size() - i < count - chosen.size()) break;
                const double x = grid[i];
                bool ok = true;
                for (const double b : chosen)
                    if (!is_zero(zeros, x - b, cfg.tol).is_zero) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                if (++nodes > cfg.node_budget) {
                    budget_hit = true;
                    return;
                }
                chosen.push_back(x);
                if (!packing_violated(eval, chosen, static_cast<double>(t), cfg.packing_samples,
                                      cfg.tol))
                    dfs(i + 1);
                chosen.pop_back();
                if (budget_hit) return;
            }
        };
        if (count == 1) {
            if (++nodes > cfg.node_budget)
                budget_hit = true;
            else
                try_accept();
        } else {
            dfs(1);
        }
    }

    std::sort(found.begin(), found.end(), [](const FloatPeriodic& a, const FloatPeriodic& b) {
        if (a.period != b.period) return a.period < b.period;
        return std::lexicographical_compare(a.base.begin(), a.base.end(), b.base.begin(),
                                            b.base.end());
    });
    outcome.spectra = std::move(found);
    outcome.budget_exhausted = budget_hit;
    outcome.nodes = nodes;
    return outcome;
}

}  // namespace spectra
