#include "spectra/zero_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "spectra/cyclotomic.hpp"
#include "spectra/parallel.hpp"

namespace spectra {

namespace {

constexpr long long kScanBudget = 20'000'000;

struct ScanState {
    const FourierEvaluator& f;
    double lip;         // bound on |g'|
    double leaf_width;  // stop subdividing below this width
    std::vector<std::pair<double, double>> suspects;
    long long evals = 0;

    // Midpoint Lipschitz exclusion: |g(mid)| > lip * w/2 makes [lo, hi]
    // zero-free. Undecided leaves are collected in increasing order.
    void scan(double lo, double hi) {
        if (++evals > kScanBudget)
            throw std::runtime_error("find_zeros: evaluation budget exceeded");
        const double mid = 0.5 * (lo + hi);
        const double gm = std::abs(f.exp_sum(mid));
        if (gm > lip * (0.5 * (hi - lo)) + 1e-11) return;
        if (hi - lo <= leaf_width) {
            suspects.emplace_back(lo, hi);
            return;
        }
        scan(lo, mid);
        scan(mid, hi);
    }
};

CertifiedZero polish_cluster(const FourierEvaluator& f, double lo, double hi, double tol,
                             double lip, double lip2) {
    const double width = hi - lo;
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 64; ++iter) {
        const std::complex<double> g = f.exp_sum(x);
        const std::complex<double> gd = f.exp_sum_deriv(x);
        if (std::abs(gd) < 1e-300) break;
        const double step = std::real(g / gd);
        x = std::clamp(x - step, lo - 4.0 * width, hi + 4.0 * width);
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
    }

    CertifiedZero out;
    out.location = x;
    out.radius = std::max(tol, 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(x)));
    out.certified = false;

    const std::complex<double> gv = f.exp_sum(x);
    const std::complex<double> gd = f.exp_sum_deriv(x);
    const double ad = std::abs(gd);
    const double eps = out.radius;
    if (ad <= 4.0 * lip2 * eps) return out;  // tangential: curvature comparable to slope

    // Rotate by the derivative phase: G = conj(c) g has (Im G)'(x) ~ 0, so
    // |Im G| <= eta on [x - eps, x + eps]. A sign change of Re G clearing
    // eta pins a point where |g| <= eta inside the interval.
    const std::complex<double> c = gd / ad;
    const double im0 = std::abs(std::imag(std::conj(c) * gv));
    const double imd = std::abs(std::imag(std::conj(c) * gd));
    const double eta = im0 + imd * eps + 0.5 * lip2 * eps * eps;
    const double rm = std::real(std::conj(c) * f.exp_sum(x - eps));
    const double rp = std::real(std::conj(c) * f.exp_sum(x + eps));
    const bool sign_change = (rm < -eta && rp > eta) || (rm > eta && rp < -eta);
    const double accept = tol * std::max(lip, 1.0);
    out.certified = sign_change && std::abs(gv) <= accept && eta <= accept;
    return out;
}

}  // namespace

double ZeroSet::min_positive_zero() const {
    for (const auto& z : zeros)
        if (z.location > 0.0) return z.location;
    return std::numeric_limits<double>::infinity();
}

ZeroSet find_zeros(const FloatIntervals& omega, double radius, double tol) {
    if (!(radius > 0.0)) throw std::invalid_argument("find_zeros: radius must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("find_zeros: tol must be positive");

    const FourierEvaluator f(omega);
    const double lip = f.exp_sum_deriv_bound();
    const double lip2 = f.exp_sum_second_deriv_bound();
    const double leaf = std::min(tol, 1e-2);

    // chi_hat is zero-free near 0: |chi_hat(xi)| >= measure - 2 pi measure
    // max|endpoint| |xi|, so (-rho, rho) with rho = 1/(4 pi max|endpoint|)
    // needs no scan. Outside of it, zeros of chi_hat are zeros of g.
    const double rho = 1.0 / (4.0 * std::numbers::pi * f.max_abs_endpoint());

    ZeroSet out;
    out.window_radius = radius;
    out.separation_floor = leaf;
    out.omega = omega;

    std::vector<CertifiedZero> positive;
    if (radius > rho) {
        const int chunks = std::max(1, static_cast<int>(worker_count()) * 4);
        const double span = radius - rho;
        std::vector<std::vector<std::pair<double, double>>> chunk_suspects(chunks);
        parallel_for(chunks, [&](int i) {
            ScanState state{f, lip, leaf, {}, 0};
            state.scan(rho + span * i / chunks, rho + span * (i + 1) / chunks);
            chunk_suspects[i] = std::move(state.suspects);
        });

        // Merge touching suspect leaves into clusters across chunk borders.
        std::vector<std::pair<double, double>> clusters;
        for (auto& list : chunk_suspects)
            for (auto& [a, b] : list) {
                if (!clusters.empty() && a <= clusters.back().second + 0.25 * leaf)
                    clusters.back().second = b;
                else
                    clusters.emplace_back(a, b);
            }

        for (auto& [a, b] : clusters) {
            CertifiedZero z = polish_cluster(f, a, b, tol, lip, lip2);
            if (!positive.empty()) {
                CertifiedZero& prev = positive.back();
                if (z.location - prev.location <= std::max(prev.radius + z.radius, leaf)) {
                    // Same zero reached from two clusters; keep the better point.
                    if (std::abs(f.exp_sum(z.location)) < std::abs(f.exp_sum(prev.location)))
                        prev = z;
                    continue;
                }
            }
            positive.push_back(z);
        }
    }

    // Conjugate symmetry: the negative half-line mirrors the positive one.
    for (auto it = positive.rbegin(); it != positive.rend(); ++it)
        out.zeros.push_back(CertifiedZero{-it->location, it->radius, it->certified});
    out.zeros.insert(out.zeros.end(), positive.begin(), positive.end());
    out.all_certified =
        std::all_of(out.zeros.begin(), out.zeros.end(), [](const auto& z) { return z.certified; });
    return out;
}

ZeroSet find_zeros(const RationalIntervals& omega, double radius, double tol) {
    ZeroSet out = find_zeros(to_float(omega), radius, tol);
    out.exact_cosets = rational_zero_cosets(omega);
    return out;
}

CosetDescription rational_zero_cosets(const RationalIntervals& omega) {
    const ExpSumPolynomial ep = exp_sum_polynomial(omega);
    const UnitCircleRoots roots = unit_circle_roots(ep.poly);

    CosetDescription out;
    out.modulus = ep.modulus;
    out.complete = roots.complete;
    const Rational n(ep.modulus);
    for (long long m : roots.cyclotomic_orders) {
        for (long long k = 0; k < m; ++k) {
            if (std::gcd(k, m) != 1) continue;
            // w = e^{2 pi i k/m} = e^{-2 pi i xi/N}  =>  xi = -N k/m (mod N)
            out.offsets.push_back((Rational(-ep.modulus) * Rational(k, m)).mod(n));
        }
    }
    std::sort(out.offsets.begin(), out.offsets.end());
    out.offsets.erase(std::unique(out.offsets.begin(), out.offsets.end()), out.offsets.end());

    for (const auto& w : roots.other_unimodular) {
        double x = std::fmod(-std::arg(w) / (2.0 * std::numbers::pi) * ep.modulus,
                             static_cast<double>(ep.modulus));
        if (x < 0.0) x += ep.modulus;
        out.numeric_offsets.push_back(x);
    }
    std::sort(out.numeric_offsets.begin(), out.numeric_offsets.end());
    return out;
}

bool coset_contains(const CosetDescription& cosets, const Rational& xi) {
    const Rational r = xi.mod(Rational(cosets.modulus));
    return std::binary_search(cosets.offsets.begin(), cosets.offsets.end(), r);
}

std::vector<Rational> enumerate_coset_zeros(const CosetDescription& cosets,
                                            const Rational& radius) {
    if (!cosets.complete)
        throw std::domain_error("enumerate_coset_zeros: incomplete coset description");
    std::vector<Rational> out;
    const Rational n(cosets.modulus);
    const long long k_lo = (-radius).floor() / cosets.modulus - 1;
    const long long k_hi = radius.ceil() / cosets.modulus + 1;
    for (long long k = k_lo; k <= k_hi; ++k) {
        for (const auto& r : cosets.offsets) {
            const Rational x = r + Rational(k) * n;
            if (x.is_zero()) continue;
            if (abs_value(x) <= radius) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ZeroQuery is_zero(const ZeroSet& zs, double xi, double tol) {
    ZeroQuery out;
    if (!zs.omega) throw std::logic_error("is_zero: zero set carries no interval data");
    const FourierEvaluator f(*zs.omega);
    if (std::abs(xi) <= tol) {
        out.is_zero = false;
        out.witness_value = std::abs(f.chi_hat(xi));
        return out;
    }

    if (zs.exact_cosets) {
        const CosetDescription& cs = *zs.exact_cosets;
        double r = std::fmod(xi, static_cast<double>(cs.modulus));
        if (r < 0.0) r += cs.modulus;
        for (const auto& off : cs.offsets) {
            const double d = std::abs(r - to_double(off));
            if (std::min(d, cs.modulus - d) <= tol) {
                out.is_zero = true;
                out.matched_offset = off;
                return out;
            }
        }
        for (double off : cs.numeric_offsets) {
            const double d = std::abs(r - off);
            if (std::min(d, cs.modulus - d) <= tol) {
                out.is_zero = true;
                out.matched_zero = xi;
                return out;
            }
        }
        if (cs.complete) {
            out.is_zero = false;
            out.witness_value = std::abs(f.chi_hat(xi));
            return out;
        }
    }

    if (std::abs(xi) > zs.window_radius)
        throw std::domain_error("is_zero: point outside the scanned window");

    auto it = std::lower_bound(zs.zeros.begin(), zs.zeros.end(), xi,
                               [](const CertifiedZero& z, double v) { return z.location < v; });
    for (auto cand : {it, it == zs.zeros.begin() ? it : std::prev(it)}) {
        if (cand == zs.zeros.end()) continue;
        if (std::abs(cand->location - xi) <= tol + cand->radius) {
            out.is_zero = true;
            out.matched_zero = cand->location;
            return out;
        }
    }
    out.is_zero = false;
    out.witness_value = std::abs(f.chi_hat(xi));
    return out;
}

}  // namespace spectra
