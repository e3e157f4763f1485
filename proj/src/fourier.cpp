#include "spectra/fourier.hpp"

#include <stdexcept>

namespace spectra {

FourierEvaluator::FourierEvaluator(const FloatIntervals& omega) {
    n_ = omega.count();
    left_.resize(n_);
    right_.resize(n_);
    for (int j = 0; j < n_; ++j) {
        left_[j] = omega.intervals()[j].first;
        right_[j] = omega.intervals()[j].second;
    }
    measure_ = (right_ - left_).sum();
    deriv_bound_ = 2.0 * M_PI * (left_.abs() + right_.abs()).sum();
    second_deriv_bound_ = 4.0 * M_PI * M_PI * (left_.square() + right_.square()).sum();
    max_abs_endpoint_ = std::max(left_.abs().maxCoeff(), right_.abs().maxCoeff());
}

complexd FourierEvaluator::exp_sum(double xi) const {
    complexd s(0.0, 0.0);
    for (int j = 0; j < n_; ++j)
        s += unit_phase(left_[j] * xi) - unit_phase(right_[j] * xi);
    return s;
}

complexd FourierEvaluator::exp_sum_deriv(double xi) const {
    // d/dxi e^{-2 pi i a xi} = -2 pi i a e^{-2 pi i a xi}
    complexd s(0.0, 0.0);
    for (int j = 0; j < n_; ++j)
        s += left_[j] * unit_phase(left_[j] * xi) - right_[j] * unit_phase(right_[j] * xi);
    return complexd(0.0, -2.0 * M_PI) * s;
}

complexd FourierEvaluator::chi_hat(double xi) const {
    if (std::abs(xi) < kSmallXi) {
        complexd s(0.0, 0.0);
        for (int j = 0; j < n_; ++j) {
            double len = right_[j] - left_[j];
            double mid = left_[j] + right_[j];
            s += len * stable_sinc(M_PI * len * xi) * unit_phase(0.5 * mid * xi);
        }
        return s;
    }
    return exp_sum(xi) / (complexd(0.0, 2.0 * M_PI) * xi);
}

namespace {

complexd integrand(double xi, double x) {
    double a = -2.0 * M_PI * xi * x;
    return complexd(std::cos(a), std::sin(a));
}

struct SimpsonState {
    double xi;
    long long evals = 0;
    long long budget = 0;
};

complexd simpson(const complexd& fa, const complexd& fm, const complexd& fb, double h) {
    return (h / 6.0) * (fa + 4.0 * fm + fb);
}

complexd adaptive(SimpsonState& st, double a, double b, const complexd& fa,
                  const complexd& fm, const complexd& fb, const complexd& whole,
                  double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    st.evals += 2;
    if (st.evals > st.budget)
        throw std::runtime_error("quadrature_chi_hat: tolerance unachievable within budget");
    complexd flm = integrand(st.xi, lm);
    complexd frm = integrand(st.xi, rm);
    complexd left = simpson(fa, flm, fm, m - a);
    complexd right = simpson(fm, frm, fb, b - m);
    complexd delta = left + right - whole;
    if (depth > 0 && std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth > 48)
        throw std::runtime_error("quadrature_chi_hat: recursion limit reached");
    return adaptive(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

complexd quadrature_chi_hat(const FloatIntervals& omega, double xi, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("quadrature_chi_hat: tol must be positive");
    SimpsonState st;
    st.xi = xi;
    st.budget = 4'000'000;
    complexd total(0.0, 0.0);
    double per_interval = tol / omega.count();
    for (const auto& [a, b] : omega.intervals()) {
        // seed the recursion with enough panels to resolve the oscillation
        int panels = 2 + static_cast<int>(std::min(1e6, 4.0 * std::abs(xi) * (b - a)));
        double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            double l = a + p * h, r = l + h;
            double m = 0.5 * (l + r);
            complexd fl = integrand(xi, l), fm = integrand(xi, m), fr = integrand(xi, r);
            st.evals += 3;
            complexd whole = simpson(fl, fm, fr, r - l);
            total += adaptive(st, l, r, fl, fm, fr, whole, per_interval / panels, 0);
        }
    }
    return total;
}

TailBound tail_sum_bound(const FourierEvaluator& f, double min_gap, double radius) {
    if (!(min_gap > 0)) throw std::invalid_argument("tail_sum_bound: min_gap must be positive");
    if (!(radius > 0)) throw std::invalid_argument("tail_sum_bound: radius must be positive");
    double n = f.interval_count();
    double c = 2.0 * n * n * (1.0 / min_gap + 1.0 / radius) / (M_PI * M_PI);
    return TailBound{c, min_gap, radius};
}

}  // namespace spectra
