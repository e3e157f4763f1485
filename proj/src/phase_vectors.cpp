#include "spectra/phase_vectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectra/cyclotomic.hpp"
#include "spectra/fourier.hpp"

namespace spectra {

PhiVector phi(const FloatIntervals& omega, double x) {
    const int n = omega.count();
    PhiVector v;
    v.source = x;
    v.coordinates.resize(2 * n);
    for (int j = 0; j < n; ++j) {
        v.coordinates(j) = unit_phase(omega.intervals()[j].first * x);
        v.coordinates(n + j) = unit_phase(omega.intervals()[j].second * x);
    }
    return v;
}

complexd form_A(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
    if (z.size() != w.size() || z.size() % 2 != 0)
        throw std::invalid_argument("form_A: vectors must share an even length");
    const Eigen::Index h = z.size() / 2;
    // Eigen's dot conjugates its first operand, so put w there to get
    // sum z_i conj(w_i) on each half.
    return w.head(h).dot(z.head(h)) - w.tail(h).dot(z.tail(h));
}

PhiBasis rank_of(const FloatIntervals& omega, const std::vector<double>& pts, double rank_tol) {
    if (pts.empty()) throw std::invalid_argument("rank_of: empty point list");
    if (!(rank_tol > 0.0)) throw std::invalid_argument("rank_of: rank_tol must be positive");

    PhiBasis basis;
    basis.points = pts;
    basis.rank_tol = rank_tol;
    basis.matrix.resize(2 * omega.count(), static_cast<Eigen::Index>(pts.size()));
    for (std::size_t j = 0; j < pts.size(); ++j)
        basis.matrix.col(static_cast<Eigen::Index>(j)) = phi(omega, pts[j]).coordinates;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(basis.matrix);
    const auto& sv = svd.singularValues();
    basis.rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * sv(0)) ++basis.rank;
    return basis;
}

int exact_rank(const RationalIntervals& omega, const std::vector<Rational>& pts) {
    if (pts.empty()) throw std::invalid_argument("exact_rank: empty point list");
    const int rows = 2 * omega.count();
    const int cols = static_cast<int>(pts.size());

    std::vector<Rational> ts;
    ts.reserve(static_cast<std::size_t>(rows) * cols);
    for (const auto& [a, b] : omega.intervals())
        for (const auto& x : pts) {
            ts.push_back(a * x);
            ts.push_back(b * x);
        }
    const long long order = phase_order(ts);
    const CyclotomicField field(order);

    std::vector<std::vector<CyclotomicField::Elem>> mat(
        rows, std::vector<CyclotomicField::Elem>(cols, field.zero()));
    for (int j = 0; j < omega.count(); ++j)
        for (int c = 0; c < cols; ++c) {
            const auto& [a, b] = omega.intervals()[j];
            mat[j][c] = field.root_power(phase_exponent(a * pts[c], order));
            mat[omega.count() + j][c] =
                field.root_power(phase_exponent(b * pts[c], order));
        }

    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!field.is_zero(mat[r][c])) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(mat[rank], mat[pivot]);
        const auto inv = field.inverse(mat[rank][c]);
        for (int cc = c; cc < cols; ++cc) mat[rank][cc] = field.mul(mat[rank][cc], inv);
        for (int r = rank + 1; r < rows; ++r) {
            if (field.is_zero(mat[r][c])) continue;
            const auto factor = mat[r][c];
            for (int cc = c; cc < cols; ++cc)
                mat[r][cc] = field.sub(mat[r][cc], field.mul(factor, mat[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

bool is_generating(const FloatIntervals& omega, PhiBasis& basis, const FloatWindow& w) {
    for (double b : basis.points) {
        bool found = false;
        for (double p : w.points)
            if (std::abs(p - b) <= 1e-9 * (1.0 + std::abs(b))) { found = true; break; }
        if (!found)
            throw std::invalid_argument("is_generating: basis point not in reference window");
    }
    const PhiBasis whole = rank_of(omega, w.points, basis.rank_tol);
    basis.generating = (basis.rank == whole.rank);
    return basis.generating;
}

MembershipResult membership_test(const FloatIntervals& omega, const PhiBasis& basis, double x,
                                 double tol) {
    if (!basis.generating)
        throw std::invalid_argument("membership_test: basis is not flagged generating");
    if (!(tol > 0.0)) throw std::invalid_argument("membership_test: tol must be positive");

    const Eigen::VectorXcd zx = phi(omega, x).coordinates;
    MembershipResult out;
    out.residuals.reserve(basis.points.size());
    for (Eigen::Index j = 0; j < basis.matrix.cols(); ++j) {
        const double r = std::abs(form_A(zx, basis.matrix.col(j)));
        out.residuals.push_back(r);
        out.max_residual = std::max(out.max_residual, r);
    }
    out.member = out.max_residual <= tol;
    return out;
}

bool membership_test_exact(const RationalIntervals& omega, const std::vector<Rational>& basis_pts,
                           const Rational& x) {
    for (const auto& b : basis_pts) {
        const Rational d = x - b;
        if (d.is_zero()) continue;  // self-difference: A(phi(x), phi(x)) = 0 identically
        if (!exp_sum_is_zero_exact(omega, d)) return false;
    }
    return true;
}

GeneratingWindowScan find_generating_window(const FloatIntervals& omega, const FloatWindow& w,
                                            double rank_tol) {
    if (w.points.empty())
        throw std::invalid_argument("find_generating_window: empty window");

    GeneratingWindowScan scan;
    if (w.points.size() == 1) {
        scan.width = 1.0;
        scan.window_rank = 1;
        scan.anchors.emplace_back(w.points.front(), AnchorStatus::Generating);
        return scan;
    }

    scan.window_rank = rank_of(omega, w.points, rank_tol).rank;
    const double back = w.points.back();

    // Sub-window contents only change when the width crosses a pairwise
    // difference, so those values exhaust the candidate widths.
    std::vector<double> widths;
    for (std::size_t i = 0; i < w.points.size(); ++i)
        for (std::size_t j = i + 1; j < w.points.size(); ++j)
            widths.push_back(w.points[j] - w.points[i]);
    std::sort(widths.begin(), widths.end());
    widths.erase(std::unique(widths.begin(), widths.end(),
                             [](double a, double b) { return b - a <= 1e-12 * (1.0 + b); }),
                 widths.end());

    for (double t : widths) {
        std::vector<std::pair<double, AnchorStatus>> verdicts;
        bool all_ok = true;
        int covered = 0;
        for (double lambda : w.points) {
            const double snap = 1e-9 * (1.0 + std::abs(lambda) + t);
            if (lambda + t > back + snap) {
                verdicts.emplace_back(lambda, AnchorStatus::Unknown);
                continue;
            }
            std::vector<double> sub;
            for (double p : w.points)
                if (p >= lambda - snap && p - lambda < t - snap) sub.push_back(p);
            const bool ok = rank_of(omega, sub, rank_tol).rank == scan.window_rank;
            verdicts.emplace_back(lambda, ok ? AnchorStatus::Generating
                                             : AnchorStatus::NotGenerating);
            ++covered;
            if (!ok) { all_ok = false; break; }
        }
        if (all_ok && covered > 0) {
            scan.width = t;
            scan.anchors = std::move(verdicts);
            return scan;
        }
    }
    throw std::runtime_error("find_generating_window: no width up to the window span works");
}

}  // namespace spectra
