#include "spectra/cyclotomic.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace spectra {

namespace {

using int128 = __int128;

long long fit64(int128 v, const char* what) {
    if (v > int128((std::uint64_t(1) << 63) - 1) || v < -int128(std::uint64_t(1) << 63))
        throw std::overflow_error(what);
    return static_cast<long long>(v);
}

}  // namespace

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    std::vector<int128> acc(a.coeff.size() + b.coeff.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
        for (std::size_t j = 0; j < b.coeff.size(); ++j)
            acc[i + j] += int128(a.coeff[i]) * int128(b.coeff[j]);
    std::vector<long long> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        out[i] = fit64(acc[i], "polynomial product overflows 64-bit coefficients");
    return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> divide_monic(const IntPolynomial& num, const IntPolynomial& den) {
    if (!den.is_monic()) throw std::invalid_argument("divide_monic: divisor must be monic");
    const int dd = den.degree();
    if (num.is_zero()) return IntPolynomial{};
    if (num.degree() < dd) return std::nullopt;

    std::vector<int128> rem(num.coeff.begin(), num.coeff.end());
    std::vector<long long> quot(num.coeff.size() - dd, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const long long q = fit64(rem[i], "polynomial quotient overflows 64-bit coefficients");
        if (q == 0) continue;
        quot[i - dd] = q;
        rem[i] = 0;
        for (int k = 0; k < dd; ++k) rem[i - dd + k] -= int128(q) * int128(den.coeff[k]);
    }
    for (int k = 0; k < dd; ++k)
        if (rem[k] != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

long long euler_phi(long long m) {
    if (m <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
    long long result = m;
    long long n = m;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        result -= result / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const IntPolynomial& cyclotomic(long long m) {
    if (m <= 0) throw std::invalid_argument("cyclotomic: index must be positive");
    static std::map<long long, IntPolynomial> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);

    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // x^m - 1 divided by the cyclotomic factors of the proper divisors.
    std::function<const IntPolynomial&(long long)> get = [&](long long k) -> const IntPolynomial& {
        auto jt = cache.find(k);
        if (jt != cache.end()) return jt->second;
        std::vector<long long> xk(k + 1, 0);
        xk[0] = -1;
        xk[k] = 1;
        IntPolynomial rem{std::vector<long long>(std::move(xk))};
        for (long long d = 1; d < k; ++d) {
            if (k % d) continue;
            auto q = divide_monic(rem, get(d));
            if (!q) throw std::logic_error("cyclotomic recursion: exact division failed");
            rem = std::move(*q);
        }
        return cache.emplace(k, std::move(rem)).first->second;
    };
    return get(m);
}

ExpSumPolynomial exp_sum_polynomial(const RationalIntervals& omega) {
    const long long n = common_denominator(omega);
    std::vector<std::pair<long long, int>> terms;
    terms.reserve(2 * omega.count());
    long long lo = 0, hi = 0;
    bool first = true;
    auto scaled = [&](const Rational& e) {
        Rational s = e * Rational(n);
        if (s.den() != 1) throw std::logic_error("exp_sum_polynomial: denominator mismatch");
        return s.num();
    };
    for (const auto& [a, b] : omega.intervals()) {
        for (auto [p, sign] : {std::pair{scaled(a), +1}, std::pair{scaled(b), -1}}) {
            terms.emplace_back(p, sign);
            lo = first ? p : std::min(lo, p);
            hi = first ? p : std::max(hi, p);
            first = false;
        }
    }
    if (hi - lo > 2'000'000)
        throw std::overflow_error("exp_sum_polynomial: endpoint spread too large");
    std::vector<long long> coeff(hi - lo + 1, 0);
    for (auto [p, sign] : terms) coeff[p - lo] += sign;
    return ExpSumPolynomial{IntPolynomial(std::move(coeff)), n, lo};
}

UnitCircleRoots unit_circle_roots(IntPolynomial p) {
    UnitCircleRoots out;
    if (p.is_zero()) throw std::invalid_argument("unit_circle_roots: zero polynomial");
    // Factors of x contribute only the root 0, never a unit-circle root.
    std::size_t lead_zeros = 0;
    while (lead_zeros < p.coeff.size() && p.coeff[lead_zeros] == 0) ++lead_zeros;
    p.coeff.erase(p.coeff.begin(), p.coeff.begin() + lead_zeros);

    // Strip cyclotomic factors. phi(m) >= sqrt(m/2), so phi(m) <= deg forces
    // m <= 2 deg^2. A numeric evaluation at a primitive m-th root prefilters
    // the exact division.
    const int initial_degree = p.degree();
    double scale = 1.0;
    for (long long c : p.coeff) scale += std::abs(static_cast<double>(c));
    const long long m_limit = 2 * static_cast<long long>(initial_degree) * initial_degree;
    for (long long m = 1; m <= m_limit && p.degree() > 0; ++m) {
        if (euler_phi(m) > p.degree()) continue;
        const double theta = 2.0 * std::numbers::pi / static_cast<double>(m);
        const std::complex<double> zeta{std::cos(theta), std::sin(theta)};
        std::complex<double> value{0.0, 0.0};
        for (int i = p.degree(); i >= 0; --i) value = value * zeta + static_cast<double>(p.coeff[i]);
        if (std::abs(value) > 1e-6 * scale) continue;
        bool divided = false;
        while (auto q = divide_monic(p, cyclotomic(m))) {
            p = std::move(*q);
            divided = true;
        }
        if (divided) {
            out.cyclotomic_orders.push_back(m);
            scale = 1.0;
            for (long long c : p.coeff) scale += std::abs(static_cast<double>(c));
        }
    }

    if (p.degree() > 0) {
        // Whatever remains has no root-of-unity factors; look for unimodular
        // roots numerically. Anything within 1e-9 of the circle is reported,
        // which can only err toward marking the description incomplete.
        const int d = p.degree();
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
        for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
        const double lead = static_cast<double>(p.coeff[d]);
        for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(p.coeff[i]) / lead;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        for (int i = 0; i < d; ++i) {
            const std::complex<double> w = solver.eigenvalues()(i);
            if (std::abs(std::abs(w) - 1.0) <= 1e-9) out.other_unimodular.push_back(w);
        }
    }
    out.complete = out.other_unimodular.empty();
    return out;
}

CyclotomicField::CyclotomicField(long long order) : order_(order) {
    if (order <= 0) throw std::invalid_argument("CyclotomicField: order must be positive");
    if (order > (1 << 14)) throw std::overflow_error("CyclotomicField: order too large");
    const IntPolynomial& phi = cyclotomic(order);
    degree_ = phi.degree();
    modulus_.reserve(phi.coeff.size());
    for (long long c : phi.coeff) modulus_.emplace_back(c);
    power_basis_.reserve(order_);
    Elem cur(degree_, Rational(0));
    cur[0] = Rational(1);
    power_basis_.push_back(cur);
    for (long long k = 1; k < order_; ++k) {
        std::vector<Rational> shifted(degree_ + 1, Rational(0));
        for (int j = 0; j < degree_; ++j) shifted[j + 1] = cur[j];
        reduce(shifted);
        cur.assign(shifted.begin(), shifted.begin() + degree_);
        power_basis_.push_back(cur);
    }
}

void CyclotomicField::reduce(std::vector<Rational>& c) const {
    for (int i = static_cast<int>(c.size()) - 1; i >= degree_; --i) {
        if (c[i].is_zero()) continue;
        const Rational q = c[i];
        c[i] = Rational(0);
        for (int k = 0; k < degree_; ++k) c[i - degree_ + k] -= q * modulus_[k];
    }
    c.resize(degree_, Rational(0));
}

CyclotomicField::Elem CyclotomicField::one() const {
    Elem e(degree_, Rational(0));
    e[0] = Rational(1);
    return e;
}

CyclotomicField::Elem CyclotomicField::root_power(long long k) const {
    long long kk = k % order_;
    if (kk < 0) kk += order_;
    return power_basis_[kk];
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
    Elem out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = a[i] + b[i];
    return out;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
    Elem out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = a[i] - b[i];
    return out;
}

CyclotomicField::Elem CyclotomicField::negate(const Elem& a) const {
    Elem out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = -a[i];
    return out;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
    std::vector<Rational> conv(2 * degree_ - 1, Rational(0));
    for (int i = 0; i < degree_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < degree_; ++j) {
            if (b[j].is_zero()) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    reduce(conv);
    return Elem(conv.begin(), conv.end());
}

bool CyclotomicField::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

std::complex<double> CyclotomicField::to_complex(const Elem& a) const {
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(order_);
    const std::complex<double> zeta{std::cos(theta), std::sin(theta)};
    std::complex<double> value{0.0, 0.0};
    for (int i = degree_ - 1; i >= 0; --i) value = value * zeta + to_double(a[i]);
    return value;
}

namespace {

// Polynomials over Q, lowest degree first, for the inverse computation.
using RatPoly = std::vector<Rational>;

void rat_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Euclidean division; returns the quotient and replaces num with the remainder.
RatPoly rat_divmod(RatPoly& num, const RatPoly& den) {
    RatPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        const Rational q = num.back() / den.back();
        const std::size_t off = num.size() - den.size();
        quot[off] = q;
        for (std::size_t k = 0; k < den.size(); ++k) num[off + k] -= q * den[k];
        rat_trim(num);
    }
    return quot;
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

RatPoly rat_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rat_trim(a);
    return a;
}

}  // namespace

CyclotomicField::Elem CyclotomicField::inverse(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("CyclotomicField: inverse of zero");
    // Extended Euclid against the (irreducible) modulus: the gcd is a nonzero
    // constant, and the Bezout coefficient of a is the inverse after scaling.
    RatPoly r0(modulus_.begin(), modulus_.end());
    RatPoly r1(a.begin(), a.end());
    rat_trim(r1);
    RatPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        RatPoly rem = r0;
        RatPoly q = rat_divmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RatPoly next = rat_sub(std::move(s0), rat_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (r0.size() != 1) throw std::logic_error("CyclotomicField: modulus is not irreducible");
    const Rational scale = Rational(1) / r0[0];
    Elem out(degree_, Rational(0));
    for (std::size_t i = 0; i < s0.size() && i < static_cast<std::size_t>(degree_); ++i)
        out[i] = s0[i] * scale;
    return out;
}

long long phase_exponent(const Rational& t, long long order) {
    if (order % t.den() != 0)
        throw std::invalid_argument("phase_exponent: denominator does not divide the order");
    const long long q = order / t.den();
    int128 e = -int128(t.num()) * int128(q);
    int128 m = e % int128(order);
    if (m < 0) m += order;
    return static_cast<long long>(m);
}

long long phase_order(const std::vector<Rational>& ts) {
    long long m = 1;
    for (const auto& t : ts) m = checked_lcm(m, t.den());
    return m;
}

bool exp_sum_is_zero_exact(const RationalIntervals& omega, const Rational& xi) {
    std::vector<Rational> ts;
    ts.reserve(2 * omega.count());
    for (const auto& [a, b] : omega.intervals()) {
        ts.push_back(a * xi);
        ts.push_back(b * xi);
    }
    const long long order = phase_order(ts);
    CyclotomicField field(order);
    auto acc = field.zero();
    for (std::size_t j = 0; j < ts.size(); j += 2) {
        acc = field.add(acc, field.root_power(phase_exponent(ts[j], order)));
        acc = field.sub(acc, field.root_power(phase_exponent(ts[j + 1], order)));
    }
    return field.is_zero(acc);
}

}  // namespace spectra
