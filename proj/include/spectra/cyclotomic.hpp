#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "spectra/intervals.hpp"
#include "spectra/rational.hpp"

namespace spectra {

/// Dense polynomial over the 64-bit integers, coefficients lowest degree
/// first, trimmed so the leading coefficient is nonzero (zero polynomial =
/// empty vector). Products are overflow-checked.
struct IntPolynomial {
    std::vector<long long> coeff;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> c) : coeff(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    bool is_zero() const { return coeff.empty(); }
    long long leading() const { return coeff.back(); }
    bool is_monic() const { return !coeff.empty() && coeff.back() == 1; }

    void trim() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeff == b.coeff;
    }
};

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

/// Exact division by a monic divisor; nullopt when the remainder is nonzero.
std::optional<IntPolynomial> divide_monic(const IntPolynomial& num, const IntPolynomial& den);

/// m-th cyclotomic polynomial, computed by the divisor recursion
/// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d and memoized.
const IntPolynomial& cyclotomic(long long m);

long long euler_phi(long long m);

/// The endpoint exponential sum of a rational interval union, written as an
/// integer polynomial: with N the common denominator of the endpoints and
/// w = e^{-2 pi i xi / N},
///
///   exp_sum(xi) = w^{shift} * P(w),
///
/// so the zero set of exp_sum is N-periodic and is cut out by the roots of
/// P on the unit circle.
struct ExpSumPolynomial {
    IntPolynomial poly;
    long long modulus;  // N
    long long shift;    // power of w factored out to make exponents start at 0
};

ExpSumPolynomial exp_sum_polynomial(const RationalIntervals& omega);

/// Roots of an integer polynomial on the unit circle, split into exact
/// root-of-unity content (orders m with Phi_m | P, to any multiplicity) and
/// whatever non-cyclotomic unimodular roots the stripped polynomial still
/// has (located numerically via the companion matrix). complete is true
/// when the second list is empty, i.e. the cyclotomic orders describe the
/// whole unit-circle root set.
struct UnitCircleRoots {
    std::vector<long long> cyclotomic_orders;
    std::vector<std::complex<double>> other_unimodular;
    bool complete = true;
};

UnitCircleRoots unit_circle_roots(IntPolynomial p);

/// Arithmetic in the cyclotomic field Q(zeta_M), zeta_M = e^{2 pi i / M}.
/// Elements are coefficient vectors of length phi(M) over the power basis
/// 1, zeta, ..., zeta^{phi(M)-1}, reduced modulo Phi_M. Used for exact zero
/// tests of exponential sums and exact rank computations.
class CyclotomicField {
public:
    using Elem = std::vector<Rational>;

    explicit CyclotomicField(long long order);

    long long order() const { return order_; }
    int degree() const { return degree_; }

    Elem zero() const { return Elem(degree_, Rational(0)); }
    Elem one() const;
    /// zeta^k for any integer k (reduced modulo the order).
    Elem root_power(long long k) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem negate(const Elem& a) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    Elem inverse(const Elem& a) const;

    bool is_zero(const Elem& a) const;
    std::complex<double> to_complex(const Elem& a) const;

private:
    void reduce(std::vector<Rational>& c) const;

    long long order_;
    int degree_;
    std::vector<Rational> modulus_;            // Phi_order, rational copies
    std::vector<Elem> power_basis_;            // zeta^k reduced, k in [0, order)
};

/// Exponent e with e^{-2 pi i t} = zeta_order^e. Requires t.den() | order.
long long phase_exponent(const Rational& t, long long order);

/// Smallest M such that every e^{-2 pi i t} in the list is a power of
/// zeta_M, i.e. lcm of the denominators.
long long phase_order(const std::vector<Rational>& ts);

/// Exact test of exp_sum(omega, xi) == 0 for rational xi, by evaluating the
/// sum of roots of unity in the appropriate cyclotomic field. Independent
/// of the polynomial/coset machinery, so the two can cross-check each other.
bool exp_sum_is_zero_exact(const RationalIntervals& omega, const Rational& xi);

/// Zeros of chi_hat are the zeros of exp_sum minus the origin.
inline bool chi_hat_is_zero_exact(const RationalIntervals& omega, const Rational& xi) {
    return !xi.is_zero() && exp_sum_is_zero_exact(omega, xi);
}

}  // namespace spectra
