#pragma once

#include <vector>

#include "gwcalc/rational.hpp"

namespace gwcalc {

/// Truncated formal power series in u with only even powers present: entry g
/// holds the coefficient of u^{2g}.  The truncation order G is explicit data;
/// coefficients beyond it are unknown, never implicitly zero.  Binary
/// operations truncate to the smaller order, and equality compares only the
/// common known range.
class EvenSeries {
public:
    /// Zero series of truncation genus `order` (order+1 known coefficients).
    explicit EvenSeries(int order);
    /// Takes coefficients for g = 0..G; the order is coeffs.size()-1.
    explicit EvenSeries(std::vector<Rational> coeffs);

    /// 1 + 0*u^2 + ... up to the given order.
    static EvenSeries unit(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int g) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    void set_coeff(int g, Rational value);

    /// Restriction to a smaller (or equal) truncation order.
    EvenSeries truncated(int order) const;

    EvenSeries operator-() const;
    friend EvenSeries operator+(const EvenSeries& a, const EvenSeries& b);
    friend EvenSeries operator-(const EvenSeries& a, const EvenSeries& b);
    /// Cauchy product at the common order.
    friend EvenSeries operator*(const EvenSeries& a, const EvenSeries& b);
    friend EvenSeries operator*(const Rational& s, const EvenSeries& a);

    /// Multiplicative inverse up to the truncation order.
    /// Throws ZeroConstantTerm when coeff(0) == 0.
    EvenSeries inverse() const;

    /// Exact integer power; pow(0) is the unit series, negative k inverts
    /// first (and requires a nonzero constant term).
    EvenSeries pow(long k) const;

    /// Coefficient-wise comparison over the common known range.
    friend bool operator==(const EvenSeries& a, const EvenSeries& b);

private:
    std::vector<Rational> coeffs_;
};

/// sin(u/2)/(u/2): coefficient of u^{2g} is (-1)^g / ((2g+1)! * 4^g).
EvenSeries sinc_half(int order);

/// sin(d*u/2)/(u/2): constant term d; coefficient of u^{2g} is
/// d^{2g+1} times the sinc_half coefficient.  Requires d >= 1.
EvenSeries sinc_scaled(long d, int order);

/// sin(u)/u: coefficient of u^{2g} is (-1)^g / (2g+1)!.
EvenSeries sin_u_over_u(int order);

} // namespace gwcalc
