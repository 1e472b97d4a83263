#include "gwcalc/even_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwcalc {

EvenSeries::EvenSeries(int order) {
    if (order < 0)
        throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational());
}

EvenSeries::EvenSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least the constant coefficient");
}

EvenSeries EvenSeries::unit(int order) {
    EvenSeries s(order);
    s.coeffs_[0] = Rational(1);
    return s;
}

const Rational& EvenSeries::coeff(int g) const {
    if (g < 0 || g > order())
        throw std::out_of_range("coefficient index beyond truncation order");
    return coeffs_[static_cast<size_t>(g)];
}

void EvenSeries::set_coeff(int g, Rational value) {
    if (g < 0 || g > order())
        throw std::out_of_range("coefficient index beyond truncation order");
    coeffs_[static_cast<size_t>(g)] = std::move(value);
}

EvenSeries EvenSeries::truncated(int order) const {
    if (order < 0 || order > this->order())
        throw std::out_of_range("cannot truncate to a larger order");
    return EvenSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

EvenSeries EvenSeries::operator-() const {
    EvenSeries r(order());
    for (int g = 0; g <= order(); ++g)
        r.coeffs_[g] = -coeffs_[g];
    return r;
}

EvenSeries operator+(const EvenSeries& a, const EvenSeries& b) {
    int n = std::min(a.order(), b.order());
    EvenSeries r(n);
    for (int g = 0; g <= n; ++g)
        r.coeffs_[g] = a.coeffs_[g] + b.coeffs_[g];
    return r;
}

EvenSeries operator-(const EvenSeries& a, const EvenSeries& b) {
    int n = std::min(a.order(), b.order());
    EvenSeries r(n);
    for (int g = 0; g <= n; ++g)
        r.coeffs_[g] = a.coeffs_[g] - b.coeffs_[g];
    return r;
}

EvenSeries operator*(const EvenSeries& a, const EvenSeries& b) {
    int n = std::min(a.order(), b.order());
    EvenSeries r(n);
    for (int g = 0; g <= n; ++g) {
        Rational acc;
        for (int i = 0; i <= g; ++i)
            acc += a.coeffs_[i] * b.coeffs_[g - i];
        r.coeffs_[g] = std::move(acc);
    }
    return r;
}

EvenSeries operator*(const Rational& s, const EvenSeries& a) {
    EvenSeries r(a.order());
    for (int g = 0; g <= a.order(); ++g)
        r.set_coeff(g, s * a.coeff(g));
    return r;
}

EvenSeries EvenSeries::inverse() const {
    if (coeffs_[0].is_zero())
        throw ZeroConstantTerm("series inverse requires a nonzero constant term");
    EvenSeries r(order());
    r.coeffs_[0] = Rational(1) / coeffs_[0];
    for (int g = 1; g <= order(); ++g) {
        Rational acc;
        for (int i = 1; i <= g; ++i)
            acc += coeffs_[i] * r.coeffs_[g - i];
        r.coeffs_[g] = -acc / coeffs_[0];
    }
    return r;
}

EvenSeries EvenSeries::pow(long k) const {
    if (k < 0)
        return inverse().pow(-k);
    EvenSeries acc = unit(order());
    EvenSeries base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const EvenSeries& a, const EvenSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int g = 0; g <= n; ++g)
        if (!(a.coeffs_[g] == b.coeffs_[g]))
            return false;
    return true;
}

EvenSeries sinc_half(int order) {
    EvenSeries s(order);
    for (int g = 0; g <= order; ++g) {
        Rational c = Rational(1) / (Rational::factorial(2ul * g + 1) * Rational(4).pow(g));
        s.set_coeff(g, g % 2 == 0 ? c : -c);
    }
    return s;
}

EvenSeries sinc_scaled(long d, int order) {
    if (d < 1)
        throw std::invalid_argument("sinc_scaled needs d >= 1");
    EvenSeries s = sinc_half(order);
    for (int g = 0; g <= order; ++g)
        s.set_coeff(g, Rational(d).pow(2l * g + 1) * s.coeff(g));
    return s;
}

EvenSeries sin_u_over_u(int order) {
    EvenSeries s(order);
    for (int g = 0; g <= order; ++g) {
        Rational c = Rational(1) / Rational::factorial(2ul * g + 1);
        s.set_coeff(g, g % 2 == 0 ? c : -c);
    }
    return s;
}

} // namespace gwcalc
