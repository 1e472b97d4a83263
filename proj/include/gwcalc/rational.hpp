#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gwcalc/errors.hpp"

namespace gwcalc {

/// Exact arbitrary-precision fraction.  The only scalar type of the engine:
/// every invariant, series coefficient and table entry is a Rational, and no
/// operation ever rounds.  Values are kept in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);

    /// Parses "p/q" or "p" with an optional leading minus.  Rejects zero
    /// denominators and any other malformed literal with ParseError.
    static Rational from_string(std::string_view text);

    /// Renders as "p/q", with "/q" omitted when the value is an integer.
    std::string to_string() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string numerator_string() const { return v_.get_num().get_str(); }
    std::string denominator_string() const { return v_.get_den().get_str(); }

    /// True when stored in lowest terms with positive denominator.  Arithmetic
    /// preserves this; the accessor exists so tests can assert it.
    bool canonical() const;

    /// n! as an exact value.
    static Rational factorial(unsigned long n);

    /// Exact integer power; k < 0 requires a nonzero base.
    Rational pow(long k) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace gwcalc
