#include "gwcalc/rational.hpp"

#include <cctype>
#include <ostream>

namespace gwcalc {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw ParseError("rational with zero denominator: " + std::to_string(num) + "/0");
    v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    auto fail = [&]() -> ParseError {
        return ParseError("malformed rational literal \"" + std::string(text) + "\"");
    };
    if (text.empty())
        throw fail();
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-')
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("rational with zero denominator: \"" + std::string(text) + "\"");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::canonical() const {
    if (sgn(v_.get_den()) <= 0)
        return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return g == 1 || (v_.get_num() == 0 && v_.get_den() == 1);
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::pow(long k) const {
    if (k < 0 && is_zero())
        throw ZeroConstantTerm("negative power of zero");
    mpz_class num, den;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class q = k < 0 ? mpq_class(den, num) : mpq_class(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace gwcalc
