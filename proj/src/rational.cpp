#include "taut/rational.hpp"

#include <ostream>

namespace taut {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    return Rational(Integer(num), Integer(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer int_pow(long base, long exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 1, 0);  // r = 1
    Integer b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Integer multinomial(const std::vector<int>& parts) {
    long total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
    }
    Integer r = factorial(total);
    for (int p : parts) r /= factorial(p);
    return r;
}

Rational binomial(const Rational& x, long n) {
    if (n < 0) return Rational(0);
    Rational num(1);
    for (long t = 0; t < n; ++t) num *= x - Rational(t);
    return num / Rational(factorial(n));
}

}  // namespace taut
