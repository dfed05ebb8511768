#include "weylconn/rational.hpp"

#include <ostream>

namespace weylconn {

BigRational BigRational::fromString(const std::string& s) {
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0) {
        throw InputError("malformed rational number: '" + s + "'");
    }
    if (sgn(v.get_den()) == 0) throw DivisionByZeroError("zero denominator in '" + s + "'");
    v.canonicalize();
    return BigRational(std::move(v));
}

std::string BigRational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.v_;
}

mpz_class integerGcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

mpz_class integerLcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigRational rationalLcm(const BigRational& a, const BigRational& b) {
    return BigRational(integerLcm(a.numerator(), b.numerator()),
                       integerGcd(a.denominator(), b.denominator()));
}

BigRational binomial(int n, int k) {
    if (k < 0 || k > n) return BigRational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRational(r, mpz_class(1));
}

BigRational fallingFactorial(int m, int j) {
    mpz_class r = 1;
    for (int i = 0; i < j; ++i) r *= (m - i);
    return BigRational(r, mpz_class(1));
}

} // namespace weylconn
