#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "weylconn/errors.hpp"

namespace weylconn {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. Zero is 0/1.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}                     // NOLINT: implicit by design
    BigRational(long n, long d) : v_(n, d) { requireNonzeroDen(); v_.canonicalize(); }
    explicit BigRational(mpq_class v) : v_(std::move(v)) { requireNonzeroDen(); v_.canonicalize(); }
    BigRational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        requireNonzeroDen();
        v_.canonicalize();
    }

    /// Parses "123", "-4/5". Throws InputError on malformed text.
    static BigRational fromString(const std::string& s);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool isZero() const { return sgn(v_) == 0; }
    bool isOne() const { return v_ == 1; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_), Canonical{}); }
    BigRational abs() const { return sign() < 0 ? -*this : *this; }
    BigRational inv() const {
        if (isZero()) throw DivisionByZeroError("inverse of zero");
        return BigRational(mpq_class(1 / v_), Canonical{});
    }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ + b.v_), Canonical{});
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ - b.v_), Canonical{});
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ * b.v_), Canonical{});
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.isZero()) throw DivisionByZeroError();
        return BigRational(mpq_class(a.v_ / b.v_), Canonical{});
    }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.isZero()) throw DivisionByZeroError();
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    /// "3", "-3", "3/4"
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const BigRational& q);

private:
    struct Canonical {};
    BigRational(mpq_class v, Canonical) : v_(std::move(v)) {}
    void requireNonzeroDen() const {
        if (sgn(v_.get_den()) == 0) throw DivisionByZeroError("zero denominator");
    }

    mpq_class v_;
};

/// gcd of |a| and |b| as integers; both must be integers.
mpz_class integerGcd(const mpz_class& a, const mpz_class& b);
mpz_class integerLcm(const mpz_class& a, const mpz_class& b);

/// lcm of two positive rationals: lcm of numerators over gcd of denominators.
BigRational rationalLcm(const BigRational& a, const BigRational& b);

/// binomial(n, k) for small non-negative machine integers.
BigRational binomial(int n, int k);

/// Falling factorial m(m-1)...(m-j+1).
BigRational fallingFactorial(int m, int j);

} // namespace weylconn
