#pragma once

#include <string>

#include "weylconn/polynomial.hpp"

namespace weylconn {

/// Reduced fraction of polynomials. Canonical form: gcd(num, den) is a unit,
/// numerator and denominator have integer coefficients with coprime joint
/// content, and the denominator's leading coefficient under the global lex
/// order is positive. Zero is 0/1. Equality is therefore structural.
class RationalFunction {
public:
    /// Contextless zero; adopts the other operand's table on contact.
    RationalFunction();
    /// Contextless rational constant (lets Eigen form Scalar(0), Scalar(1)).
    explicit RationalFunction(long v);
    explicit RationalFunction(BigRational c);

    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num);

    static RationalFunction zero(VarTablePtr table) {
        return RationalFunction(Polynomial::zero(std::move(table)));
    }
    static RationalFunction constant(VarTablePtr table, BigRational c) {
        return RationalFunction(Polynomial::constant(std::move(table), std::move(c)));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VarTablePtr& table() const { return num_.table(); }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_ == den_ && !num_.isZero(); }
    bool isPolynomial() const { return den_.isConstant(); }
    bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
    /// Requires isConstant().
    BigRational constantValue() const;
    /// True when neither numerator nor denominator uses a base variable.
    bool isParamOnly() const { return num_.isParamOnly() && den_.isParamOnly(); }

    RationalFunction operator-() const;
    RationalFunction inv() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction& operator+=(const RationalFunction& o) { *this = *this + o; return *this; }
    RationalFunction& operator-=(const RationalFunction& o) { *this = *this - o; return *this; }
    RationalFunction& operator*=(const RationalFunction& o) { *this = *this * o; return *this; }
    RationalFunction& operator/=(const RationalFunction& o) { *this = *this / o; return *this; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        if (a.isZero() && b.isZero()) return true;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// Formal partial derivative (quotient rule), returned reduced.
    RationalFunction derivative(std::size_t var) const;

    /// "num" when the denominator is one, else "num/den" with both sides in
    /// canonical polynomial text; the numerator is parenthesized unless it is
    /// a single term with positive coefficient, the denominator unless it is
    /// a single bare variable power.
    std::string str() const;

private:
    struct AlreadyCoprime {};
    RationalFunction(Polynomial num, Polynomial den, AlreadyCoprime);

    Polynomial num_;
    Polynomial den_;

    void reduce();
    /// Canonicalizes contents and the denominator sign; num/den must already
    /// share no polynomial factor.
    void normalizeContentAndSign();
};

} // namespace weylconn
