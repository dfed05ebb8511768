#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "weylconn/rational.hpp"
#include "weylconn/vartable.hpp"

namespace weylconn {

/// Exponent vector aligned with a VarTable. All entries non-negative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    std::size_t size() const { return e_.size(); }
    int exponent(std::size_t i) const { return e_[i]; }
    int& exponent(std::size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    bool isUnit() const;
    int totalDegree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires this->divides(o) in reverse: o / this.
    Monomial quotientOf(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    /// The fixed global lexicographic order: variable 0 is most significant.
    static int lexCompare(const Monomial& a, const Monomial& b);

    /// Map comparator placing the lex-largest monomial first.
    struct LexGreater {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return lexCompare(a, b) > 0;
        }
    };

private:
    std::vector<int> e_;
};

/// Exact multivariate polynomial over Q. Parameters are ordinary variables of
/// the shared VarTable, so one core serves both Q and Q(params) coefficients.
/// Canonical form: no zero coefficients; terms keyed by descending global lex.
class Polynomial {
public:
    using TermMap = std::map<Monomial, BigRational, Monomial::LexGreater>;

    /// Contextless zero; usable as the neutral element with any table.
    Polynomial() = default;

    static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }
    static Polynomial constant(VarTablePtr table, BigRational c);
    static Polynomial variable(VarTablePtr table, std::size_t index, int power = 1);
    static Polynomial term(VarTablePtr table, Monomial m, BigRational c);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    std::size_t termCount() const { return terms_.size(); }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isUnit()); }
    /// Requires isConstant().
    BigRational constantValue() const;
    bool isOne() const { return isConstant() && !isZero() && terms_.begin()->second.isOne(); }

    /// Largest monomial under the fixed global lex order. Requires nonzero.
    const Monomial& leadingMonomial() const;
    const BigRational& leadingCoefficient() const;

    int degreeIn(std::size_t var) const;
    int totalDegree() const;
    bool usesVar(std::size_t var) const;
    /// True when no base variable occurs (constant or parameters only).
    bool isParamOnly() const;

    BigRational coefficientOf(const Monomial& m) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    Polynomial scaled(const BigRational& c) const;
    Polynomial mulMonomial(const Monomial& m, const BigRational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Formal partial derivative. `var` must index a base variable.
    Polynomial derivative(std::size_t var) const;

    /// Canonical compact text, e.g. "x^2-x*y" or "3/4*x+1". Zero prints "0".
    std::string str() const;

private:
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}
    void addTermInPlace(const Monomial& m, const BigRational& c);

    VarTablePtr table_;
    TermMap terms_;

    friend Polynomial polyPow(const Polynomial& p, int k);
};

/// p^k for k >= 0.
Polynomial polyPow(const Polynomial& p, int k);

/// Exact division; throws Error if q does not divide p exactly.
Polynomial divExact(const Polynomial& p, const Polynomial& q);

/// Positive rational c such that p/c has coprime integer coefficients.
/// Requires nonzero p.
BigRational rationalContent(const Polynomial& p);

/// p scaled to coprime integer coefficients with positive leading coefficient
/// under the global lex order. normalizedPrimitive(0) = 0.
Polynomial normalizedPrimitive(const Polynomial& p);

/// Greatest common divisor via primitive subresultant PRS, returned
/// normalized primitive with positive leading coefficient. gcd(p, 0) is the
/// normalization of p.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Least common multiple, normalized primitive-positive up to the coupled
/// integer content (lcm of the rational contents is preserved).
Polynomial lcm(const Polynomial& p, const Polynomial& q);

} // namespace weylconn
