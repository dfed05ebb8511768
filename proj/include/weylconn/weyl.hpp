#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "weylconn/rational_function.hpp"

namespace weylconn {

/// Exponent vector over the base variables (length n).
using ExpVec = std::vector<int>;

class WeylContext;
using WeylContextPtr = std::shared_ptr<const WeylContext>;

/// The ambient algebra: base variables x_i with partials d<x_i>, optional
/// parameters, and a strictly positive weight per partial. The weight vector
/// induces the elimination order used everywhere downstream: weights first
/// (x's weigh zero), ties broken lexicographically with
/// d_1 > ... > d_n > x_1 > ... > x_n.
class WeylContext {
public:
    static WeylContextPtr make(std::vector<std::string> vars,
                               std::vector<std::string> params,
                               std::vector<BigRational> weights);

    std::size_t n() const { return weights_.size(); }
    const VarTablePtr& table() const { return table_; }
    const std::string& varName(std::size_t i) const { return table_->name(i); }
    const std::string& dName(std::size_t i) const { return dNames_.at(i); }
    const std::string& paramName(std::size_t j) const { return table_->name(n() + j); }
    std::size_t paramCount() const { return table_->paramCount(); }
    const std::vector<BigRational>& weights() const { return weights_; }

    BigRational weightOf(const ExpVec& d) const;

    friend bool operator==(const WeylContext& a, const WeylContext& b) {
        return *a.table_ == *b.table_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const WeylContext& a, const WeylContext& b) { return !(a == b); }

private:
    WeylContext(VarTablePtr table, std::vector<std::string> dNames, std::vector<BigRational> weights)
        : table_(std::move(table)), dNames_(std::move(dNames)), weights_(std::move(weights)) {}

    VarTablePtr table_;
    std::vector<std::string> dNames_;
    std::vector<BigRational> weights_;
};

bool sameContext(const WeylContextPtr& a, const WeylContextPtr& b);
void requireSameContext(const WeylContextPtr& a, const WeylContextPtr& b);

/// Monomial x^alpha d^beta of the normally ordered form.
struct WeylMonomial {
    ExpVec x;
    ExpVec d;

    WeylMonomial() = default;
    WeylMonomial(ExpVec xExp, ExpVec dExp) : x(std::move(xExp)), d(std::move(dExp)) {}
    static WeylMonomial unit(std::size_t n) { return WeylMonomial(ExpVec(n, 0), ExpVec(n, 0)); }

    bool isUnit() const;
    bool divides(const WeylMonomial& o) const;

    friend bool operator==(const WeylMonomial& a, const WeylMonomial& b) {
        return a.x == b.x && a.d == b.d;
    }
    friend bool operator!=(const WeylMonomial& a, const WeylMonomial& b) { return !(a == b); }

    /// Context-free storage order for canonical term maps.
    struct StoreLess {
        bool operator()(const WeylMonomial& a, const WeylMonomial& b) const {
            if (a.d != b.d) return a.d < b.d;
            return a.x < b.x;
        }
    };
};

/// Order on D-monomials: weight of the d-part first, then the lexicographic
/// tiebreak d_1 > ... > d_n > x_1 > ... > x_n. Returns -1, 0 or 1.
int compareD(const WeylMonomial& a, const WeylMonomial& b, const WeylContext& ctx);

/// Restriction to d-monomials: weight first, then lex on d_1 > ... > d_n.
int compareR(const ExpVec& a, const ExpVec& b, const WeylContext& ctx);

/// Element of the Weyl algebra in its unique normally ordered form: a finite
/// sum of terms c * x^alpha d^beta with scalar coefficients from the
/// parameter field (rational functions free of base variables).
class WeylElement {
public:
    using TermMap = std::map<WeylMonomial, RationalFunction, WeylMonomial::StoreLess>;

    static WeylElement zero(WeylContextPtr ctx) { return WeylElement(std::move(ctx)); }
    static WeylElement one(WeylContextPtr ctx);
    static WeylElement term(WeylContextPtr ctx, WeylMonomial m, RationalFunction c);
    static WeylElement variable(WeylContextPtr ctx, std::size_t i, int power = 1);
    static WeylElement partial(WeylContextPtr ctx, std::size_t i, int power = 1);

    const WeylContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    WeylElement operator-() const;
    friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
    /// Normally ordered noncommutative product.
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    WeylElement& operator+=(const WeylElement& o) { *this = *this + o; return *this; }
    WeylElement& operator-=(const WeylElement& o) { *this = *this - o; return *this; }
    WeylElement& operator*=(const WeylElement& o) { *this = *this * o; return *this; }

    /// Scales every coefficient by a parameter-field scalar.
    WeylElement scaled(const RationalFunction& c) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b);
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    /// Largest monomial with its coefficient. Requires nonzero.
    std::pair<WeylMonomial, RationalFunction> leadingTermD() const;
    WeylMonomial initMonomialD() const { return leadingTermD().first; }

    /// Terms sorted descending under compareD (for display).
    std::vector<std::pair<WeylMonomial, RationalFunction>> sortedTermsD() const;

private:
    explicit WeylElement(WeylContextPtr ctx) : ctx_(std::move(ctx)) {}
    void addTermInPlace(const WeylMonomial& m, const RationalFunction& c);

    WeylContextPtr ctx_;
    TermMap terms_;

    friend WeylElement mulMonomialLeft(const ExpVec& xPow, const ExpVec& dPow,
                                       const WeylElement& P);
};

/// x^s d^t * P, the hot path of the reduction loops.
WeylElement mulMonomialLeft(const ExpVec& xPow, const ExpVec& dPow, const WeylElement& P);

/// Element of the rational Weyl algebra in standard form: coefficients are
/// rational functions of the base variables (and parameters).
class RationalWeylElement {
public:
    using TermMap = std::map<ExpVec, RationalFunction>;

    static RationalWeylElement zero(WeylContextPtr ctx) { return RationalWeylElement(std::move(ctx)); }
    static RationalWeylElement one(WeylContextPtr ctx);
    static RationalWeylElement term(WeylContextPtr ctx, ExpVec d, RationalFunction c);

    const WeylContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    RationalFunction coefficientOf(const ExpVec& d) const;

    RationalWeylElement operator-() const;
    friend RationalWeylElement operator+(const RationalWeylElement& a, const RationalWeylElement& b);
    friend RationalWeylElement operator-(const RationalWeylElement& a, const RationalWeylElement& b);
    RationalWeylElement& operator+=(const RationalWeylElement& o) { *this = *this + o; return *this; }
    RationalWeylElement& operator-=(const RationalWeylElement& o) { *this = *this - o; return *this; }

    /// Left multiplication by a rational function (scales coefficients).
    RationalWeylElement scaledLeft(const RationalFunction& c) const;

    friend bool operator==(const RationalWeylElement& a, const RationalWeylElement& b);
    friend bool operator!=(const RationalWeylElement& a, const RationalWeylElement& b) {
        return !(a == b);
    }

    /// Largest d-monomial with its full rational-function coefficient.
    /// Requires nonzero.
    std::pair<ExpVec, RationalFunction> leadingTermR() const;
    ExpVec initExponentR() const { return leadingTermR().first; }

    std::vector<std::pair<ExpVec, RationalFunction>> sortedTermsR() const;

private:
    explicit RationalWeylElement(WeylContextPtr ctx) : ctx_(std::move(ctx)) {}
    void addTermInPlace(const ExpVec& d, const RationalFunction& c);

    WeylContextPtr ctx_;
    TermMap terms_;

    friend RationalWeylElement ratWeylMul(const RationalWeylElement& a,
                                          const RationalWeylElement& b);
};

/// Groups the normally ordered terms by d-exponent, collecting the x-parts
/// into rational-function coefficients.
RationalWeylElement toRationalForm(const WeylElement& P);

/// Exact conversion back to the Weyl algebra; empty when some coefficient
/// denominator involves a base variable.
std::optional<WeylElement> tryToWeylElement(const RationalWeylElement& P);

/// Multiplies P on the left by the least common multiple of its coefficient
/// denominators, yielding a Weyl algebra element generating the same left
/// ideal. The result is sign-normalized to a positive leading coefficient.
/// Requires nonzero input.
WeylElement clearDenominators(const RationalWeylElement& P);

/// General noncommutative product in the rational Weyl algebra (Leibniz rule
/// with rational-function derivatives).
RationalWeylElement ratWeylMul(const RationalWeylElement& a, const RationalWeylElement& b);

} // namespace weylconn
