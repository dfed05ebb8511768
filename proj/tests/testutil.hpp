#pragma once

#include <random>
#include <vector>

#include "weylconn/polynomial.hpp"
#include "weylconn/rational_function.hpp"

namespace weylconn::testutil {

inline VarTablePtr xyTable() {
    static VarTablePtr t = VarTable::make({"x", "y"});
    return t;
}

inline VarTablePtr xyEpsTable() {
    static VarTablePtr t = VarTable::make({"x", "y"}, {"eps"});
    return t;
}

inline Polynomial var(const VarTablePtr& t, std::size_t i, int pow = 1) {
    return Polynomial::variable(t, i, pow);
}

inline Polynomial con(const VarTablePtr& t, long c) {
    return Polynomial::constant(t, BigRational(c));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int intIn(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    BigRational rational(int bound = 9) {
        int n = intIn(-bound, bound);
        int d = intIn(1, bound);
        return BigRational(n, d);
    }

    BigRational nonzeroRational(int bound = 9) {
        BigRational q = rational(bound);
        return q.isZero() ? BigRational(1) : q;
    }

    Polynomial polynomial(const VarTablePtr& t, int maxTerms = 4, int maxDeg = 3, int coeffBound = 9) {
        Polynomial p = Polynomial::zero(t);
        int terms = intIn(0, maxTerms);
        for (int k = 0; k < terms; ++k) {
            Monomial m(t->size());
            for (std::size_t i = 0; i < t->size(); ++i) m.exponent(i) = intIn(0, maxDeg);
            p += Polynomial::term(t, m, rational(coeffBound));
        }
        return p;
    }

    Polynomial nonzeroPolynomial(const VarTablePtr& t, int maxTerms = 4, int maxDeg = 3) {
        Polynomial p = polynomial(t, maxTerms, maxDeg);
        if (p.isZero()) p = con(t, 1) + var(t, 0);
        return p;
    }

    RationalFunction rationalFunction(const VarTablePtr& t, int maxTerms = 3, int maxDeg = 2) {
        return RationalFunction(polynomial(t, maxTerms, maxDeg),
                                nonzeroPolynomial(t, maxTerms, maxDeg));
    }

    RationalFunction nonzeroRationalFunction(const VarTablePtr& t, int maxTerms = 3, int maxDeg = 2) {
        RationalFunction r = rationalFunction(t, maxTerms, maxDeg);
        if (r.isZero()) return RationalFunction(con(t, 1) + var(t, 0));
        return r;
    }

    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

} // namespace weylconn::testutil
