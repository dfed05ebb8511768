#include "weylconn/rational_function.hpp"

#include <sstream>

namespace weylconn {

RationalFunction::RationalFunction()
    : num_(Polynomial::constant(nullptr, BigRational(0))),
      den_(Polynomial::constant(nullptr, BigRational(1))) {}

RationalFunction::RationalFunction(long v)
    : num_(Polynomial::constant(nullptr, BigRational(v))),
      den_(Polynomial::constant(nullptr, BigRational(1))) {}

RationalFunction::RationalFunction(BigRational c)
    : num_(Polynomial::constant(nullptr, BigRational(c.numerator(), mpz_class(1)))),
      den_(Polynomial::constant(nullptr, BigRational(c.denominator(), mpz_class(1)))) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)),
      den_(Polynomial::constant(num_.table(), BigRational(1))) {
    normalizeContentAndSign();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw DivisionByZeroError("zero denominator polynomial");
    reduce();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, AlreadyCoprime)
    : num_(std::move(num)), den_(std::move(den)) {
    normalizeContentAndSign();
}

// Canonical form: cancel the polynomial gcd, then couple the integer
// contents so both sides carry integer coefficients with nothing in common,
// with the denominator's leading coefficient positive.
void RationalFunction::reduce() {
    if (!num_.isZero() && !den_.isConstant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.isOne()) {
            num_ = divExact(num_, g);
            den_ = divExact(den_, g);
        }
    }
    normalizeContentAndSign();
}

void RationalFunction::normalizeContentAndSign() {
    VarTablePtr table = mergeTables(num_.table(), den_.table());
    if (num_.isZero()) {
        num_ = Polynomial::zero(table);
        den_ = Polynomial::constant(table, BigRational(1));
        return;
    }
    BigRational cn = rationalContent(num_);
    if (num_.leadingCoefficient().sign() < 0) cn = -cn;
    BigRational cd = rationalContent(den_);
    if (den_.leadingCoefficient().sign() < 0) cd = -cd;
    Polynomial np = num_.scaled(cn.inv());
    Polynomial dp = den_.scaled(cd.inv());
    BigRational ratio = cn / cd;  // num/den == ratio * np/dp
    num_ = np.scaled(BigRational(ratio.numerator(), mpz_class(1)));
    den_ = dp.scaled(BigRational(ratio.denominator(), mpz_class(1)));
    if (table && !num_.table()) num_ = Polynomial::constant(table, num_.constantValue());
    if (table && !den_.table()) den_ = Polynomial::constant(table, den_.constantValue());
}

BigRational RationalFunction::constantValue() const {
    return num_.constantValue() / den_.constantValue();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inv() const {
    if (isZero()) throw DivisionByZeroError("inverse of the zero rational function");
    return RationalFunction(den_, num_, AlreadyCoprime{});
}

// Henrici addition: cancel against the denominator gcd only, so the expensive
// gcd never sees the full product denominator.
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    Polynomial g = gcd(a.den_, b.den_);
    if (g.isOne()) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                                RationalFunction::AlreadyCoprime{});
    }
    Polynomial da = divExact(a.den_, g);
    Polynomial db = divExact(b.den_, g);
    Polynomial t = a.num_ * db + b.num_ * da;
    if (t.isZero()) return RationalFunction::zero(mergeTables(a.table(), b.table()));
    Polynomial g2 = gcd(t, g);
    return RationalFunction(g2.isOne() ? std::move(t) : divExact(t, g2),
                            divExact(g, g2) * da * db,
                            RationalFunction::AlreadyCoprime{});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.isZero() || b.isZero())
        return RationalFunction::zero(mergeTables(a.table(), b.table()));
    // Cross-cancelling leaves the four factors pairwise coprime.
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    return RationalFunction(divExact(a.num_, g1) * divExact(b.num_, g2),
                            divExact(a.den_, g2) * divExact(b.den_, g1),
                            RationalFunction::AlreadyCoprime{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inv();
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    if (isZero()) return *this;
    return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                            den_ * den_);
}

namespace {

bool isSinglePositiveTerm(const Polynomial& p) {
    return p.termCount() == 1 && p.leadingCoefficient().sign() > 0;
}

// A bare variable power ("x", "x^2"), optionally times 1.
bool isBareVarPower(const Polynomial& p) {
    if (p.termCount() != 1 || !p.leadingCoefficient().isOne()) return false;
    const Monomial& m = p.leadingMonomial();
    int active = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.exponent(i) > 0) ++active;
    return active == 1;
}

} // namespace

std::string RationalFunction::str() const {
    if (isZero()) return "0";
    if (den_.isOne()) return num_.str();
    std::ostringstream os;
    if (isSinglePositiveTerm(num_)) os << num_.str();
    else os << '(' << num_.str() << ')';
    os << '/';
    if (isBareVarPower(den_)) os << den_.str();
    else os << '(' << den_.str() << ')';
    return os.str();
}

} // namespace weylconn
