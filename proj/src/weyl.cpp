#include "weylconn/weyl.hpp"

#include <algorithm>
#include <cassert>

namespace weylconn {

// ---------------------------------------------------------------------------
// WeylContext

WeylContextPtr WeylContext::make(std::vector<std::string> vars,
                                 std::vector<std::string> params,
                                 std::vector<BigRational> weights) {
    if (vars.empty()) throw InputError("at least one base variable is required");
    if (weights.size() != vars.size())
        throw InputError("weight vector length must equal the number of base variables");
    for (const BigRational& w : weights) {
        if (w.sign() <= 0)
            throw InputError("weights must be strictly positive to give an elimination order");
    }
    std::vector<std::string> dNames;
    dNames.reserve(vars.size());
    for (const auto& v : vars) dNames.push_back("d" + v);

    VarTablePtr table = VarTable::make(vars, params);
    for (const auto& dn : dNames) {
        if (table->indexOf(dn))
            throw InputError("name collision: '" + dn + "' is both a variable and a partial");
    }
    return WeylContextPtr(new WeylContext(std::move(table), std::move(dNames), std::move(weights)));
}

BigRational WeylContext::weightOf(const ExpVec& d) const {
    BigRational w(0);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (d[i] != 0) w += weights_[i] * BigRational(d[i]);
    }
    return w;
}

bool sameContext(const WeylContextPtr& a, const WeylContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void requireSameContext(const WeylContextPtr& a, const WeylContextPtr& b) {
    if (!sameContext(a, b)) throw ContextMismatchError("operands from different Weyl contexts");
}

// ---------------------------------------------------------------------------
// Orders

bool WeylMonomial::isUnit() const {
    auto zero = [](const ExpVec& e) {
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    };
    return zero(x) && zero(d);
}

bool WeylMonomial::divides(const WeylMonomial& o) const {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > o.x[i] || d[i] > o.d[i]) return false;
    return true;
}

int compareD(const WeylMonomial& a, const WeylMonomial& b, const WeylContext& ctx) {
    BigRational wa = ctx.weightOf(a.d), wb = ctx.weightOf(b.d);
    if (wa != wb) return wa < wb ? -1 : 1;
    for (std::size_t i = 0; i < a.d.size(); ++i)
        if (a.d[i] != b.d[i]) return a.d[i] < b.d[i] ? -1 : 1;
    for (std::size_t i = 0; i < a.x.size(); ++i)
        if (a.x[i] != b.x[i]) return a.x[i] < b.x[i] ? -1 : 1;
    return 0;
}

int compareR(const ExpVec& a, const ExpVec& b, const WeylContext& ctx) {
    BigRational wa = ctx.weightOf(a), wb = ctx.weightOf(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------------------
// WeylElement

namespace {

void validateExponents(const ExpVec& e, std::size_t n) {
    if (e.size() != n) throw Error("exponent vector has wrong length");
    for (int k : e)
        if (k < 0) throw Error("negative exponent");
}

RationalFunction promoteCoeff(const WeylContextPtr& ctx, RationalFunction c) {
    if (!c.table()) return RationalFunction::constant(ctx->table(), c.constantValue());
    if (!sameTable(c.table(), ctx->table()))
        throw ContextMismatchError("coefficient from a different variable table");
    return c;
}

} // namespace

WeylElement WeylElement::one(WeylContextPtr ctx) {
    std::size_t n = ctx->n();
    return term(std::move(ctx), WeylMonomial::unit(n), RationalFunction(1L));
}

WeylElement WeylElement::term(WeylContextPtr ctx, WeylMonomial m, RationalFunction c) {
    validateExponents(m.x, ctx->n());
    validateExponents(m.d, ctx->n());
    c = promoteCoeff(ctx, std::move(c));
    if (!c.isParamOnly())
        throw Error("scalar coefficient of a Weyl element must be free of base variables");
    WeylElement e(std::move(ctx));
    if (!c.isZero()) e.terms_.emplace(std::move(m), std::move(c));
    return e;
}

WeylElement WeylElement::variable(WeylContextPtr ctx, std::size_t i, int power) {
    if (i >= ctx->n()) throw Error("variable index out of range");
    WeylMonomial m = WeylMonomial::unit(ctx->n());
    m.x[i] = power;
    return term(std::move(ctx), std::move(m), RationalFunction(1L));
}

WeylElement WeylElement::partial(WeylContextPtr ctx, std::size_t i, int power) {
    if (i >= ctx->n()) throw Error("partial index out of range");
    WeylMonomial m = WeylMonomial::unit(ctx->n());
    m.d[i] = power;
    return term(std::move(ctx), std::move(m), RationalFunction(1L));
}

void WeylElement::addTermInPlace(const WeylMonomial& m, const RationalFunction& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    requireSameContext(a.ctx_, b.ctx_);
    WeylElement r(a);
    for (const auto& [m, c] : b.terms_) r.addTermInPlace(m, c);
    return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
    requireSameContext(a.ctx_, b.ctx_);
    WeylElement r(a);
    for (const auto& [m, c] : b.terms_) r.addTermInPlace(m, -c);
    return r;
}

WeylElement WeylElement::scaled(const RationalFunction& c) const {
    RationalFunction cc = promoteCoeff(ctx_, c);
    if (!cc.isParamOnly()) throw Error("scalar must be free of base variables");
    WeylElement r(ctx_);
    if (cc.isZero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * cc);
    return r;
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (!sameContext(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
}

std::pair<WeylMonomial, RationalFunction> WeylElement::leadingTermD() const {
    if (isZero()) throw ZeroElementError("leading term of the zero element");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (compareD(it->first, best->first, *ctx_) > 0) best = it;
    }
    return {best->first, best->second};
}

std::vector<std::pair<WeylMonomial, RationalFunction>> WeylElement::sortedTermsD() const {
    std::vector<std::pair<WeylMonomial, RationalFunction>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [this](const auto& a, const auto& b) {
        return compareD(a.first, b.first, *ctx_) > 0;
    });
    return v;
}

namespace {

// d^t x^a = sum over j <= min(t, a) of binom(t, j) * fall(a, j) * x^(a-j) d^(t-j),
// componentwise across the variables. The callback receives each term of
// x^s (d^t x^a) d^b with its scalar factor.
template <typename F>
void expandCommutation(const ExpVec& s, const ExpVec& t, const ExpVec& a, const ExpVec& b,
                       F&& emit) {
    const std::size_t n = s.size();
    ExpVec j(n, 0);
    while (true) {
        BigRational factor(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (j[i] != 0) factor *= binomial(t[i], j[i]) * fallingFactorial(a[i], j[i]);
        }
        WeylMonomial m;
        m.x.resize(n);
        m.d.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.x[i] = s[i] + a[i] - j[i];
            m.d[i] = t[i] - j[i] + b[i];
        }
        emit(std::move(m), factor);

        std::size_t i = 0;
        for (; i < n; ++i) {
            if (j[i] < std::min(t[i], a[i])) {
                ++j[i];
                break;
            }
            j[i] = 0;
        }
        if (i == n) break;
    }
}

} // namespace

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    requireSameContext(a.ctx_, b.ctx_);
    WeylElement r = WeylElement::zero(a.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            RationalFunction c = ca * cb;
            expandCommutation(ma.x, ma.d, mb.x, mb.d,
                              [&](WeylMonomial m, const BigRational& factor) {
                                  r.addTermInPlace(m, c * RationalFunction(factor));
                              });
        }
    }
    return r;
}

WeylElement mulMonomialLeft(const ExpVec& xPow, const ExpVec& dPow, const WeylElement& P) {
    WeylElement r = WeylElement::zero(P.ctx_);
    for (const auto& [m, c] : P.terms_) {
        expandCommutation(xPow, dPow, m.x, m.d,
                          [&](WeylMonomial mm, const BigRational& factor) {
                              r.addTermInPlace(mm, c * RationalFunction(factor));
                          });
    }
    return r;
}

// ---------------------------------------------------------------------------
// RationalWeylElement

RationalWeylElement RationalWeylElement::one(WeylContextPtr ctx) {
    std::size_t n = ctx->n();
    return term(std::move(ctx), ExpVec(n, 0), RationalFunction(1L));
}

RationalWeylElement RationalWeylElement::term(WeylContextPtr ctx, ExpVec d, RationalFunction c) {
    validateExponents(d, ctx->n());
    c = promoteCoeff(ctx, std::move(c));
    RationalWeylElement e(std::move(ctx));
    if (!c.isZero()) e.terms_.emplace(std::move(d), std::move(c));
    return e;
}

RationalFunction RationalWeylElement::coefficientOf(const ExpVec& d) const {
    auto it = terms_.find(d);
    if (it == terms_.end()) return RationalFunction::zero(ctx_->table());
    return it->second;
}

void RationalWeylElement::addTermInPlace(const ExpVec& d, const RationalFunction& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

RationalWeylElement RationalWeylElement::operator-() const {
    RationalWeylElement r(*this);
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
}

RationalWeylElement operator+(const RationalWeylElement& a, const RationalWeylElement& b) {
    requireSameContext(a.ctx_, b.ctx_);
    RationalWeylElement r(a);
    for (const auto& [d, c] : b.terms_) r.addTermInPlace(d, c);
    return r;
}

RationalWeylElement operator-(const RationalWeylElement& a, const RationalWeylElement& b) {
    requireSameContext(a.ctx_, b.ctx_);
    RationalWeylElement r(a);
    for (const auto& [d, c] : b.terms_) r.addTermInPlace(d, -c);
    return r;
}

RationalWeylElement RationalWeylElement::scaledLeft(const RationalFunction& c) const {
    RationalWeylElement r(ctx_);
    if (c.isZero()) return r;
    for (const auto& [d, v] : terms_) {
        RationalFunction cv = c * v;
        if (!cv.isZero()) r.terms_.emplace(d, std::move(cv));
    }
    return r;
}

bool operator==(const RationalWeylElement& a, const RationalWeylElement& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (!sameContext(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
}

std::pair<ExpVec, RationalFunction> RationalWeylElement::leadingTermR() const {
    if (isZero()) throw ZeroElementError("leading term of the zero element");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (compareR(it->first, best->first, *ctx_) > 0) best = it;
    }
    return {best->first, best->second};
}

std::vector<std::pair<ExpVec, RationalFunction>> RationalWeylElement::sortedTermsR() const {
    std::vector<std::pair<ExpVec, RationalFunction>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [this](const auto& a, const auto& b) {
        return compareR(a.first, b.first, *ctx_) > 0;
    });
    return v;
}

// ---------------------------------------------------------------------------
// Conversions

RationalWeylElement toRationalForm(const WeylElement& P) {
    RationalWeylElement r = RationalWeylElement::zero(P.context());
    const VarTablePtr& table = P.context()->table();
    for (const auto& [m, c] : P.terms()) {
        Monomial xmono(table->size());
        for (std::size_t i = 0; i < m.x.size(); ++i) xmono.exponent(i) = m.x[i];
        RationalFunction xpart(Polynomial::term(table, std::move(xmono), BigRational(1)));
        r += RationalWeylElement::term(P.context(), m.d, c * xpart);
    }
    return r;
}

namespace {

// Splits a polynomial coefficient (in x and parameters) over a parameter-only
// denominator into normally ordered terms.
void splitIntoWeylTerms(const WeylContextPtr& ctx, const Polynomial& numerator,
                        const Polynomial& denominator, const ExpVec& d, WeylElement& out) {
    const VarTablePtr& table = ctx->table();
    const std::size_t n = ctx->n();
    std::map<ExpVec, Polynomial> byX;
    for (const auto& [m, c] : numerator.terms()) {
        ExpVec alpha(n);
        Monomial paramPart(table->size());
        for (std::size_t i = 0; i < n; ++i) alpha[i] = m.exponent(i);
        for (std::size_t i = n; i < table->size(); ++i)
            paramPart.exponent(i) = m.exponent(i);
        auto [it, inserted] = byX.emplace(alpha, Polynomial::zero(table));
        it->second += Polynomial::term(table, std::move(paramPart), c);
    }
    for (auto& [alpha, paramPoly] : byX) {
        out += WeylElement::term(ctx, WeylMonomial(alpha, d),
                                 RationalFunction(std::move(paramPoly), denominator));
    }
}

} // namespace

std::optional<WeylElement> tryToWeylElement(const RationalWeylElement& P) {
    WeylElement out = WeylElement::zero(P.context());
    for (const auto& [d, c] : P.terms()) {
        if (!c.den().isParamOnly()) return std::nullopt;
        splitIntoWeylTerms(P.context(), c.num(), c.den(), d, out);
    }
    return out;
}

WeylElement clearDenominators(const RationalWeylElement& P) {
    if (P.isZero()) throw ZeroElementError("clearDenominators of the zero element");
    const VarTablePtr& table = P.context()->table();
    Polynomial l = Polynomial::constant(table, BigRational(1));
    for (const auto& [d, c] : P.terms()) l = lcm(l, c.den());

    WeylElement out = WeylElement::zero(P.context());
    Polynomial one = Polynomial::constant(table, BigRational(1));
    for (const auto& [d, c] : P.terms()) {
        Polynomial scaled = c.num() * divExact(l, c.den());
        splitIntoWeylTerms(P.context(), scaled, one, d, out);
    }

    auto [lm, lc] = out.leadingTermD();
    if (lc.num().leadingCoefficient().sign() < 0) out = -out;
    return out;
}

RationalWeylElement ratWeylMul(const RationalWeylElement& a, const RationalWeylElement& b) {
    requireSameContext(a.context(), b.context());
    const std::size_t n = a.context()->n();
    RationalWeylElement r = RationalWeylElement::zero(a.context());

    // (f d^beta)(g d^gamma) = f * sum_{j<=beta} binom(beta,j) (d^j @ g) d^(beta-j+gamma)
    for (const auto& [beta, f] : a.terms()) {
        for (const auto& [gamma, g] : b.terms()) {
            // Walk the derivative lattice depth-first so each partial
            // derivative of g is computed once per branch.
            auto walk = [&](auto&& self, std::size_t i, const RationalFunction& gcur,
                            const BigRational& factor, ExpVec& j) -> void {
                if (i == n) {
                    ExpVec d(n);
                    for (std::size_t k = 0; k < n; ++k) d[k] = beta[k] - j[k] + gamma[k];
                    r.addTermInPlace(d, f * RationalFunction(factor) * gcur);
                    return;
                }
                RationalFunction dg = gcur;
                for (int ji = 0; ji <= beta[i]; ++ji) {
                    if (ji > 0) {
                        dg = dg.derivative(i);
                        if (dg.isZero()) break;
                    }
                    j[i] = ji;
                    self(self, i + 1, dg, factor * binomial(beta[i], ji), j);
                }
                j[i] = 0;
            };
            ExpVec j(n, 0);
            walk(walk, 0, g, BigRational(1), j);
        }
    }
    return r;
}

} // namespace weylconn
