#include "weylconn/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace weylconn {

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::isUnit() const {
    return std::all_of(e_.begin(), e_.end(), [](int k) { return k == 0; });
}

int Monomial::totalDegree() const {
    int d = 0;
    for (int k : e_) d += k;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    assert(e_.size() == o.e_.size());
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotientOf(const Monomial& o) const {
    assert(divides(o));
    Monomial r(o);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
}

int Monomial::lexCompare(const Monomial& a, const Monomial& b) {
    assert(a.e_.size() == b.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Polynomial basics

Polynomial Polynomial::constant(VarTablePtr table, BigRational c) {
    Polynomial p(std::move(table));
    if (!c.isZero()) p.terms_.emplace(Monomial(p.table_ ? p.table_->size() : 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::size_t index, int power) {
    if (index >= table->size()) throw Error("variable index out of range");
    if (power < 0) throw Error("negative exponent");
    Polynomial p(std::move(table));
    Monomial m(p.table_->size());
    m.exponent(index) = power;
    p.terms_.emplace(std::move(m), BigRational(1));
    return p;
}

Polynomial Polynomial::term(VarTablePtr table, Monomial m, BigRational c) {
    Polynomial p(std::move(table));
    if (m.size() != (p.table_ ? p.table_->size() : 0))
        throw Error("monomial length does not match table");
    if (!c.isZero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

BigRational Polynomial::constantValue() const {
    if (terms_.empty()) return BigRational(0);
    assert(isConstant());
    return terms_.begin()->second;
}

const Monomial& Polynomial::leadingMonomial() const {
    if (isZero()) throw ZeroElementError("leading monomial of 0");
    return terms_.begin()->first;
}

const BigRational& Polynomial::leadingCoefficient() const {
    if (isZero()) throw ZeroElementError("leading coefficient of 0");
    return terms_.begin()->second;
}

int Polynomial::degreeIn(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

int Polynomial::totalDegree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.totalDegree());
    return d;
}

bool Polynomial::usesVar(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) > 0) return true;
    return false;
}

bool Polynomial::isParamOnly() const {
    if (!table_) return true;
    for (std::size_t i = 0; i < table_->baseCount(); ++i)
        if (usesVar(i)) return false;
    return true;
}

BigRational Polynomial::coefficientOf(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void Polynomial::addTermInPlace(const Monomial& m, const BigRational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

namespace {

// A contextless constant meeting a tabled polynomial is promoted to that
// table before its (empty) monomials are combined with sized ones.
const Polynomial& promoted(const Polynomial& p, const VarTablePtr& target, Polynomial& storage) {
    if (p.table() || !target) return p;
    storage = Polynomial::constant(target, p.constantValue());
    return storage;
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    VarTablePtr t = mergeTables(a.table_, b.table_);
    Polynomial sa, sb;
    const Polynomial& pa = promoted(a, t, sa);
    const Polynomial& pb = promoted(b, t, sb);
    Polynomial r(t);
    r.terms_ = pa.terms_;
    for (const auto& [m, c] : pb.terms_) r.addTermInPlace(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    VarTablePtr t = mergeTables(a.table_, b.table_);
    Polynomial sa, sb;
    const Polynomial& pa = promoted(a, t, sa);
    const Polynomial& pb = promoted(b, t, sb);
    Polynomial r(t);
    r.terms_ = pa.terms_;
    for (const auto& [m, c] : pb.terms_) r.addTermInPlace(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    VarTablePtr t = mergeTables(a.table_, b.table_);
    Polynomial sa, sb;
    const Polynomial& pa = promoted(a, t, sa);
    const Polynomial& pb = promoted(b, t, sb);
    Polynomial r(t);
    for (const auto& [ma, ca] : pa.terms_)
        for (const auto& [mb, cb] : pb.terms_) r.addTermInPlace(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
    Polynomial r(table_);
    if (c.isZero()) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Polynomial Polynomial::mulMonomial(const Monomial& m, const BigRational& c) const {
    Polynomial r(table_);
    if (c.isZero()) return r;
    for (const auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    if (!a.table_ || !b.table_) {
        return a.isConstant() && b.isConstant() && a.constantValue() == b.constantValue();
    }
    if (!sameTable(a.table_, b.table_)) return false;
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (!table_) return Polynomial();
    if (var >= table_->size()) throw Error("derivative: variable index out of range");
    if (table_->isParam(var)) throw Error("derivative with respect to a parameter");
    Polynomial r(table_);
    for (const auto& [m, c] : terms_) {
        int k = m.exponent(var);
        if (k == 0) continue;
        Monomial dm(m);
        dm.exponent(var) = k - 1;
        r.addTermInPlace(dm, c * BigRational(k));
    }
    return r;
}

Polynomial polyPow(const Polynomial& p, int k) {
    if (k < 0) throw Error("negative power of a polynomial");
    if (!p.table()) {
        if (k == 0) throw Error("power of a contextless zero polynomial");
        return Polynomial();
    }
    Polynomial r = Polynomial::constant(p.table(), BigRational(1));
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string monomialStr(const Monomial& m, const VarTable* table) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        int k = m.exponent(i);
        if (k == 0) continue;
        if (!first) os << '*';
        first = false;
        os << table->name(i);
        if (k != 1) os << '^' << k;
    }
    return os.str();
}

} // namespace

std::string Polynomial::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigRational a = c;
        if (first) {
            first = false;
        } else if (a.sign() < 0) {
            os << '-';
            a = -a;
        } else {
            os << '+';
        }
        std::string ms = monomialStr(m, table_.get());
        if (ms.empty()) {
            os << a.str();
        } else if (a.isOne()) {
            os << ms;
        } else if (a == BigRational(-1)) {
            os << '-' << ms;
        } else {
            os << a.str() << '*' << ms;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact division, content, gcd

Polynomial divExact(const Polynomial& p, const Polynomial& q) {
    if (q.isZero()) throw DivisionByZeroError("exact division by zero polynomial");
    VarTablePtr table = mergeTables(p.table(), q.table());
    Polynomial sp, sq;
    const Polynomial& pp = promoted(p, table, sp);
    const Polynomial& qq = promoted(q, table, sq);
    Polynomial quotient = Polynomial::zero(table);
    Polynomial rem = pp;
    const Monomial& lq = qq.leadingMonomial();
    const BigRational& cq = qq.leadingCoefficient();
    while (!rem.isZero()) {
        const Monomial& lr = rem.leadingMonomial();
        if (!lq.divides(lr)) throw Error("polynomial division is not exact");
        Monomial t = lq.quotientOf(lr);
        BigRational c = rem.leadingCoefficient() / cq;
        quotient += Polynomial::term(table, t, c);
        rem -= qq.mulMonomial(t, c);
    }
    return quotient;
}

BigRational rationalContent(const Polynomial& p) {
    if (p.isZero()) throw ZeroElementError("content of 0");
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : p.terms()) {
        g = integerGcd(g, c.numerator());
        l = integerLcm(l, c.denominator());
    }
    return BigRational(g, l);
}

Polynomial normalizedPrimitive(const Polynomial& p) {
    if (p.isZero()) return p;
    BigRational c = rationalContent(p);
    if (p.leadingCoefficient().sign() < 0) c = -c;
    return p.scaled(c.inv());
}

namespace {

// p viewed as a univariate polynomial in variable v; index = degree in v,
// coefficients are polynomials with the v-exponent stripped.
std::vector<Polynomial> univariateCoeffs(const Polynomial& p, std::size_t v) {
    std::vector<Polynomial> cs(static_cast<std::size_t>(p.degreeIn(v)) + 1,
                               Polynomial::zero(p.table()));
    for (const auto& [m, c] : p.terms()) {
        Monomial stripped(m);
        int k = stripped.exponent(v);
        stripped.exponent(v) = 0;
        cs[static_cast<std::size_t>(k)] += Polynomial::term(p.table(), stripped, c);
    }
    return cs;
}

Polynomial leadCoeffIn(const Polynomial& p, std::size_t v) {
    int d = p.degreeIn(v);
    Polynomial r = Polynomial::zero(p.table());
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(v) != d) continue;
        Monomial stripped(m);
        stripped.exponent(v) = 0;
        r += Polynomial::term(p.table(), stripped, c);
    }
    return r;
}

Polynomial mulByVarPower(const Polynomial& p, std::size_t v, int k) {
    Monomial m(p.table()->size());
    m.exponent(v) = k;
    return p.mulMonomial(m, BigRational(1));
}

// Pseudo-remainder of a by b in variable v: lc_v(b)^(da-db+1) * a = q*b + R.
Polynomial prem(const Polynomial& a, const Polynomial& b, std::size_t v) {
    const int db = b.degreeIn(v);
    Polynomial lcb = leadCoeffIn(b, v);
    Polynomial r = a;
    int e = a.degreeIn(v) - db + 1;
    while (!r.isZero() && r.degreeIn(v) >= db) {
        int dr = r.degreeIn(v);
        Polynomial lcr = leadCoeffIn(r, v);
        r = lcb * r - mulByVarPower(lcr, v, dr - db) * b;
        --e;
    }
    for (; e > 0; --e) r = lcb * r;
    return r;
}

Polynomial contentIn(const Polynomial& p, std::size_t v) {
    Polynomial c = Polynomial::zero(p.table());
    for (const Polynomial& coeff : univariateCoeffs(p, v)) {
        if (coeff.isZero()) continue;
        c = gcd(c, coeff);
        if (c.isOne()) break;
    }
    return c;
}

// Image of p in Q[v] under substituting fixed rationals for all other
// variables, as dense coefficients indexed by the v-degree.
std::vector<BigRational> univariateImage(const Polynomial& p, std::size_t v,
                                         const std::vector<BigRational>& points) {
    std::vector<BigRational> out(static_cast<std::size_t>(p.degreeIn(v)) + 1, BigRational(0));
    for (const auto& [m, c] : p.terms()) {
        BigRational val = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == v) continue;
            for (int k = 0; k < m.exponent(i); ++k) val *= points[i];
        }
        out[static_cast<std::size_t>(m.exponent(v))] += val;
    }
    return out;
}

int univariateGcdDegree(std::vector<BigRational> a, std::vector<BigRational> b) {
    auto deg = [](const std::vector<BigRational>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<std::size_t>(d)].isZero()) --d;
        return d;
    };
    int da = deg(a), db = deg(b);
    while (db >= 0) {
        // a mod b
        for (int k = da; k >= db; --k) {
            BigRational q = a[static_cast<std::size_t>(k)] / b[static_cast<std::size_t>(db)];
            if (q.isZero()) continue;
            for (int j = 0; j <= db; ++j)
                a[static_cast<std::size_t>(k - db + j)] -= q * b[static_cast<std::size_t>(j)];
        }
        std::swap(a, b);
        da = db;
        db = deg(b);
    }
    return deg(a);
}

// Sound coprimality certificate: if the substituted images keep both leading
// coefficients alive and have a constant gcd, the primitive parts share no
// factor involving v (the image of any common divisor divides the image gcd).
bool provedCoprime(const Polynomial& a, const Polynomial& b, std::size_t v) {
    const std::size_t nvars = a.table()->size();
    for (long attempt = 1; attempt <= 3; ++attempt) {
        std::vector<BigRational> points;
        points.reserve(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            points.emplace_back(2 * static_cast<long>(i) + attempt + 1);
        std::vector<BigRational> ua = univariateImage(a, v, points);
        std::vector<BigRational> ub = univariateImage(b, v, points);
        if (ua.back().isZero() || ub.back().isZero()) continue;
        if (univariateGcdDegree(std::move(ua), std::move(ub)) == 0) return true;
        return false;
    }
    return false;
}

// Subresultant PRS on polynomials primitive with respect to v.
Polynomial gcdPrimitiveParts(Polynomial f1, Polynomial f2, std::size_t v) {
    if (f1.degreeIn(v) < f2.degreeIn(v)) std::swap(f1, f2);
    Polynomial g = Polynomial::constant(f1.table(), BigRational(1));
    Polynomial h = g;
    while (true) {
        int delta = f1.degreeIn(v) - f2.degreeIn(v);
        Polynomial r = prem(f1, f2, v);
        if (r.isZero()) break;
        if (r.degreeIn(v) == 0) return Polynomial::constant(f1.table(), BigRational(1));
        f1 = f2;
        f2 = divExact(r, g * polyPow(h, delta));
        g = leadCoeffIn(f1, v);
        if (delta > 0) h = divExact(polyPow(g, delta), polyPow(h, delta - 1));
    }
    return normalizedPrimitive(divExact(f2, contentIn(f2, v)));
}

} // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    VarTablePtr table = mergeTables(p.table(), q.table());
    if (p.isZero()) return normalizedPrimitive(q);
    if (q.isZero()) return normalizedPrimitive(p);
    if (p.isConstant() || q.isConstant()) return Polynomial::constant(table, BigRational(1));

    // Smallest active variable; coefficients of the univariate view then only
    // involve larger indices, so the recursion is well-founded.
    std::size_t v = 0;
    while (v < table->size() && !p.usesVar(v) && !q.usesVar(v)) ++v;
    assert(v < table->size());

    if (p.degreeIn(v) == 0) return gcd(p, contentIn(q, v));
    if (q.degreeIn(v) == 0) return gcd(q, contentIn(p, v));

    if (provedCoprime(p, q, v)) {
        // Only a factor free of v can remain; it divides both contents.
        return gcd(contentIn(p, v), contentIn(q, v));
    }

    Polynomial contP = contentIn(p, v);
    Polynomial contQ = contentIn(q, v);
    Polynomial c = gcd(contP, contQ);
    Polynomial ppP = normalizedPrimitive(divExact(p, contP));
    Polynomial ppQ = normalizedPrimitive(divExact(q, contQ));
    return normalizedPrimitive(c * gcdPrimitiveParts(ppP, ppQ, v));
}

Polynomial lcm(const Polynomial& p, const Polynomial& q) {
    if (p.isZero() || q.isZero()) throw ZeroElementError("lcm with zero polynomial");
    BigRational cp = rationalContent(p), cq = rationalContent(q);
    Polynomial pp = normalizedPrimitive(p), qq = normalizedPrimitive(q);
    Polynomial l = divExact(pp * qq, gcd(pp, qq));
    return normalizedPrimitive(l).scaled(rationalLcm(cp, cq));
}

} // namespace weylconn
