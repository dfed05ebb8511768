#include <doctest.h>

#include "testutil.hpp"
#include "weylconn/weyl.hpp"

using namespace weylconn;
using namespace weylconn::testutil;

namespace {

WeylContextPtr ctx21() {
    static WeylContextPtr c = WeylContext::make({"x", "y"}, {}, {BigRational(2), BigRational(1)});
    return c;
}

WeylContextPtr ctx11() {
    static WeylContextPtr c = WeylContext::make({"x", "y"}, {}, {BigRational(1), BigRational(1)});
    return c;
}

// x*dx^2 - y*dy^2 + dx - dy and x*dx + y*dy + 1
WeylElement gen1(const WeylContextPtr& c) {
    return WeylElement::variable(c, 0) * WeylElement::partial(c, 0, 2) -
           WeylElement::variable(c, 1) * WeylElement::partial(c, 1, 2) +
           WeylElement::partial(c, 0) - WeylElement::partial(c, 1);
}

WeylElement gen2(const WeylContextPtr& c) {
    return WeylElement::variable(c, 0) * WeylElement::partial(c, 0) +
           WeylElement::variable(c, 1) * WeylElement::partial(c, 1) + WeylElement::one(c);
}

WeylElement randomWeyl(Rng& rng, const WeylContextPtr& c, int maxTerms = 3, int maxDeg = 2) {
    WeylElement e = WeylElement::zero(c);
    int terms = rng.intIn(1, maxTerms);
    for (int t = 0; t < terms; ++t) {
        WeylMonomial m = WeylMonomial::unit(c->n());
        for (std::size_t i = 0; i < c->n(); ++i) {
            m.x[i] = rng.intIn(0, maxDeg);
            m.d[i] = rng.intIn(0, maxDeg);
        }
        e += WeylElement::term(c, m, RationalFunction(rng.rational(5)));
    }
    return e;
}

} // namespace

TEST_CASE("context construction validates weights and names") {
    CHECK_THROWS_AS(WeylContext::make({"x"}, {}, {BigRational(0)}), InputError);
    CHECK_THROWS_AS(WeylContext::make({"x"}, {}, {BigRational(-1)}), InputError);
    CHECK_THROWS_AS(WeylContext::make({"x", "y"}, {}, {BigRational(1)}), InputError);
    CHECK_THROWS_AS(WeylContext::make({"x", "dx"}, {}, {BigRational(1), BigRational(1)}),
                    InputError);
    auto c = WeylContext::make({"x"}, {"eps"}, {BigRational(1)});
    CHECK(c->dName(0) == "dx");
    CHECK(c->paramName(0) == "eps");
}

TEST_CASE("the commutator of a partial with its variable is one") {
    auto c = ctx21();
    WeylElement x = WeylElement::variable(c, 0);
    WeylElement dx = WeylElement::partial(c, 0);

    CHECK(dx * x == x * dx + WeylElement::one(c));
    CHECK(dx * dx * x == x * WeylElement::partial(c, 0, 2) + dx.scaled(RationalFunction(2L)));
    CHECK(WeylElement::one(c) * gen1(c) == gen1(c));

    WeylElement y = WeylElement::variable(c, 1);
    WeylElement dy = WeylElement::partial(c, 1);
    CHECK(dx * y == y * dx);
    CHECK(dy * x == x * dy);
}

TEST_CASE("weyl multiplication is associative on random triples") {
    Rng rng(101);
    auto c = ctx21();
    for (int i = 0; i < 15; ++i) {
        WeylElement p = randomWeyl(rng, c), q = randomWeyl(rng, c), r = randomWeyl(rng, c);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("order on D-monomials: weights first, lex tiebreak") {
    auto c = ctx21();
    // x*y*dy^2 vs y^2*dy^2: equal weight, x breaks the tie
    WeylMonomial a({1, 1}, {0, 2});
    WeylMonomial b({0, 2}, {0, 2});
    CHECK(compareD(a, b, *c) > 0);
    // 1 is minimal
    CHECK(compareD(WeylMonomial::unit(2), a, *c) < 0);
    // dx vs dy under v=(2,1): weights 2 vs 1
    CHECK(compareD(WeylMonomial({0, 0}, {1, 0}), WeylMonomial({0, 0}, {0, 1}), *c) > 0);
    // multiplicativity on a sample
    WeylMonomial shift({1, 0}, {1, 1});
    WeylMonomial as(shift), bs(shift);
    for (int i = 0; i < 2; ++i) {
        as.x[i] += a.x[i]; as.d[i] += a.d[i];
        bs.x[i] += b.x[i]; bs.d[i] += b.d[i];
    }
    CHECK(compareD(as, bs, *c) > 0);
}

TEST_CASE("order on R-monomials") {
    auto c = ctx21();
    CHECK(compareR({0, 2}, {1, 1}, *c) < 0);  // weight 2 vs 3
    CHECK(compareR({0, 0}, {0, 1}, *c) < 0);  // 1 minimal
    auto c11 = ctx11();
    CHECK(compareR({1, 0}, {0, 1}, *c11) > 0);  // equal weight, dx > dy
}

TEST_CASE("compareD on pure d-monomials agrees with compareR") {
    Rng rng(55);
    auto c = ctx21();
    for (int i = 0; i < 40; ++i) {
        ExpVec b1{rng.intIn(0, 3), rng.intIn(0, 3)};
        ExpVec b2{rng.intIn(0, 3), rng.intIn(0, 3)};
        int lhs = compareD(WeylMonomial({0, 0}, b1), WeylMonomial({0, 0}, b2), *c);
        CHECK(lhs == compareR(b1, b2, *c));
    }
}

TEST_CASE("leading term in the D-algebra view") {
    auto c = ctx21();
    // x*y*dy^2 - y^2*dy^2 + x*dy - 3*y*dy - 1
    WeylElement g3 =
        WeylElement::term(c, WeylMonomial({1, 1}, {0, 2}), RationalFunction(1L)) -
        WeylElement::term(c, WeylMonomial({0, 2}, {0, 2}), RationalFunction(1L)) +
        WeylElement::term(c, WeylMonomial({1, 0}, {0, 1}), RationalFunction(1L)) -
        WeylElement::term(c, WeylMonomial({0, 1}, {0, 1}), RationalFunction(3L)) -
        WeylElement::one(c);
    CHECK(g3.initMonomialD() == WeylMonomial({1, 1}, {0, 2}));

    WeylElement e = gen2(c);
    CHECK(e.initMonomialD() == WeylMonomial({1, 0}, {1, 0}));

    WeylElement single = WeylElement::term(c, WeylMonomial({2, 0}, {0, 1}), RationalFunction(5L));
    CHECK(single.initMonomialD() == WeylMonomial({2, 0}, {0, 1}));

    CHECK_THROWS_AS(WeylElement::zero(c).leadingTermD(), ZeroElementError);
}

TEST_CASE("initial monomials are multiplicative") {
    Rng rng(77);
    auto c = ctx21();
    for (int i = 0; i < 20; ++i) {
        WeylElement p = randomWeyl(rng, c), q = randomWeyl(rng, c);
        if (p.isZero() || q.isZero()) continue;
        WeylMonomial ip = p.initMonomialD(), iq = q.initMonomialD();
        WeylMonomial prod;
        prod.x.resize(2);
        prod.d.resize(2);
        for (int k = 0; k < 2; ++k) {
            prod.x[k] = ip.x[k] + iq.x[k];
            prod.d[k] = ip.d[k] + iq.d[k];
        }
        CHECK((p * q).initMonomialD() == prod);
    }
}

TEST_CASE("rational form groups terms by d-exponent") {
    auto c = ctx21();
    auto t = c->table();
    Polynomial x = Polynomial::variable(t, 0), y = Polynomial::variable(t, 1);

    WeylElement g3 =
        WeylElement::term(c, WeylMonomial({1, 1}, {0, 2}), RationalFunction(1L)) -
        WeylElement::term(c, WeylMonomial({0, 2}, {0, 2}), RationalFunction(1L)) +
        WeylElement::term(c, WeylMonomial({1, 0}, {0, 1}), RationalFunction(1L)) -
        WeylElement::term(c, WeylMonomial({0, 1}, {0, 1}), RationalFunction(3L)) -
        WeylElement::one(c);
    RationalWeylElement r = toRationalForm(g3);
    auto [beta, lc] = r.leadingTermR();
    CHECK(beta == ExpVec{0, 2});
    CHECK(lc == RationalFunction((x - y) * y));

    // an element that is already a single d-monomial stays put
    RationalWeylElement d2 = toRationalForm(WeylElement::partial(c, 1, 2));
    CHECK(d2 == RationalWeylElement::term(c, {0, 2}, RationalFunction(1L)));

    // x*dx^2 - y*dy^2 + dx - dy: leading term x*dx^2
    auto [b2, c2] = toRationalForm(gen1(c)).leadingTermR();
    CHECK(b2 == ExpVec{2, 0});
    CHECK(c2 == RationalFunction(x));
}

TEST_CASE("clearing denominators recovers a D-element generating the same ideal") {
    auto c = ctx21();
    auto t = c->table();
    Polynomial x = Polynomial::variable(t, 0), y = Polynomial::variable(t, 1);

    // (-y/x)dy - 1/x  ->  y*dy + 1 after multiplying by -x
    RationalWeylElement p =
        RationalWeylElement::term(c, {0, 1}, RationalFunction(-y, x)) +
        RationalWeylElement::term(c, {0, 0}, RationalFunction(Polynomial::constant(t, BigRational(-1)), x));
    WeylElement cleared = clearDenominators(p);
    WeylElement expect = WeylElement::variable(c, 1) * WeylElement::partial(c, 1) + WeylElement::one(c);
    CHECK(cleared == expect);

    // integer-coefficient input is unchanged
    CHECK(clearDenominators(toRationalForm(gen2(c))) == gen2(c));

    // lcm of distinct denominators
    RationalWeylElement q =
        RationalWeylElement::term(c, {1, 0}, RationalFunction(Polynomial::constant(t, BigRational(1)), x - y)) +
        RationalWeylElement::term(c, {0, 1}, RationalFunction(Polynomial::constant(t, BigRational(1)), y));
    WeylElement qc = clearDenominators(q);
    WeylElement qe = WeylElement::term(c, WeylMonomial({0, 1}, {1, 0}), RationalFunction(1L)) +
                     WeylElement::term(c, WeylMonomial({1, 0}, {0, 1}), RationalFunction(1L)) -
                     WeylElement::term(c, WeylMonomial({0, 1}, {0, 1}), RationalFunction(1L));
    CHECK(qc == qe);
}

TEST_CASE("round trip through the rational form multiplies by a polynomial only") {
    Rng rng(99);
    auto c = ctx21();
    for (int i = 0; i < 15; ++i) {
        WeylElement p = randomWeyl(rng, c);
        if (p.isZero()) continue;
        RationalWeylElement r = toRationalForm(p);
        WeylElement back = clearDenominators(r);
        auto converted = tryToWeylElement(r);
        REQUIRE(converted.has_value());
        CHECK(*converted == p);
        // back equals c * p for the scalar matching the leading coefficients
        RationalFunction c = back.leadingTermD().second / p.leadingTermD().second;
        CHECK(back == p.scaled(c));
    }
}

TEST_CASE("general product in the rational Weyl algebra applies the Leibniz rule") {
    auto c = ctx21();
    auto t = c->table();
    Polynomial x = Polynomial::variable(t, 0);
    RationalFunction invx(Polynomial::constant(t, BigRational(1)), x);

    // dx * (1/x) = (1/x) dx - 1/x^2
    RationalWeylElement dx = toRationalForm(WeylElement::partial(c, 0));
    RationalWeylElement f = RationalWeylElement::term(c, {0, 0}, invx);
    RationalWeylElement prod = ratWeylMul(dx, f);
    RationalWeylElement expect =
        RationalWeylElement::term(c, {1, 0}, invx) +
        RationalWeylElement::term(c, {0, 0}, -RationalFunction(Polynomial::constant(t, BigRational(1)), x * x));
    CHECK(prod == expect);

    // agreement with the D-algebra product on polynomial inputs
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        WeylElement p = randomWeyl(rng, c, 2, 2), q = randomWeyl(rng, c, 2, 2);
        CHECK(ratWeylMul(toRationalForm(p), toRationalForm(q)) == toRationalForm(p * q));
    }
}
