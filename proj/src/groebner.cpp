#include "weylconn/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace weylconn {

WeylIdeal WeylIdeal::make(WeylContextPtr ctx, std::vector<WeylElement> generators) {
    if (generators.empty()) throw InputError("an ideal needs at least one generator");
    for (const WeylElement& g : generators) {
        if (g.isZero()) throw ZeroElementError("zero generator in ideal");
        requireSameContext(ctx, g.context());
    }
    return WeylIdeal(std::move(ctx), std::move(generators));
}

namespace {

WeylElement makeMonic(const WeylElement& P) {
    const RationalFunction& lc = P.leadingTermD().second;
    if (lc.isOne()) return P;
    return P.scaled(lc.inv());
}

WeylMonomial monomialLcm(const WeylMonomial& a, const WeylMonomial& b) {
    WeylMonomial m(a);
    for (std::size_t i = 0; i < m.x.size(); ++i) {
        m.x[i] = std::max(a.x[i], b.x[i]);
        m.d[i] = std::max(a.d[i], b.d[i]);
    }
    return m;
}

ExpVec expDiff(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Full normal form in the D-algebra with monic reducers; used by Buchberger.
WeylElement reduceFullD(WeylElement P, const std::vector<WeylElement>& basis,
                        const std::vector<WeylMonomial>& inits, std::size_t skip) {
    WeylElement result = WeylElement::zero(P.context());
    while (!P.isZero()) {
        auto [m, c] = P.leadingTermD();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].isZero()) continue;
            if (!inits[k].divides(m)) continue;
            WeylElement sub =
                mulMonomialLeft(expDiff(m.x, inits[k].x), expDiff(m.d, inits[k].d), basis[k]);
            P -= sub.scaled(c);
            reduced = true;
            break;
        }
        if (!reduced) {
            WeylElement head = WeylElement::term(P.context(), m, c);
            result += head;
            P -= head;
        }
    }
    return result;
}

} // namespace

WeylElement sPairD(const WeylElement& P, const WeylElement& Q) {
    if (P.isZero() || Q.isZero()) throw ZeroElementError("S-pair of a zero element");
    requireSameContext(P.context(), Q.context());
    WeylElement Pm = makeMonic(P), Qm = makeMonic(Q);
    WeylMonomial ip = Pm.initMonomialD(), iq = Qm.initMonomialD();
    WeylMonomial m = monomialLcm(ip, iq);
    return mulMonomialLeft(expDiff(m.x, ip.x), expDiff(m.d, ip.d), Pm) -
           mulMonomialLeft(expDiff(m.x, iq.x), expDiff(m.d, iq.d), Qm);
}

GroebnerBasis buchberger(const WeylIdeal& I) {
    const WeylContextPtr& ctx = I.context();

    std::vector<WeylElement> basis;
    std::vector<WeylMonomial> inits;
    auto append = [&](const WeylElement& e) {
        WeylElement m = makeMonic(e);
        inits.push_back(m.initMonomialD());
        basis.push_back(std::move(m));
    };
    for (const WeylElement& g : I.generators()) append(g);

    // Pending S-pairs, smallest lcm first (normal strategy); ties broken by
    // the index pair to keep the run deterministic.
    struct PairEntry {
        WeylMonomial lcm;
        std::size_t i, j;
    };
    auto entryLess = [&ctx](const PairEntry& a, const PairEntry& b) {
        int c = compareD(a.lcm, b.lcm, *ctx);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairEntry, decltype(entryLess)> queue(entryLess);
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto push = [&](std::size_t i, std::size_t j) {
        queue.insert({monomialLcm(inits[i], inits[j]), i, j});
        pending.emplace(i, j);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push(i, j);

    auto isPending = [&](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    while (!queue.empty()) {
        PairEntry e = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({e.i, e.j});

        // Chain criterion: some other element divides the lcm and both
        // companion pairs are already treated.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == e.i || k == e.j) continue;
            if (inits[k].divides(e.lcm) && !isPending(e.i, k) && !isPending(e.j, k)) skip = true;
        }
        if (skip) continue;

        WeylElement s = sPairD(basis[e.i], basis[e.j]);
        WeylElement h = reduceFullD(std::move(s), basis, inits, basis.size());
        if (h.isZero()) continue;
        std::size_t t = basis.size();
        append(h);
        for (std::size_t i = 0; i < t; ++i) push(i, t);
    }

    // Minimalize: drop elements whose initial monomial another one divides.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int c = compareD(inits[a], inits[b], *ctx);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<WeylElement> minimal;
    std::vector<WeylMonomial> minimalInits;
    for (std::size_t idx : order) {
        bool redundant = false;
        for (const WeylMonomial& mi : minimalInits) {
            if (mi.divides(inits[idx])) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            minimal.push_back(basis[idx]);
            minimalInits.push_back(inits[idx]);
        }
    }

    // Inter-reduce the tails; the initial monomials stay fixed.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        minimal[i] = makeMonic(reduceFullD(minimal[i], minimal, minimalInits, i));
    }

    GroebnerBasis gb;
    gb.ctx_ = ctx;
    gb.elements_ = std::move(minimal);
    for (const WeylElement& g : gb.elements_) {
        auto [beta, lead] = toRationalForm(g).leadingTermR();
        gb.rInit_.push_back(std::move(beta));
        gb.rLead_.push_back(std::move(lead));
    }
    return gb;
}

namespace {

bool expDivides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

RationalWeylElement normalFormImpl(const RationalWeylElement& P,
                                   const std::vector<WeylElement>& elements,
                                   const std::vector<ExpVec>& rInit,
                                   const std::vector<RationalFunction>& rLead) {
    RationalWeylElement result = RationalWeylElement::zero(P.context());
    RationalWeylElement cur = P;
    while (!cur.isZero()) {
        auto [beta, c] = cur.leadingTermR();
        bool reduced = false;
        for (std::size_t k = 0; k < elements.size(); ++k) {
            if (!expDivides(rInit[k], beta)) continue;
            // red(cur, G_k): the product d^(beta-b) G_k is formed in the Weyl
            // algebra and regrouped into standard form afterwards.
            WeylElement shifted = mulMonomialLeft(ExpVec(beta.size(), 0),
                                                  expDiff(beta, rInit[k]), elements[k]);
            cur -= toRationalForm(shifted).scaledLeft(c / rLead[k]);
            reduced = true;
            break;
        }
        if (!reduced) {
            RationalWeylElement head = RationalWeylElement::term(cur.context(), beta, c);
            result += head;
            cur -= head;
        }
    }
    return result;
}

} // namespace

RationalWeylElement reduceStep(const RationalWeylElement& P, const WeylElement& Q) {
    if (P.isZero() || Q.isZero()) throw ZeroElementError("reduction with a zero element");
    requireSameContext(P.context(), Q.context());
    auto [beta, c] = P.leadingTermR();
    auto [b, lead] = toRationalForm(Q).leadingTermR();
    if (!expDivides(b, beta))
        throw Error("initial monomial of the divisor does not divide the leading monomial");
    WeylElement shifted = mulMonomialLeft(ExpVec(beta.size(), 0), expDiff(beta, b), Q);
    return P - toRationalForm(shifted).scaledLeft(c / lead);
}

RationalWeylElement normalForm(const RationalWeylElement& P, std::span<const WeylElement> G) {
    std::vector<WeylElement> elements;
    std::vector<ExpVec> rInit;
    std::vector<RationalFunction> rLead;
    for (const WeylElement& g : G) {
        if (g.isZero()) throw ZeroElementError("zero element in reducer list");
        requireSameContext(P.context(), g.context());
        auto [beta, lead] = toRationalForm(g).leadingTermR();
        elements.push_back(g);
        rInit.push_back(std::move(beta));
        rLead.push_back(std::move(lead));
    }
    return normalFormImpl(P, elements, rInit, rLead);
}

RationalWeylElement normalForm(const RationalWeylElement& P, const GroebnerBasis& G) {
    requireSameContext(P.context(), G.context());
    return normalFormImpl(P, G.elements(), G.rInitExponents(), G.rLeadCoefficients());
}

RationalWeylElement normalForm(const WeylElement& P, const GroebnerBasis& G) {
    return normalForm(toRationalForm(P), G);
}

RationalWeylElement normalForm(const WeylElement& P, const WeylElement& Q) {
    return normalForm(toRationalForm(P), std::span<const WeylElement>(&Q, 1));
}

namespace {

std::optional<std::vector<ExpVec>> staircaseComplement(const WeylContextPtr& ctx,
                                                       const std::vector<ExpVec>& inits) {
    const std::size_t n = ctx->n();

    // Finite iff every axis direction carries a pure power.
    std::vector<int> bound(n, -1);
    for (const ExpVec& b : inits) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (b[i] == 0) continue;
            if (support >= 0) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (!pure) continue;
        if (support < 0) {
            // A unit initial monomial kills everything.
            for (std::size_t i = 0; i < n; ++i) bound[i] = 0;
            break;
        }
        std::size_t i = static_cast<std::size_t>(support);
        if (bound[i] < 0 || b[i] < bound[i]) bound[i] = b[i];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::vector<ExpVec> out;
    ExpVec beta(n, 0);
    while (true) {
        bool divisible = false;
        for (const ExpVec& b : inits) {
            if (expDivides(b, beta)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(beta);

        std::size_t i = 0;
        for (; i < n; ++i) {
            if (beta[i] + 1 < bound[i]) {
                ++beta[i];
                break;
            }
            beta[i] = 0;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const ExpVec& a, const ExpVec& b) { return compareR(a, b, *ctx) < 0; });
    return out;
}

} // namespace

StandardMonomials standardMonomials(const GroebnerBasis& G) {
    auto sc = staircaseComplement(G.context(), G.rInitExponents());
    if (!sc) throw InfiniteRankError();
    return StandardMonomials{G.context(), std::move(*sc)};
}

StandardMonomials standardMonomials(const WeylIdeal& I) {
    return standardMonomials(buchberger(I));
}

std::optional<std::uint64_t> holonomicRank(const GroebnerBasis& G) {
    auto sc = staircaseComplement(G.context(), G.rInitExponents());
    if (!sc) return std::nullopt;
    return sc->size();
}

std::optional<std::uint64_t> holonomicRank(const WeylIdeal& I) {
    return holonomicRank(buchberger(I));
}

} // namespace weylconn
