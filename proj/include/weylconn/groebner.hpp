#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "weylconn/weyl.hpp"

namespace weylconn {

/// Left ideal given by a nonempty list of nonzero generators.
class WeylIdeal {
public:
    static WeylIdeal make(WeylContextPtr ctx, std::vector<WeylElement> generators);

    const WeylContextPtr& context() const { return ctx_; }
    const std::vector<WeylElement>& generators() const { return gens_; }

private:
    WeylIdeal(WeylContextPtr ctx, std::vector<WeylElement> gens)
        : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

    WeylContextPtr ctx_;
    std::vector<WeylElement> gens_;
};

/// Reduced Groebner basis under the context's order: elements are monic with
/// scalar leading coefficient one, fully reduced against each other, and
/// sorted ascending by initial monomial. Also caches the data of the
/// rational-algebra view: the initial d-exponent and the full
/// rational-function leading coefficient of each element.
class GroebnerBasis {
public:
    const WeylContextPtr& context() const { return ctx_; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    const std::vector<ExpVec>& rInitExponents() const { return rInit_; }
    const std::vector<RationalFunction>& rLeadCoefficients() const { return rLead_; }

private:
    friend GroebnerBasis buchberger(const WeylIdeal&);

    WeylContextPtr ctx_;
    std::vector<WeylElement> elements_;
    std::vector<ExpVec> rInit_;
    std::vector<RationalFunction> rLead_;
};

/// S-pair of two nonzero elements: both sides are first normalized to scalar
/// leading coefficient one, then matched on the componentwise max of their
/// initial monomials so the leading terms cancel.
WeylElement sPairD(const WeylElement& P, const WeylElement& Q);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the chain criterion. Output is the unique reduced basis.
GroebnerBasis buchberger(const WeylIdeal& I);

/// One reduction step in the rational Weyl algebra:
/// P - (lc(P)/lc(Q)) d^(beta-b) Q, where the product is formed by Leibniz
/// multiplication in the Weyl algebra and only then regrouped. Requires the
/// initial monomial of Q to divide that of P.
RationalWeylElement reduceStep(const RationalWeylElement& P, const WeylElement& Q);

/// Normal form against an arbitrary list of nonzero Weyl elements: the head
/// is reduced while some initial monomial divides it, then peeled off and the
/// tail continued. Unique when the list is a Groebner basis.
RationalWeylElement normalForm(const RationalWeylElement& P, std::span<const WeylElement> G);
RationalWeylElement normalForm(const RationalWeylElement& P, const GroebnerBasis& G);
RationalWeylElement normalForm(const WeylElement& P, const GroebnerBasis& G);
RationalWeylElement normalForm(const WeylElement& P, const WeylElement& Q);

/// The d-monomials outside the initial ideal, sorted ascending. Infinite
/// staircases are detected up front (a direction with no pure power among
/// the initial monomials) and reported via InfiniteRankError.
struct StandardMonomials {
    WeylContextPtr ctx;
    std::vector<ExpVec> exponents;

    std::size_t size() const { return exponents.size(); }
};

StandardMonomials standardMonomials(const GroebnerBasis& G);
StandardMonomials standardMonomials(const WeylIdeal& I);

/// Number of standard monomials; empty optional means infinite rank.
std::optional<std::uint64_t> holonomicRank(const GroebnerBasis& G);
std::optional<std::uint64_t> holonomicRank(const WeylIdeal& I);

} // namespace weylconn
