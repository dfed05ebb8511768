#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "weylconn/groebner.hpp"
#include "weylconn/matrix.hpp"

namespace weylconn {

/// First-order form of the system encoded by an ideal: in the chosen basis
/// s_1..s_m, applying the i-th partial acts as the matrix A_i. Row j holds
/// the expansion of the normal form of d_i s_j, column k the coefficient of
/// s_k.
struct ConnectionSystem {
    WeylContextPtr ctx;
    std::vector<RationalWeylElement> basis;
    std::vector<RatMat> matrices;

    std::size_t rank() const { return basis.size(); }
};

/// Connection matrices with respect to the standard monomial basis.
/// Throws InfiniteRankError when the rank is not finite.
ConnectionSystem connectionMatrices(const GroebnerBasis& G);
ConnectionSystem connectionMatrices(const WeylIdeal& I);

/// Change-of-basis matrix from the standard monomials to B: entry (j,k) is
/// the coefficient of the k-th standard monomial in normalForm(B_j).
/// Throws NotABasisError when the matrix is singular.
RatMat gaugeMatrix(const GroebnerBasis& G, std::span<const RationalWeylElement> B);
RatMat gaugeMatrix(const WeylIdeal& I, std::span<const RationalWeylElement> B);

/// Connection matrices with respect to an arbitrary basis B, obtained by
/// gauge-transforming the standard-monomial system.
ConnectionSystem connectionMatricesInBasis(const GroebnerBasis& G,
                                           std::span<const RationalWeylElement> B);
ConnectionSystem connectionMatricesInBasis(const WeylIdeal& I,
                                           std::span<const RationalWeylElement> B);

/// A_i -> g A_i g^-1 + (d_i g) g^-1; the basis is carried along as g times
/// the old basis. Throws SingularMatrixError when g is not invertible.
ConnectionSystem gaugeTransform(const RatMat& g, const ConnectionSystem& A);

/// Whether d_i A_j - d_j A_i = [A_i, A_j] holds exactly for all pairs.
bool isIntegrable(std::span<const RatMat> matrices, const WeylContextPtr& ctx);
bool isIntegrable(const ConnectionSystem& A);

/// When every nonzero entry is a pure power of the parameter times a
/// parameter-free rational function with one common power d, returns k = -d
/// (so that param^k A is parameter-free). The zero system yields k = 0.
std::optional<int> epsilonFactorizationExponent(const ConnectionSystem& A,
                                                std::string_view param);
bool isEpsilonFactorized(const ConnectionSystem& A, std::string_view param);

/// Display form: entry (j,k) lists the nonzero coefficients of dx_i across
/// the family, as pairs (variable index, coefficient).
struct OneForm {
    WeylContextPtr ctx;
    std::vector<std::vector<std::vector<std::pair<std::size_t, RationalFunction>>>> entries;
};

OneForm renderOneForm(const ConnectionSystem& A);

} // namespace weylconn
