#pragma once

#include <Eigen/Core>

#include <optional>

#include "weylconn/rational_function.hpp"

namespace Eigen {

template <>
struct NumTraits<weylconn::RationalFunction>
    : GenericNumTraits<weylconn::RationalFunction> {
    using Real = weylconn::RationalFunction;
    using NonInteger = weylconn::RationalFunction;
    using Nested = weylconn::RationalFunction;
    using Literal = weylconn::RationalFunction;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 64,
        AddCost = 256,
        MulCost = 512,
    };

    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace weylconn {

/// Dense matrix over the exact rational-function scalar.
using RatMat = Eigen::Matrix<RationalFunction, Eigen::Dynamic, Eigen::Dynamic>;

RatMat zeroMatrix(Eigen::Index rows, Eigen::Index cols, const VarTablePtr& table);
RatMat identityMatrix(Eigen::Index size, const VarTablePtr& table);

bool matEqual(const RatMat& a, const RatMat& b);
bool matIsZero(const RatMat& a);

/// Entry-wise formal derivative with respect to base variable `var`.
RatMat derivativeEntrywise(const RatMat& a, std::size_t var);

/// Exact inverse by fraction-free Bareiss elimination on [A | I] followed by
/// back substitution. Returns empty when A is singular (exact zero pivot
/// column); no magnitude pivoting is involved.
std::optional<RatMat> bareissInverse(const RatMat& a);

} // namespace weylconn
