#include "weylconn/matrix.hpp"

namespace weylconn {

RatMat zeroMatrix(Eigen::Index rows, Eigen::Index cols, const VarTablePtr& table) {
    return RatMat::Constant(rows, cols, RationalFunction::zero(table));
}

RatMat identityMatrix(Eigen::Index size, const VarTablePtr& table) {
    RatMat m = zeroMatrix(size, size, table);
    for (Eigen::Index i = 0; i < size; ++i)
        m(i, i) = RationalFunction::constant(table, BigRational(1));
    return m;
}

bool matEqual(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool matIsZero(const RatMat& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).isZero()) return false;
    return true;
}

RatMat derivativeEntrywise(const RatMat& a, std::size_t var) {
    return a.unaryExpr([var](const RationalFunction& r) { return r.derivative(var); });
}

std::optional<RatMat> bareissInverse(const RatMat& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw Error("inverse of a non-square matrix");
    if (n == 0) return RatMat(0, 0);

    RatMat m(n, 2 * n);
    m.leftCols(n) = a;
    m.rightCols(n) = identityMatrix(n, a(0, 0).table());

    RationalFunction prev(1L);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n; ++i) {
            if (!m(i, k).isZero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != k) m.row(k).swap(m.row(pivot));

        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < 2 * n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = RationalFunction::zero(a(0, 0).table());
        }
        prev = m(k, k);
    }

    RatMat inv(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            RationalFunction sum = m(i, n + c);
            for (Eigen::Index j = i + 1; j < n; ++j) sum -= m(i, j) * inv(j, c);
            inv(i, c) = sum / m(i, i);
        }
    }
    return inv;
}

} // namespace weylconn
