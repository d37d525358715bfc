#include "fraclab/linalg.hpp"

#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace fraclab {

Operator matrix_exponential(const Operator& x) {
    if (x.rows() != x.cols())
        throw std::invalid_argument("matrix_exponential: square matrix required");
    return x.exp();
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& x) {
    if (x.rows() != x.cols())
        throw std::invalid_argument("matrix_exponential: square matrix required");
    return x.exp();
}

Operator commutator(const Operator& a, const Operator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw std::invalid_argument("commutator: matching square matrices required");
    return a * b - b * a;
}

double interior_deviation(const Operator& a, const Operator& b, int margin) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("interior_deviation: shape mismatch");
    if (margin < 0 || a.rows() - margin <= 0)
        throw std::invalid_argument("interior_deviation: margin out of range");
    const auto n = a.rows() - margin;
    return (a.topLeftCorner(n, n) - b.topLeftCorner(n, n)).cwiseAbs().maxCoeff();
}

double tensor_interior_deviation(const Operator& a, const Operator& b,
                                 int per_mode, int margin) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("tensor_interior_deviation: shape mismatch");
    const int dim = static_cast<int>(a.rows());
    if (per_mode < 1 || per_mode * per_mode != dim)
        throw std::invalid_argument("tensor_interior_deviation: not a two-mode square");
    const int keep = per_mode - margin;
    if (keep <= 0)
        throw std::invalid_argument("tensor_interior_deviation: margin out of range");

    double worst = 0.0;
    for (int r1 = 0; r1 < keep; ++r1)
        for (int r2 = 0; r2 < keep; ++r2)
            for (int c1 = 0; c1 < keep; ++c1)
                for (int c2 = 0; c2 < keep; ++c2) {
                    const int r = r1 * per_mode + r2;
                    const int c = c1 * per_mode + c2;
                    worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
                }
    return worst;
}

Operator tensor_interior_block(const Operator& a, int per_mode, int margin) {
    const int dim = static_cast<int>(a.rows());
    if (a.rows() != a.cols() || per_mode < 1 || per_mode * per_mode != dim)
        throw std::invalid_argument("tensor_interior_block: not a two-mode square");
    const int keep = per_mode - margin;
    if (keep <= 0)
        throw std::invalid_argument("tensor_interior_block: margin out of range");

    std::vector<int> idx;
    idx.reserve(keep * keep);
    for (int n1 = 0; n1 < keep; ++n1)
        for (int n2 = 0; n2 < keep; ++n2) idx.push_back(n1 * per_mode + n2);

    Operator out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = a(idx[r], idx[c]);
    return out;
}

double operator_norm(const Operator& a) {
    return a.jacobiSvd().singularValues()(0);
}

namespace {

template <typename Mat>
Mat kron_impl(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace

Operator kron(const Operator& a, const Operator& b) { return kron_impl(a, b); }

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return kron_impl(a, b);
}

Operator identity_like(int dim) { return Operator::Identity(dim, dim); }

}  // namespace fraclab
