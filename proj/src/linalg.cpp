#include "pog/linalg.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <sstream>

namespace pog {

Eigen::MatrixXd CholeskyFactor::solve(const Eigen::Ref<const Eigen::MatrixXd>& B) const {
    Eigen::MatrixXd X = lower.triangularView<Eigen::Lower>().solve(B);
    lower.triangularView<Eigen::Lower>().transpose().solveInPlace(X);
    return X;
}

Eigen::MatrixXd CholeskyFactor::solve_lower(const Eigen::Ref<const Eigen::MatrixXd>& B) const {
    return lower.triangularView<Eigen::Lower>().solve(B);
}

double CholeskyFactor::log_det() const {
    double s = 0.0;
    for (int i = 0; i < dim(); ++i) {
        s += std::log(lower(i, i));
    }
    return 2.0 * s;
}

CholeskyFactor cholesky_factor(const Eigen::Ref<const Eigen::MatrixXd>& S) {
    const long n = S.rows();
    if (S.cols() != n) {
        throw std::invalid_argument("cholesky_factor: matrix must be square");
    }
    if (n == 0) {
        return CholeskyFactor{Eigen::MatrixXd(0, 0), 0.0};
    }
    const double scale = S.trace() / static_cast<double>(n);
    const double multipliers[] = {0.0, 1e-10, 1e-8, 1e-6};
    for (double mult : multipliers) {
        const double jitter = mult * scale;
        Eigen::MatrixXd work = S;
        if (jitter != 0.0) {
            work.diagonal().array() += jitter;
        }
        Eigen::LLT<Eigen::MatrixXd> llt(work);
        if (llt.info() == Eigen::Success) {
            return CholeskyFactor{llt.matrixL(), jitter};
        }
    }
    std::ostringstream msg;
    msg << "cholesky_factor: matrix of dimension " << n
        << " is not positive definite even with jitter " << multipliers[3] * scale
        << " (trace " << S.trace() << ", min diagonal " << S.diagonal().minCoeff() << ")";
    throw NumericalError(msg.str());
}

CholeskyFactor cholesky_delete(const CholeskyFactor& factor, int index) {
    const int n = factor.dim();
    if (index < 0 || index >= n) {
        throw std::invalid_argument("cholesky_delete: index out of range");
    }
    const Eigen::MatrixXd& L = factor.lower;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n - 1, n - 1);
    // Rows above the deleted one are untouched; below it, drop column `index`
    // of L and repair the trailing block with a rank-one update by the
    // deleted column's sub-diagonal entries.
    out.topLeftCorner(index, index) = L.topLeftCorner(index, index);
    const int m = n - 1 - index;  // size of the trailing block
    if (m > 0) {
        out.bottomLeftCorner(m, index) = L.block(index + 1, 0, m, index);
        Eigen::MatrixXd T = L.block(index + 1, index + 1, m, m);
        Eigen::VectorXd v = L.block(index + 1, index, m, 1);
        // T T^T + v v^T, in place (LINPACK-style positive update).
        for (int k = 0; k < m; ++k) {
            const double r = std::hypot(T(k, k), v[k]);
            const double c = r / T(k, k);
            const double s = v[k] / T(k, k);
            T(k, k) = r;
            for (int i = k + 1; i < m; ++i) {
                T(i, k) = (T(i, k) + s * v[i]) / c;
                v[i] = c * v[i] - s * T(i, k);
            }
        }
        out.bottomRightCorner(m, m) = T;
    }
    return CholeskyFactor{std::move(out), factor.jitter};
}

double pairwise_sum(const double* data, long n) {
    if (n <= 16) {
        double s = 0.0;
        for (long i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const long half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

}  // namespace pog
