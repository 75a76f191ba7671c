#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace pog {

// Thrown when a factorization cannot be completed even with the maximum
// diagonal jitter.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Lower-triangular Cholesky factor of S + jitter*I. The jitter actually
// applied is recorded so callers can reconstruct exactly what was factored.
struct CholeskyFactor {
    Eigen::MatrixXd lower;  // L with L * L^T = S + jitter * I
    double jitter = 0.0;

    int dim() const { return static_cast<int>(lower.rows()); }

    // (L L^T)^{-1} B
    Eigen::MatrixXd solve(const Eigen::Ref<const Eigen::MatrixXd>& B) const;
    // L^{-1} B (forward substitution only)
    Eigen::MatrixXd solve_lower(const Eigen::Ref<const Eigen::MatrixXd>& B) const;
    // log det(L L^T) = 2 * sum_i log L_ii
    double log_det() const;
};

// Factor a symmetric matrix, escalating diagonal jitter through
// {0, 1e-10, 1e-8, 1e-6} * tr(S)/n until the factorization succeeds.
// Throws NumericalError when even the largest jitter fails.
CholeskyFactor cholesky_factor(const Eigen::Ref<const Eigen::MatrixXd>& S);

// Factor of S with row/column `index` removed, derived from the factor of S
// by a Givens-based rank-one update of the trailing block. O(n^2) instead of
// a fresh O(n^3) factorization; keeps the jitter of the input factor.
CholeskyFactor cholesky_delete(const CholeskyFactor& factor, int index);

// Deterministic pairwise summation (divide and conquer, base case 16).
double pairwise_sum(const double* data, long n);

}  // namespace pog
