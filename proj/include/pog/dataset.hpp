#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace pog {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Features as columns-per-sample (p x n), targets as an n-vector.
struct Dataset {
    Eigen::MatrixXd X;
    Eigen::VectorXd y;

    long size() const { return y.size(); }
    int feature_dim() const { return static_cast<int>(X.rows()); }
};

// CSV loader: every row is one sample, the last column is the target.
// Decimal-point parsing only, independent of locale. Ragged rows, empty
// files, and non-numeric cells raise ParseError naming the line.
Dataset load_dataset(const std::string& path, bool has_header);

// All columns are features (used for reference grids).
Eigen::MatrixXd load_matrix(const std::string& path, bool has_header);

struct StandardizeResult {
    Eigen::MatrixXd train;
    Eigen::MatrixXd test;
    Eigen::VectorXd mean;
    Eigen::VectorXd scale;
    std::vector<int> constant_dims;  // passed through with scale 1
};

// Center/scale with training statistics only (population std), applied to
// both sets. Zero-variance dimensions pass through unchanged.
StandardizeResult standardize(const Eigen::Ref<const Eigen::MatrixXd>& X_train,
                              const Eigen::Ref<const Eigen::MatrixXd>& X_test);

// Portable seeded Fisher-Yates permutation of 0..n-1.
std::vector<long> shuffled_indices(long n, unsigned long long seed);

}  // namespace pog
