#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "pog/dictionary.hpp"
#include "pog/kernel.hpp"

namespace pog {

struct CompressionOptions {
    int threads = 1;
    // Screen leave-one-out candidates with an O(M^2) Cholesky downdate
    // instead of a fresh factorization. Falls back to rebuilding whenever
    // the input factor carries jitter.
    bool use_downdate = true;
};

struct CompressionResult {
    Dictionary dictionary;
    // Hellinger distance between the pruned dictionary's predictive and the
    // input predictive at the reference set; <= eps by construction.
    double achieved_distance = 0.0;
    // Original indices into the input dictionary, in removal order.
    std::vector<int> removed_indices;
    // One entry per round: the (original index, gamma) pairs evaluated.
    std::vector<std::vector<std::pair<int, double>>> candidate_errors_trace;
};

// Destructive Hellinger matching pursuit. Holds the input predictive at
// `reference` fixed, then repeatedly removes the dictionary point whose
// leave-one-out predictive stays closest to it (ties to the lowest original
// index), stopping once the cheapest removal would exceed `eps`. A removal
// only commits if the rebuilt dictionary's predictive also stays within eps,
// so the returned distance honors the budget regardless of screening noise.
//
// Cost envelope: one call performs at most M(M+1)/2 <= M^2 leave-one-out
// solves (each O(M^2) via downdate), plus one rebuild per committed removal.
CompressionResult dhmp(const Dictionary& dict_in, const KernelParams& params,
                       const Eigen::Ref<const Eigen::MatrixXd>& reference,
                       double eps, const CompressionOptions& options = {});

}  // namespace pog
