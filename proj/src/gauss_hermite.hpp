#pragma once

#include <memory>
#include <vector>

namespace heispoly::detail {

/// Physicists' Gauss-Hermite rule: integrates f against e^{-x^2} dx as
/// sum_i weights[i] * f(nodes[i]).
struct GaussHermiteTable {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached table for the given node count (thread safe).
std::shared_ptr<const GaussHermiteTable> gauss_hermite(int n);

}  // namespace heispoly::detail
