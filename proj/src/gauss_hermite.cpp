#include "gauss_hermite.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace heispoly::detail {

namespace {

// Golub-Welsch nodes: eigenvalues of the Jacobi matrix (diag 0, off-diagonal
// sqrt(k/2)), then weights 2 / (sqrt(2n) p_{n-1}(x))^2 from the orthonormal
// recurrence. The recurrence is rescaled on the fly: near the outermost nodes
// of large rules the intermediate values pass 1e300 and the true weights
// underflow to zero, which is where those nodes belong.
GaussHermiteTable build(int n) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_hermite: eigensolver failed");

    GaussHermiteTable table;
    table.nodes.resize(n);
    table.weights.resize(n);
    const double quarter_pi = std::pow(M_PI, -0.25);
    for (int i = 0; i < n; ++i) {
        const double x = solver.eigenvalues()[i];
        double p_prev = 0.0;
        double p = quarter_pi;
        double log_scale = 0.0;
        for (int j = 0; j < n - 1; ++j) {
            double next = x * std::sqrt(2.0 / (j + 1)) * p -
                          std::sqrt(static_cast<double>(j) / (j + 1)) * p_prev;
            p_prev = p;
            p = next;
            if (std::abs(p) > 1e130 || std::abs(p_prev) > 1e130) {
                p *= 1e-130;
                p_prev *= 1e-130;
                log_scale += 130.0 * std::log(10.0);
            }
        }
        // p now holds (a rescale of) p_{n-1}(x); p_n'(x) = sqrt(2n) p_{n-1}(x)
        const double log_pp = 0.5 * std::log(2.0 * n) + std::log(std::abs(p)) + log_scale;
        table.nodes[i] = x;
        table.weights[i] = std::exp(std::log(2.0) - 2.0 * log_pp);
    }
    return table;
}

}  // namespace

std::shared_ptr<const GaussHermiteTable> gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: node count must be positive");
    static std::map<int, std::shared_ptr<const GaussHermiteTable>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_shared<const GaussHermiteTable>(build(n))).first;
    return it->second;
}

}  // namespace heispoly::detail
