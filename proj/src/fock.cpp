#include "heispoly/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace heispoly::fock {

namespace {

void check_dim(int dim, int least) {
    if (dim < least) throw std::invalid_argument("fock: dimension too small");
    if (dim > kMaxDim) throw std::invalid_argument("fock: dimension above dense cap 512");
}

}  // namespace

CanonicalPair build_canonical(int dim) {
    check_dim(dim, 2);
    TruncatedOp a = TruncatedOp::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    const TruncatedOp adag = a.adjoint();
    CanonicalPair out;
    out.q = (a + adag) / std::sqrt(2.0);
    out.p = (a - adag) / CF64(0.0, std::sqrt(2.0));
    return out;
}

FockVector vacuum(int dim) {
    FockVector v = FockVector::Zero(dim);
    v(0) = 1.0;
    return v;
}

TruncatedOp expm(const TruncatedOp& a, double tol) {
    const Eigen::Index dim = a.rows();
    if (dim != a.cols()) throw std::invalid_argument("expm: matrix must be square");

    // Scale until the 1-norm is at most 1/2, run the Taylor series on the
    // scaled matrix, then square back.
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    const TruncatedOp b = a * scale;
    TruncatedOp result = TruncatedOp::Identity(dim, dim);
    TruncatedOp term = TruncatedOp::Identity(dim, dim);
    for (int k = 1; k <= 64; ++k) {
        term = (term * b) / static_cast<double>(k);
        result += term;
        const double term_norm = term.cwiseAbs().colwise().sum().maxCoeff();
        if (term_norm <= tol) break;
        if (k == 64) throw numerical_error("expm: Taylor core did not settle");
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

TruncatedOp observable(double u, const std::vector<double>& coeffs, int dim) {
    check_dim(dim, 2);
    const CanonicalPair ops = build_canonical(dim);
    TruncatedOp h = u * ops.p;
    TruncatedOp qk = TruncatedOp::Identity(dim, dim);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) qk = qk * ops.q;
        if (coeffs[k] != 0.0) h += coeffs[k] * qk;
    }
    return h;
}

CF64 vacuum_charfn_at(double u, const std::vector<double>& coeffs, int dim) {
    const TruncatedOp h = observable(u, coeffs, dim);
    const FockVector e0 = vacuum(dim);
    const FockVector evolved = expm(CF64(0.0, 1.0) * h) * e0;
    return e0.dot(evolved);
}

OracleValue oracle_charfn(double u, const std::vector<double>& coeffs, int dim, double tol) {
    check_dim(dim, 16);
    check_dim(2 * dim, 2);
    const CF64 coarse = vacuum_charfn_at(u, coeffs, dim);
    const CF64 fine = vacuum_charfn_at(u, coeffs, 2 * dim);
    const double delta = std::abs(fine - coarse);
    if (!std::isfinite(delta)) throw numerical_error("oracle_charfn: non-finite value");
    if (delta > tol)
        throw numerical_error("oracle_charfn: no convergence under dimension doubling");
    return OracleValue{fine, delta};
}

double weyl_residual_at(const GroupElement& g1, const GroupElement& g2, int dim) {
    check_dim(dim, 32);
    if (g1.bound() != g2.bound())
        throw std::invalid_argument("weyl_residual_at: bound mismatch");

    auto cast = [](const GroupElement& g) {
        std::vector<double> coeffs;
        coeffs.reserve(static_cast<std::size_t>(g.bound()) + 1);
        for (const Rat& c : g.poly.coeffs()) coeffs.push_back(c.to_double());
        return coeffs;
    };

    const GroupElement composed = compose(g1, g2);
    const TruncatedOp w1 = expm(CF64(0.0, 1.0) * observable(g1.u.to_double(), cast(g1), dim));
    const TruncatedOp w2 = expm(CF64(0.0, 1.0) * observable(g2.u.to_double(), cast(g2), dim));
    const TruncatedOp w12 =
        expm(CF64(0.0, 1.0) * observable(composed.u.to_double(), cast(composed), dim));

    double worst = 0.0;
    const int panel = std::min(4, dim);
    for (int i = 0; i < panel; ++i) {
        FockVector v = FockVector::Zero(dim);
        v(i) = 1.0;
        const double r = (w1 * (w2 * v) - w12 * v).norm();
        worst = std::max(worst, r);
    }
    return worst;
}

double oracle_moment(double A, double B, double C, int n) {
    const int dim = std::max(2 * n + 4, 8);
    const CanonicalPair ops = build_canonical(dim);
    const double s2 = std::sqrt(2.0);
    const TruncatedOp h =
        2.0 * A * (ops.q * ops.q) + s2 * B * ops.q + s2 * C * ops.p;
    FockVector v = vacuum(dim);
    for (int k = 0; k < n; ++k) v = h * v;
    return v(0).real();
}

}  // namespace heispoly::fock
