#pragma once

#include <Eigen/Dense>

#include <vector>

#include "heispoly/group.hpp"
#include "heispoly/numeric.hpp"

namespace heispoly::fock {

/// Dense truncated operators and vectors in the number basis, D levels.
/// Dimensions are capped at 512.
inline constexpr int kMaxDim = 512;

using TruncatedOp = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;

struct CanonicalPair {
    TruncatedOp q;
    TruncatedOp p;
};

/// Position and momentum on a D-level truncation: q = (a + a^dag)/sqrt2,
/// p = (a - a^dag)/(i sqrt2) with a[n-1, n] = sqrt(n). Both come out exactly
/// Hermitian. D >= 2.
CanonicalPair build_canonical(int dim);

/// Vacuum vector e0.
FockVector vacuum(int dim);

/// Matrix exponential by scaling and squaring around a truncated Taylor core;
/// the series is cut when the term norm falls below tol relative to the
/// partial sum.
TruncatedOp expm(const TruncatedOp& a, double tol = 1e-12);

/// The observable u p + P'(q) with P' given by monomial coefficients.
TruncatedOp observable(double u, const std::vector<double>& coeffs, int dim);

/// <e0, exp(i(u p + P'(q))) e0> at a single truncation dimension.
CF64 vacuum_charfn_at(double u, const std::vector<double>& coeffs, int dim);

struct OracleValue {
    CF64 value;            // value at the doubled dimension
    double doubling_delta; // |value(2D) - value(D)|
};

/// Doubling-checked characteristic function: evaluates at dim and 2*dim and
/// fails with numerical_error when the two disagree beyond tol. dim >= 16.
OracleValue oracle_charfn(double u, const std::vector<double>& coeffs, int dim, double tol = 1e-6);

/// Weyl-relation residual at one truncation: the largest value of
/// ||exp(iH1)exp(iH2)v - exp(iH12)v|| over the vacuum and the lowest basis
/// vectors, where H12 realizes the composed group element. dim >= 32.
double weyl_residual_at(const GroupElement& g1, const GroupElement& g2, int dim);

/// <e0, H^n e0> for H = A(sqrt2 q)^2 + B(sqrt2 q) + C(sqrt2 p) on a
/// truncation of dimension 2n+4; exact up to round-off since each factor
/// raises the level by at most 2.
double oracle_moment(double A, double B, double C, int n);

}  // namespace heispoly::fock
