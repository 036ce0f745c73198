#include "heispoly/vacuum.hpp"

#include <cmath>

#include "gauss_hermite.hpp"
#include "heispoly/fock.hpp"
#include "heispoly/tri_matrix.hpp"

namespace heispoly {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

CF64 eval_poly(const std::vector<CF64>& coeffs, double x) {
    CF64 acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CF64 quadrature_pass(const std::vector<CF64>& exp_poly, CF64 c, int nodes) {
    auto table = detail::gauss_hermite(nodes);
    CF64 acc = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double w = table->weights[i];
        if (w == 0.0) continue;
        const double y = kSqrt2 * table->nodes[i];
        acc += w * std::exp(CF64(0.0, 1.0) * eval_poly(exp_poly, y) + c * y);
    }
    return acc / std::sqrt(M_PI);
}

void require_finite(CF64 v, const char* who) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw numerical_error(std::string(who) + ": non-finite value");
}

}  // namespace

void QuadratureSpec::validate() const {
    if (initial_nodes < 8) throw std::invalid_argument("QuadratureSpec: need at least 8 nodes");
    if (max_nodes < initial_nodes)
        throw std::invalid_argument("QuadratureSpec: max_nodes below initial_nodes");
    if (!(tolerance > 0.0)) throw std::invalid_argument("QuadratureSpec: tolerance must be > 0");
}

CF64 gauss_expectation(const std::vector<CF64>& exp_poly, CF64 c, const QuadratureSpec& spec) {
    spec.validate();
    if (exp_poly.size() > 9)
        throw std::invalid_argument("gauss_expectation: polynomial degree above 8");
    int nodes = spec.initial_nodes;
    CF64 prev = quadrature_pass(exp_poly, c, nodes);
    require_finite(prev, "gauss_expectation");
    while (2 * nodes <= spec.max_nodes) {
        nodes *= 2;
        CF64 cur = quadrature_pass(exp_poly, c, nodes);
        require_finite(cur, "gauss_expectation");
        if (std::abs(cur - prev) <= spec.tolerance) return cur;
        prev = cur;
    }
    throw numerical_error("gauss_expectation: no convergence within node budget");
}

CF64 charfn_quadratic(double alpha, double beta, double gamma) {
    const CF64 d = CF64(1.0, -2.0 * alpha);
    return 1.0 / std::sqrt(d) * std::exp(gamma * gamma / (2.0 * d)) *
           std::exp(-beta * beta / (2.0 * d)) * std::exp(CF64(0.0, 1.0) * (beta * gamma) / d);
}

CF64 charfn_heis2(double A, double B, double C, double t) {
    const CF64 den = CF64(1.0, -2.0 * A * t);
    const double t2 = t * t;
    const CF64 num = 4.0 * C * C * CF64(A * A * t2 * t2, 2.0 * A * t2 * t) -
                     3.0 * (B * B + C * C) * t2;
    return 1.0 / std::sqrt(den) * std::exp(num / (6.0 * den));
}

CF64 overlap_heis2(const QuadObservable& p1, const QuadObservable& p2, double t) {
    const double da = p2.a - p1.a;
    const double db = p2.b - p1.b;
    const double dg = p2.c - p1.c;
    const double gs = p1.c + p2.c;
    const double e = p1.a * p2.c - p2.a * p1.c;
    const double k = p1.b * p2.c - p1.c * p2.b;

    const double L = -4.0 * e * (3.0 * e + 2.0 * da * gs) + 4.0 * dg * dg * da * da;
    const CF64 Z1 = CF64(12.0 * (da * k - db * e), 4.0 * (2.0 * da * dg * dg - gs * e));
    // The t^2 coefficient carries -3((b2-b1)^2 + (c2-c1)^2): expanding
    // -3|M(t)|^2 t^2 with M = (b2-b1) + 2e t + i(c2-c1) leaves the full
    // square, and the p1 = 0 specialization must reproduce charfn_heis2.
    const CF64 Z2 = CF64(-3.0 * (db * db + dg * dg), 6.0 * k);

    const CF64 den = CF64(1.0, -2.0 * da * t);
    const double t2 = t * t;
    const CF64 num = L * t2 * t2 + Z1 * t2 * t + Z2 * t2;
    return 1.0 / std::sqrt(den) * std::exp(num / (6.0 * den));
}

CF64 charfn_general(double u, const std::vector<double>& coeffs, const QuadratureSpec& spec) {
    if (coeffs.size() > 9) throw std::invalid_argument("charfn_general: degree above 8");
    const int n = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;

    // Q = T_u P' in the monomial basis; u == 0 keeps P' as is (T_0 = id).
    std::vector<double> q(coeffs.begin(), coeffs.end());
    if (u != 0.0 && !coeffs.empty()) {
        auto fact = [](int m) {
            double f = 1.0;
            for (int i = 2; i <= m; ++i) f *= i;
            return f;
        };
        std::vector<double> out(coeffs.size(), 0.0);
        for (int k = 0; k <= n; ++k)
            for (int h = 0; h <= k; ++h)
                out[static_cast<std::size_t>(h)] += coeffs[static_cast<std::size_t>(k)] *
                                                    fact(k) / (fact(k + 1 - h) * fact(h)) *
                                                    std::pow(u, k - h);
        q = std::move(out);
    }

    // Rescale Y ~ N(0, 1/2) to X ~ N(0, 1): substitute x/sqrt(2) and feed the
    // result to the standard-normal quadrature with linear term -u/sqrt(2).
    std::vector<CF64> exp_poly(q.size());
    double scale = 1.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        exp_poly[i] = q[i] * scale;
        scale /= kSqrt2;
    }
    const CF64 value =
        std::exp(-u * u / 2.0) * gauss_expectation(exp_poly, CF64(-u / kSqrt2, 0.0), spec);
    require_finite(value, "charfn_general");
    return value;
}

CF64 charfn_general(const GroupElement& g, const QuadratureSpec& spec) {
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(g.bound()) + 1);
    for (const Rat& c : g.poly.coeffs()) coeffs.push_back(c.to_double());
    return charfn_general(g.u.to_double(), coeffs, spec);
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    // Parts are chosen largest-first; mult[j-1] counts the part j.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            fn(mult);
            return;
        }
        for (int j = std::min(remaining, max_part); j >= 1; --j) {
            ++mult[static_cast<std::size_t>(j) - 1];
            rec(remaining - j, j);
            --mult[static_cast<std::size_t>(j) - 1];
        }
    };
    rec(n, n);
}

namespace {

double partition_sum(double A, double B, double C, int n, double prefactor_base) {
    if (n < 0 || n > 30) throw std::invalid_argument("moments: n must be in [0, 30]");
    if (n == 0) return 1.0;

    const double alpha = 2.0 / 3.0 * A * A * C * C;
    const double beta = 4.0 / 3.0 * A * C * C;
    const double gamma = -0.5 * (B * B + C * C);

    std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        double v = std::pow(A, k) / (2.0 * k);
        if (k >= 2) v -= std::pow(A, k - 2) * gamma / 4.0;
        if (k >= 3) v -= std::pow(A, k - 3) * beta / 8.0;
        if (k >= 4) v += std::pow(A, k - 4) * alpha / 16.0;
        w[static_cast<std::size_t>(k)] = v;
    }

    std::vector<double> fact(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k)
        fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k) - 1] * k;

    double total = 0.0;
    for_each_partition(n, [&](const std::vector<int>& mult) {
        double term = fact[static_cast<std::size_t>(n)];
        for (int j = 1; j <= n; ++j) {
            const int m = mult[static_cast<std::size_t>(j) - 1];
            if (m == 0) continue;
            for (int r = 0; r < m; ++r) term *= w[static_cast<std::size_t>(j)];
            term /= fact[static_cast<std::size_t>(m)];
        }
        total += term;
    });
    return std::pow(prefactor_base, n) * total;
}

}  // namespace

double moments_heis2(double A, double B, double C, int n) {
    return partition_sum(A, B, C, n, 2.0);
}

double moments_printed_variant(double A, double B, double C, int n) {
    return partition_sum(A, B, C, n, 8.0);
}

double moments_oracle(double A, double B, double C, int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("moments_oracle: n must be in [0, 30]");
    return fock::oracle_moment(A, B, C, n);
}

}  // namespace heispoly
