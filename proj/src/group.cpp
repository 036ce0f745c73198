#include "heispoly/group.hpp"

#include <stdexcept>
#include <vector>

#include "heispoly/tri_matrix.hpp"

namespace heispoly {

namespace {

void check_bounds(const GroupElement& g1, const GroupElement& g2) {
    if (g1.bound() != g2.bound()) throw std::invalid_argument("compose: bound mismatch");
}

void check_zero_constant(const GroupElement& g, const char* who) {
    if (!g.poly.coeff(0).is_zero())
        throw std::invalid_argument(std::string(who) + ": constant term must be zero");
}

}  // namespace

GroupElement identity_element(int bound) { return GroupElement(Rat(0), Poly(bound)); }

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
    check_bounds(g1, g2);
    const int n = g1.bound();
    const Rat w = g1.u + g2.u;
    Poly mixed = apply(t_matrix(g1.u, n), g1.poly) +
                 apply(t_matrix(g2.u, n), apply(s_matrix(g1.u, n), g2.poly));
    return GroupElement(w, apply(t_inverse(w, n), mixed));
}

GroupElement inverse(const GroupElement& g) { return GroupElement(-g.u, -g.poly); }

GroupElement embed(const GroupElement& g, int bound) {
    return GroupElement(g.u, g.poly.with_bound(bound));
}

Rat sigma(const GroupElement& g1, const GroupElement& g2) {
    check_bounds(g1, g2);
    check_zero_constant(g1, "sigma");
    check_zero_constant(g2, "sigma");
    return compose(g1, g2).poly.coeff(0);
}

Rat sigma_closed(const GroupElement& g1, const GroupElement& g2) {
    check_bounds(g1, g2);
    check_zero_constant(g1, "sigma_closed");
    check_zero_constant(g2, "sigma_closed");

    const int n = g1.bound();
    const Rat& u = g1.u;
    const Rat& v = g2.u;
    const Rat w = u + v;

    // t_{jh}(x) with the convention t_{jj} = 1 used by the closed formula.
    auto t_conv = [](const Rat& x, int j, int h) -> Rat {
        if (j == h) return Rat(1);
        if (j > h) return Rat(0);
        Rat c = factorial(static_cast<unsigned>(h)) /
                (factorial(static_cast<unsigned>(h + 1 - j)) * factorial(static_cast<unsigned>(j)));
        return c * pow(x, static_cast<unsigned>(h - j));
    };

    // Row i = 0 of the chain coefficients: C^{[0]}_{0j} = [j == 0],
    // C^{[1]}_{0j} = [0 < j], C^{[m]}_{0j} = sum_{0<h<j} C^{(h)}_{0j} C^{[m-1]}_{0h}.
    std::vector<std::vector<Rat>> chain(static_cast<std::size_t>(n) + 1,
                                        std::vector<Rat>(static_cast<std::size_t>(n) + 1));
    chain[0][0] = Rat(1);
    if (n >= 1)
        for (int j = 1; j <= n; ++j) chain[1][static_cast<std::size_t>(j)] = Rat(1);
    for (int m = 2; m <= n; ++m)
        for (int j = 0; j <= n; ++j) {
            Rat sum;
            for (int h = 1; h < j; ++h) {
                Rat chj = factorial(static_cast<unsigned>(j + 1)) /
                          (factorial(static_cast<unsigned>(h + 1)) *
                           factorial(static_cast<unsigned>(j + 1 - h)));
                sum += chj * chain[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(h)];
            }
            chain[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = std::move(sum);
        }

    Rat total;
    for (int j = 0; j <= n; ++j) {
        Rat inv_factor;
        for (int m = 0; m <= n; ++m) {
            const Rat& c = chain[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
            inv_factor = (m % 2 == 0) ? inv_factor + c : inv_factor - c;
        }
        inv_factor = inv_factor * pow(w, static_cast<unsigned>(j)) / Rat(j + 1);
        if (inv_factor.is_zero()) continue;

        Rat coeff_j;
        for (int h = j; h <= n; ++h) {
            Rat shifted;  // (S_u Q')_h
            for (int k = h; k <= n; ++k)
                shifted += binomial(static_cast<unsigned>(k), static_cast<unsigned>(h)) *
                           pow(u, static_cast<unsigned>(k - h)) * g2.poly.coeff(k);
            coeff_j += t_conv(u, j, h) * g1.poly.coeff(h) + t_conv(v, j, h) * shifted;
        }
        total += inv_factor * coeff_j;
    }
    return total;
}

GroupElement compose_n1_closed(const GroupElement& g1, const GroupElement& g2) {
    check_bounds(g1, g2);
    if (g1.bound() != 1) throw std::invalid_argument("compose_n1_closed: bound must be 1");
    const Rat& u = g1.u;
    const Rat& v = g2.u;
    const Rat& a0 = g1.poly.coeff(0);
    const Rat& a1 = g1.poly.coeff(1);
    const Rat& b0 = g2.poly.coeff(0);
    const Rat& b1 = g2.poly.coeff(1);
    Poly out(1, {a0 + b0 + (u * b1 - v * a1) / Rat(2), a1 + b1});
    return GroupElement(u + v, std::move(out));
}

GroupElement compose_n2_closed(const GroupElement& g1, const GroupElement& g2) {
    check_bounds(g1, g2);
    if (g1.bound() != 2) throw std::invalid_argument("compose_n2_closed: bound must be 2");
    const Rat& u = g1.u;
    const Rat& v = g2.u;
    const Rat& a0 = g1.poly.coeff(0);
    const Rat& a1 = g1.poly.coeff(1);
    const Rat& a2 = g1.poly.coeff(2);
    const Rat& b0 = g2.poly.coeff(0);
    const Rat& b1 = g2.poly.coeff(1);
    const Rat& b2 = g2.poly.coeff(2);
    Rat gamma = a0 + b0 - v * a1 / Rat(2) + u * b1 / Rat(2) + (v - u) * v * a2 / Rat(6) +
                (u - v) * u * b2 / Rat(6);
    Rat beta = a1 + b1 - v * a2 + u * b2;
    Rat alpha = a2 + b2;
    Poly out(2, {std::move(gamma), std::move(beta), std::move(alpha)});
    return GroupElement(u + v, std::move(out));
}

}  // namespace heispoly
