#pragma once

#include "heispoly/poly.hpp"
#include "heispoly/rat.hpp"

namespace heispoly {

/// Element (u, P') of the polynomial Heisenberg group over R_N[x]: u is the
/// momentum coefficient, P' the position polynomial. The constant term of P'
/// is the central coordinate, so the manifold is R x R_N[x].
struct GroupElement {
    Rat u;
    Poly poly;

    GroupElement(Rat u_, Poly poly_) : u(std::move(u_)), poly(std::move(poly_)) {}
    int bound() const { return poly.bound(); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.u == b.u && a.poly == b.poly;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

/// Neutral element (0, 0) at the given bound.
GroupElement identity_element(int bound);

/// Group law (u,P') o (v,Q') = (u+v, T^{-1}_{u+v}(T_u P' + T_v S_u Q')).
GroupElement compose(const GroupElement& g1, const GroupElement& g2);

/// (-u, -P'); two-sided inverse for the group law.
GroupElement inverse(const GroupElement& g);

/// Zero-extension into the group over R_M[x], M >= bound. Commutes with compose.
GroupElement embed(const GroupElement& g, int bound);

/// Cocycle: the degree-zero coefficient of the composed polynomial, for
/// elements whose polynomials vanish at 0. Computed by direct composition;
/// this route is normative.
Rat sigma(const GroupElement& g1, const GroupElement& g2);

/// Cocycle by the closed partition-coefficient formula. Must agree with
/// sigma(); kept as an independent evaluation route.
Rat sigma_closed(const GroupElement& g1, const GroupElement& g2);

/// Closed composition law at bound 1:
/// (u, a0+a1 x) o (v, b0+b1 x) = (u+v, a0+b0 + (u b1 - v a1)/2 + (a1+b1) x).
GroupElement compose_n1_closed(const GroupElement& g1, const GroupElement& g2);

/// Closed composition law at bound 2 (explicit gamma/beta/alpha coefficients).
GroupElement compose_n2_closed(const GroupElement& g1, const GroupElement& g2);

}  // namespace heispoly
