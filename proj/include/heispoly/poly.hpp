#pragma once

#include <utility>
#include <vector>

#include "heispoly/rat.hpp"

namespace heispoly {

/// Polynomial of bounded degree over exact rationals in the monomial basis
/// {1, x, ..., x^bound}. Exactly bound+1 coefficients are stored; trailing
/// zeros are kept so the bound stays explicit. Two polynomials compare equal
/// when they agree after zero-extension to the larger bound.
class Poly {
  public:
    /// Zero polynomial of the given bound.
    explicit Poly(int bound);
    /// coeffs.size() must be bound+1; coeffs[k] multiplies x^k.
    Poly(int bound, std::vector<Rat> coeffs);

    /// c * x^k as an element of R_bound[x], k <= bound.
    static Poly monomial(int k, int bound, Rat c = Rat(1));

    int bound() const { return bound_; }
    const Rat& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, Rat c) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(c); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    /// Horner evaluation at x.
    Rat eval(const Rat& x) const;

    /// Formal derivative; the bound is preserved (top coefficient becomes 0).
    Poly derivative() const;

    /// Antiderivative with integration constant 0; the bound grows by one.
    Poly primitive() const;

    /// Splits p into (p - p(0), p(0)); the first part vanishes at 0.
    std::pair<Poly, Rat> project_zero() const;

    /// Zero-extension to a larger bound m >= bound().
    Poly with_bound(int m) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    int bound_;
    std::vector<Rat> coeffs_;
};

}  // namespace heispoly
