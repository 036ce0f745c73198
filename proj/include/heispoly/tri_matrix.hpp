#pragma once

#include <vector>

#include "heispoly/poly.hpp"
#include "heispoly/rat.hpp"

namespace heispoly {

/// Exact-rational matrix acting on R_N[x] in the monomial basis {1, ..., x^N}.
/// Entry (m, n) multiplies the input coefficient of x^n into the output
/// coefficient of x^m. With this convention the averaging operator T_w, the
/// shift S_u and the strict part T(w) are all upper triangular; T_w and S_u
/// are unit triangular and the strict part has zero diagonal.
class TriMatrix {
  public:
    explicit TriMatrix(int bound);
    static TriMatrix identity(int bound);

    int bound() const { return bound_; }
    int dim() const { return bound_ + 1; }

    const Rat& at(int m, int n) const;
    Rat& at(int m, int n);

    bool is_zero() const;

    TriMatrix operator-() const;
    friend TriMatrix operator+(const TriMatrix& a, const TriMatrix& b);
    friend TriMatrix operator-(const TriMatrix& a, const TriMatrix& b);
    friend TriMatrix operator*(const Rat& s, const TriMatrix& m);
    friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
    friend bool operator==(const TriMatrix& a, const TriMatrix& b);
    friend bool operator!=(const TriMatrix& a, const TriMatrix& b) { return !(a == b); }

  private:
    int bound_;
    std::vector<Rat> entries_;  // row-major, dim() x dim()
};

/// Shift operator S_u: (S_u p)(x) = p(x + u). Entry (h, k) = C(k, h) u^{k-h}.
TriMatrix s_matrix(const Rat& u, int bound);

/// Averaging operator T_w = (P(.+w) - P)/w for any primitive P, with T_0 = id.
/// Column k follows T_w x^k = sum_h k!/((k+1-h)! h!) w^{k-h} x^h.
TriMatrix t_matrix(const Rat& w, int bound);

/// Strict (nilpotent) part T(w) = T_w - I.
TriMatrix t_strict(const Rat& w, int bound);

/// Inverse of T_w via the nilpotent expansion sum_{k=0}^{N} (-1)^k T(w)^k.
TriMatrix t_inverse(const Rat& w, int bound);

/// Closed form for the k-th power of the strict part T(w): entries
/// t_{ij}(w) C^{[k]}_{ij} with C^{[k]}_{ij} = sum_h C^{(h)}_{ij} C^{[k-1]}_{ih},
/// C^{(h)}_{ij} = (j+1-i)!/((h+1-i)!(j+1-h)!) for i < h < j, C^{[1]}_{ij} = [i<j].
/// Requires k >= 1; the result is the zero matrix for k > bound.
TriMatrix t_power_closed(const Rat& w, int k, int bound);

/// Matrix action on coefficient vectors. Bounds must match.
Poly apply(const TriMatrix& m, const Poly& p);

}  // namespace heispoly
