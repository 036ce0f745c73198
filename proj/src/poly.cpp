#include "heispoly/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace heispoly {

Poly::Poly(int bound) : bound_(bound) {
    if (bound < 0) throw std::invalid_argument("Poly: negative bound");
    coeffs_.resize(static_cast<std::size_t>(bound) + 1);
}

Poly::Poly(int bound, std::vector<Rat> coeffs) : bound_(bound), coeffs_(std::move(coeffs)) {
    if (bound < 0) throw std::invalid_argument("Poly: negative bound");
    if (coeffs_.size() != static_cast<std::size_t>(bound) + 1)
        throw std::invalid_argument("Poly: coefficient count must be bound+1");
}

Poly Poly::monomial(int k, int bound, Rat c) {
    if (k < 0 || k > bound) throw std::invalid_argument("Poly: monomial degree outside bound");
    Poly p(bound);
    p.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return p;
}

bool Poly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.is_zero(); });
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    Poly out(bound_);
    for (int k = 0; k < bound_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] =
            Rat(k + 1) * coeffs_[static_cast<std::size_t>(k) + 1];
    return out;
}

Poly Poly::primitive() const {
    Poly out(bound_ + 1);
    for (int k = 0; k <= bound_; ++k)
        out.coeffs_[static_cast<std::size_t>(k) + 1] =
            coeffs_[static_cast<std::size_t>(k)] / Rat(k + 1);
    return out;
}

std::pair<Poly, Rat> Poly::project_zero() const {
    Poly rest = *this;
    Rat c0 = coeffs_[0];
    rest.coeffs_[0] = Rat(0);
    return {std::move(rest), std::move(c0)};
}

Poly Poly::with_bound(int m) const {
    if (m < bound_) throw std::invalid_argument("Poly: with_bound cannot shrink");
    Poly out(m);
    std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
    return out;
}

Poly Poly::operator-() const {
    Poly out(bound_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    int m = std::max(a.bound_, b.bound_);
    Poly out = a.with_bound(m);
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out.coeffs_[k] += b.coeffs_[k];
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Rat& s, const Poly& p) {
    Poly out(p.bound_);
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) out.coeffs_[k] = s * p.coeffs_[k];
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    int m = std::max(a.bound_, b.bound_);
    return a.with_bound(m).coeffs_ == b.with_bound(m).coeffs_;
}

}  // namespace heispoly
