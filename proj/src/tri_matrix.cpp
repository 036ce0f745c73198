#include "heispoly/tri_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace heispoly {

namespace {

// t_{mn}(w) = [m < n] * n!/((n+1-m)! m!) * w^{n-m}
Rat t_coeff(const Rat& w, int m, int n) {
    if (m >= n) return Rat(0);
    Rat c = factorial(static_cast<unsigned>(n)) /
            (factorial(static_cast<unsigned>(n + 1 - m)) * factorial(static_cast<unsigned>(m)));
    return c * pow(w, static_cast<unsigned>(n - m));
}

}  // namespace

TriMatrix::TriMatrix(int bound) : bound_(bound) {
    if (bound < 0) throw std::invalid_argument("TriMatrix: negative bound");
    entries_.resize(static_cast<std::size_t>(dim()) * static_cast<std::size_t>(dim()));
}

TriMatrix TriMatrix::identity(int bound) {
    TriMatrix m(bound);
    for (int i = 0; i <= bound; ++i) m.at(i, i) = Rat(1);
    return m;
}

const Rat& TriMatrix::at(int m, int n) const {
    if (m < 0 || m > bound_ || n < 0 || n > bound_)
        throw std::out_of_range("TriMatrix: index outside bound");
    return entries_[static_cast<std::size_t>(m) * static_cast<std::size_t>(dim()) +
                    static_cast<std::size_t>(n)];
}

Rat& TriMatrix::at(int m, int n) {
    return const_cast<Rat&>(static_cast<const TriMatrix&>(*this).at(m, n));
}

bool TriMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& e) { return e.is_zero(); });
}

TriMatrix TriMatrix::operator-() const {
    TriMatrix out(bound_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

TriMatrix operator+(const TriMatrix& a, const TriMatrix& b) {
    if (a.bound_ != b.bound_) throw std::invalid_argument("TriMatrix: bound mismatch");
    TriMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

TriMatrix operator-(const TriMatrix& a, const TriMatrix& b) { return a + (-b); }

TriMatrix operator*(const Rat& s, const TriMatrix& m) {
    TriMatrix out(m.bound_);
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = s * m.entries_[i];
    return out;
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
    if (a.bound_ != b.bound_) throw std::invalid_argument("TriMatrix: bound mismatch");
    TriMatrix out(a.bound_);
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.dim(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

bool operator==(const TriMatrix& a, const TriMatrix& b) {
    return a.bound_ == b.bound_ && a.entries_ == b.entries_;
}

TriMatrix s_matrix(const Rat& u, int bound) {
    TriMatrix m(bound);
    for (int h = 0; h <= bound; ++h)
        for (int k = h; k <= bound; ++k)
            m.at(h, k) = binomial(static_cast<unsigned>(k), static_cast<unsigned>(h)) *
                         pow(u, static_cast<unsigned>(k - h));
    return m;
}

TriMatrix t_strict(const Rat& w, int bound) {
    TriMatrix m(bound);
    for (int i = 0; i <= bound; ++i)
        for (int j = i + 1; j <= bound; ++j) m.at(i, j) = t_coeff(w, i, j);
    return m;
}

TriMatrix t_matrix(const Rat& w, int bound) {
    // w == 0 lands on the identity with no special case: w^{n-m} vanishes
    // strictly above the diagonal.
    TriMatrix m = t_strict(w, bound);
    for (int i = 0; i <= bound; ++i) m.at(i, i) = Rat(1);
    return m;
}

TriMatrix t_inverse(const Rat& w, int bound) {
    TriMatrix acc = TriMatrix::identity(bound);
    TriMatrix power = TriMatrix::identity(bound);
    const TriMatrix strict = t_strict(w, bound);
    for (int k = 1; k <= bound; ++k) {
        power = power * strict;
        if (power.is_zero()) break;
        acc = (k % 2 == 0) ? acc + power : acc - power;
    }
    return acc;
}

TriMatrix t_power_closed(const Rat& w, int k, int bound) {
    if (k < 1) throw std::invalid_argument("t_power_closed: power must be >= 1");
    const int dim = bound + 1;
    // C^{[1]}_{ij} = [i < j], then C^{[k]}_{ij} = sum_h C^{(h)}_{ij} C^{[k-1]}_{ih}.
    std::vector<Rat> c(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) c[static_cast<std::size_t>(i) * dim + j] = Rat(1);
    for (int step = 2; step <= k; ++step) {
        std::vector<Rat> next(static_cast<std::size_t>(dim) * dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Rat sum;
                for (int h = i + 1; h < j; ++h) {
                    Rat chij = factorial(static_cast<unsigned>(j + 1 - i)) /
                               (factorial(static_cast<unsigned>(h + 1 - i)) *
                                factorial(static_cast<unsigned>(j + 1 - h)));
                    sum += chij * c[static_cast<std::size_t>(i) * dim + h];
                }
                next[static_cast<std::size_t>(i) * dim + j] = std::move(sum);
            }
        c = std::move(next);
    }
    TriMatrix out(bound);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            out.at(i, j) = t_coeff(w, i, j) * c[static_cast<std::size_t>(i) * dim + j];
    return out;
}

Poly apply(const TriMatrix& m, const Poly& p) {
    if (m.bound() != p.bound()) throw std::invalid_argument("apply: bound mismatch");
    Poly out(p.bound());
    for (int i = 0; i <= m.bound(); ++i) {
        Rat acc;
        for (int j = 0; j <= m.bound(); ++j) acc += m.at(i, j) * p.coeff(j);
        out.set_coeff(i, std::move(acc));
    }
    return out;
}

}  // namespace heispoly
