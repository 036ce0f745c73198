#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace heispoly {

/// Exact rational scalar. Always kept canonical: lowest terms, positive
/// denominator, zero stored as 0/1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses the canonical string form "p/q" or "p" (base 10, optional sign).
    static Rat parse(const std::string& s);

    /// Canonical string form: "3", "-1/2", "0".
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  private:
    mpq_class v_;
};

/// base^exp with the convention 0^0 == 1.
Rat pow(const Rat& base, unsigned exp);

/// n! as an exact rational (integer).
Rat factorial(unsigned n);

/// Binomial coefficient C(n, k), zero when k > n.
Rat binomial(unsigned n, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace heispoly
