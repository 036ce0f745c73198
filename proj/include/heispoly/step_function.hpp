#pragma once

#include <vector>

#include "heispoly/rat.hpp"

namespace heispoly {

/// Compactly supported rational step function, right-continuous: value
/// values()[i] on [breaks()[i], breaks()[i+1]), zero outside the support.
/// Always canonical: strictly increasing breakpoints, adjacent cells with
/// equal values merged, zero-valued boundary cells trimmed. The zero function
/// has no breakpoints.
class StepFunction {
  public:
    StepFunction() = default;

    /// breaks.size() == values.size() + 1, breaks strictly increasing.
    /// The input is canonicalized.
    StepFunction(std::vector<Rat> breaks, std::vector<Rat> values);

    /// Indicator c * 1_[lo, hi).
    static StepFunction indicator(const Rat& lo, const Rat& hi, Rat c = Rat(1));

    const std::vector<Rat>& breaks() const { return breaks_; }
    const std::vector<Rat>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    Rat value_at(const Rat& x) const;

    StepFunction operator-() const;
    friend StepFunction operator+(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator-(const StepFunction& a, const StepFunction& b);
    /// Pointwise product.
    friend StepFunction operator*(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator*(const Rat& s, const StepFunction& f);

    /// Canonical form makes equality structural.
    friend bool operator==(const StepFunction& a, const StepFunction& b) {
        return a.breaks_ == b.breaks_ && a.values_ == b.values_;
    }
    friend bool operator!=(const StepFunction& a, const StepFunction& b) { return !(a == b); }

  private:
    std::vector<Rat> breaks_;
    std::vector<Rat> values_;
};

/// Merged breakpoint grid on which both functions are constant per cell.
std::vector<Rat> refine(const StepFunction& a, const StepFunction& b);

/// Merged breakpoint grid for an arbitrary family.
std::vector<Rat> refine_all(const std::vector<const StepFunction*>& fs);

/// Exact pairing <a, b> = integral of a*b.
Rat inner(const StepFunction& a, const StepFunction& b);

}  // namespace heispoly
