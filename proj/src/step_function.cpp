#include "heispoly/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace heispoly {

namespace {

// Rebuilds the canonical representation: merge equal-valued neighbours, then
// drop zero cells at either end (they coincide with the implicit outside zero).
void canonicalize(std::vector<Rat>& breaks, std::vector<Rat>& values) {
    if (values.empty()) {
        breaks.clear();
        return;
    }
    std::vector<Rat> nb;
    std::vector<Rat> nv;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!nv.empty() && nv.back() == values[i]) continue;
        nb.push_back(breaks[i]);
        nv.push_back(values[i]);
    }
    nb.push_back(breaks.back());
    if (nv.front().is_zero()) {
        nv.erase(nv.begin());
        nb.erase(nb.begin());
    }
    if (!nv.empty() && nv.back().is_zero()) {
        nv.pop_back();
        nb.pop_back();
    }
    if (nv.empty()) nb.clear();
    breaks = std::move(nb);
    values = std::move(nv);
}

}  // namespace

StepFunction::StepFunction(std::vector<Rat> breaks, std::vector<Rat> values) {
    if (breaks.empty() && values.empty()) return;
    if (breaks.size() != values.size() + 1)
        throw std::invalid_argument("StepFunction: need one more breakpoint than values");
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (!(breaks[i] < breaks[i + 1]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    canonicalize(breaks, values);
    breaks_ = std::move(breaks);
    values_ = std::move(values);
}

StepFunction StepFunction::indicator(const Rat& lo, const Rat& hi, Rat c) {
    return StepFunction({lo, hi}, {std::move(c)});
}

Rat StepFunction::value_at(const Rat& x) const {
    if (values_.empty()) return Rat(0);
    if (x < breaks_.front() || !(x < breaks_.back())) return Rat(0);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

std::vector<Rat> refine(const StepFunction& a, const StepFunction& b) {
    return refine_all({&a, &b});
}

std::vector<Rat> refine_all(const std::vector<const StepFunction*>& fs) {
    std::vector<Rat> grid;
    for (const StepFunction* f : fs)
        grid.insert(grid.end(), f->breaks().begin(), f->breaks().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

StepFunction combine(const StepFunction& a, const StepFunction& b,
                     Rat (*op)(const Rat&, const Rat&)) {
    std::vector<Rat> grid = refine(a, b);
    if (grid.size() < 2) return StepFunction();
    std::vector<Rat> values;
    values.reserve(grid.size() - 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        values.push_back(op(a.value_at(grid[i]), b.value_at(grid[i])));
    return StepFunction(std::move(grid), std::move(values));
}

}  // namespace

StepFunction StepFunction::operator-() const { return Rat(-1) * *this; }

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, +[](const Rat& x, const Rat& y) { return x + y; });
}

StepFunction operator-(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, +[](const Rat& x, const Rat& y) { return x - y; });
}

StepFunction operator*(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, +[](const Rat& x, const Rat& y) { return x * y; });
}

StepFunction operator*(const Rat& s, const StepFunction& f) {
    if (f.is_zero()) return f;
    std::vector<Rat> values;
    values.reserve(f.values().size());
    for (const Rat& v : f.values()) values.push_back(s * v);
    return StepFunction(f.breaks(), std::move(values));
}

Rat inner(const StepFunction& a, const StepFunction& b) {
    std::vector<Rat> grid = refine(a, b);
    Rat total;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        total += a.value_at(grid[i]) * b.value_at(grid[i]) * (grid[i + 1] - grid[i]);
    return total;
}

}  // namespace heispoly
