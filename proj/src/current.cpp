#include "heispoly/current.hpp"

#include <stdexcept>

#include "heispoly/group.hpp"
#include "heispoly/poly.hpp"

namespace heispoly {

CurrentElement::CurrentElement(int bound_, Rat central_, StepFunction g_,
                               std::vector<StepFunction> fs_)
    : bound(bound_), central(std::move(central_)), g(std::move(g_)), fs(std::move(fs_)) {
    if (bound < 1) throw std::invalid_argument("CurrentElement: bound must be >= 1");
    if (fs.size() != static_cast<std::size_t>(bound))
        throw std::invalid_argument("CurrentElement: need one density per power");
}

CurrentElement neutral_current(int bound) {
    return CurrentElement(bound, Rat(0), StepFunction(),
                          std::vector<StepFunction>(static_cast<std::size_t>(bound)));
}

CurrentElement current_compose(const CurrentElement& e1, const CurrentElement& e2) {
    if (e1.bound != e2.bound) throw std::invalid_argument("current_compose: bound mismatch");
    const int n = e1.bound;

    std::vector<const StepFunction*> all{&e1.g, &e2.g};
    for (const StepFunction& f : e1.fs) all.push_back(&f);
    for (const StepFunction& f : e2.fs) all.push_back(&f);
    const std::vector<Rat> grid = refine_all(all);

    Rat central = e1.central + e2.central;
    std::vector<std::vector<Rat>> out_values(static_cast<std::size_t>(n));
    for (auto& v : out_values) v.reserve(grid.empty() ? 0 : grid.size() - 1);

    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const Rat& s = grid[i];
        Poly p1(n);
        Poly p2(n);
        for (int k = 1; k <= n; ++k) {
            p1.set_coeff(k, e1.fs[static_cast<std::size_t>(k) - 1].value_at(s));
            p2.set_coeff(k, e2.fs[static_cast<std::size_t>(k) - 1].value_at(s));
        }
        GroupElement cell = compose(GroupElement(e1.g.value_at(s), std::move(p1)),
                                    GroupElement(e2.g.value_at(s), std::move(p2)));
        central += cell.poly.coeff(0) * (grid[i + 1] - s);
        for (int k = 1; k <= n; ++k)
            out_values[static_cast<std::size_t>(k) - 1].push_back(cell.poly.coeff(k));
    }

    std::vector<StepFunction> fs;
    fs.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        fs.emplace_back(grid, std::move(out_values[static_cast<std::size_t>(k)]));
    return CurrentElement(n, std::move(central), e1.g + e2.g, std::move(fs));
}

CurrentElement galilei_compose_closed(const CurrentElement& e1, const CurrentElement& e2) {
    if (e1.bound != e2.bound) throw std::invalid_argument("galilei_compose_closed: bound mismatch");
    if (e1.bound != 2) throw std::invalid_argument("galilei_compose_closed: bound must be 2");
    const StepFunction& g = e1.g;
    const StepFunction& G = e2.g;
    const StepFunction& f1 = e1.fs[0];
    const StepFunction& f2 = e1.fs[1];
    const StepFunction& F1 = e2.fs[0];
    const StepFunction& F2 = e2.fs[1];

    Rat central = e1.central + e2.central + inner(g, F1) / Rat(2) - inner(G, f1) / Rat(2) +
                  inner(g, (g - G) * F2) / Rat(6) + inner(G, (G - g) * f2) / Rat(6);
    StepFunction q_part = f1 + F1 + g * F2 - G * f2;
    StepFunction q2_part = f2 + F2;
    return CurrentElement(2, std::move(central), g + G, {std::move(q_part), std::move(q2_part)});
}

Rat weyl_phase(const StepFunction& f_re, const StepFunction& f_im, const StepFunction& h_re,
               const StepFunction& h_im) {
    return -(inner(f_re, h_im) - inner(f_im, h_re));
}

}  // namespace heispoly
