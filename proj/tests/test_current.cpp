#include <doctest.h>

#include "heispoly/current.hpp"
#include "heispoly/group.hpp"
#include "heispoly/verify.hpp"

using namespace heispoly;

namespace {

// Independent cellwise route: composes on an explicitly supplied grid by
// sampling the densities, used to check grid-refinement invariance.
CurrentElement compose_on_grid(const CurrentElement& a, const CurrentElement& b,
                               const std::vector<Rat>& grid) {
    const int n = a.bound;
    Rat central = a.central + b.central;
    std::vector<std::vector<Rat>> values(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        Poly p1(n);
        Poly p2(n);
        for (int k = 1; k <= n; ++k) {
            p1.set_coeff(k, a.fs[static_cast<std::size_t>(k) - 1].value_at(grid[i]));
            p2.set_coeff(k, b.fs[static_cast<std::size_t>(k) - 1].value_at(grid[i]));
        }
        const GroupElement cell = compose(GroupElement(a.g.value_at(grid[i]), std::move(p1)),
                                          GroupElement(b.g.value_at(grid[i]), std::move(p2)));
        central += cell.poly.coeff(0) * (grid[i + 1] - grid[i]);
        for (int k = 1; k <= n; ++k)
            values[static_cast<std::size_t>(k) - 1].push_back(cell.poly.coeff(k));
    }
    std::vector<StepFunction> fs;
    for (int k = 0; k < n; ++k) fs.emplace_back(grid, std::move(values[static_cast<std::size_t>(k)]));
    return CurrentElement(n, std::move(central), a.g + b.g, std::move(fs));
}

std::vector<Rat> with_midpoints(const std::vector<Rat>& grid) {
    std::vector<Rat> out;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        out.push_back(grid[i]);
        out.push_back((grid[i] + grid[i + 1]) / Rat(2));
    }
    if (!grid.empty()) out.push_back(grid.back());
    return out;
}

std::vector<const StepFunction*> densities(const CurrentElement& a, const CurrentElement& b) {
    std::vector<const StepFunction*> all{&a.g, &b.g};
    for (const StepFunction& f : a.fs) all.push_back(&f);
    for (const StepFunction& f : b.fs) all.push_back(&f);
    return all;
}

}  // namespace

TEST_CASE("step functions canonicalize") {
    // adjacent equal cells merge
    CHECK(StepFunction({Rat(0), Rat(1), Rat(2)}, {Rat(3), Rat(3)}) ==
          StepFunction::indicator(Rat(0), Rat(2), Rat(3)));
    // zero boundary cells drop
    CHECK(StepFunction({Rat(-1), Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(5), Rat(0)}) ==
          StepFunction::indicator(Rat(0), Rat(1), Rat(5)));
    CHECK(StepFunction({Rat(0), Rat(1)}, {Rat(0)}).is_zero());
    CHECK(StepFunction().is_zero());
    CHECK_THROWS_AS(StepFunction({Rat(1), Rat(0)}, {Rat(2)}), std::invalid_argument);
    CHECK_THROWS_AS(StepFunction({Rat(0)}, {Rat(2)}), std::invalid_argument);

    const StepFunction f({Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(2)});
    CHECK(f.value_at(Rat(1, 2)) == Rat(1));
    CHECK(f.value_at(Rat(1)) == Rat(2));
    CHECK(f.value_at(Rat(2)) == Rat(0));
    CHECK(f.value_at(Rat(-1)) == Rat(0));
}

TEST_CASE("refinement grids") {
    const StepFunction a = StepFunction::indicator(Rat(0), Rat(2));
    const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
    CHECK(refine(a, b) == std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(3)});
    CHECK(refine(a, a) == a.breaks());
    const StepFunction c = StepFunction::indicator(Rat(5), Rat(6));
    CHECK(refine(a, c) == std::vector<Rat>{Rat(0), Rat(2), Rat(5), Rat(6)});
}

TEST_CASE("pairings integrate exactly") {
    const StepFunction a = StepFunction::indicator(Rat(0), Rat(2));
    const StepFunction b = StepFunction::indicator(Rat(1), Rat(3));
    CHECK(inner(a, b) == Rat(1));
    CHECK(inner(a, StepFunction()) == Rat(0));
    CHECK(inner(StepFunction::indicator(Rat(0), Rat(1, 2), Rat(2)),
                StepFunction::indicator(Rat(0), Rat(1, 2), Rat(3))) == Rat(3));
}

TEST_CASE("continuous law on a unit cell") {
    const CurrentElement e1(2, Rat(0), StepFunction::indicator(Rat(0), Rat(1)),
                            {StepFunction(), StepFunction()});
    const CurrentElement e2(2, Rat(0), StepFunction(),
                            {StepFunction(), StepFunction::indicator(Rat(0), Rat(1))});
    const CurrentElement out = current_compose(e1, e2);
    CHECK(out.central == Rat(1, 6));
    CHECK(out.g == StepFunction::indicator(Rat(0), Rat(1)));
    CHECK(out.fs[0] == StepFunction::indicator(Rat(0), Rat(1)));
    CHECK(out.fs[1] == StepFunction::indicator(Rat(0), Rat(1)));

    CHECK(current_compose(e1, neutral_current(2)) == e1);
    CHECK(current_compose(neutral_current(2), e1) == e1);
}

TEST_CASE("disjoint supports add componentwise") {
    const CurrentElement e1(1, Rat(2), StepFunction::indicator(Rat(0), Rat(1), Rat(3)),
                            {StepFunction::indicator(Rat(0), Rat(1), Rat(4))});
    const CurrentElement e2(1, Rat(5), StepFunction::indicator(Rat(7), Rat(8), Rat(-1)),
                            {StepFunction::indicator(Rat(7), Rat(8), Rat(2))});
    const CurrentElement out = current_compose(e1, e2);
    CHECK(out.central == Rat(7));
    CHECK(out.g == e1.g + e2.g);
    CHECK(out.fs[0] == e1.fs[0] + e2.fs[0]);
}

TEST_CASE("unit cells reproduce the discrete law") {
    RandomSource src(21);
    for (int it = 0; it < 150; ++it) {
        const int n = src.integer(1, 6);
        const GroupElement d1 = src.zero_constant_element(n);
        const GroupElement d2 = src.zero_constant_element(n);
        auto lift = [&](const GroupElement& d) {
            std::vector<StepFunction> fs;
            for (int k = 1; k <= n; ++k)
                fs.push_back(StepFunction::indicator(Rat(0), Rat(1), d.poly.coeff(k)));
            return CurrentElement(n, Rat(0), StepFunction::indicator(Rat(0), Rat(1), d.u),
                                  std::move(fs));
        };
        const CurrentElement composed = current_compose(lift(d1), lift(d2));
        const GroupElement discrete = compose(d1, d2);
        CHECK(composed.central == discrete.poly.coeff(0));
        for (int k = 1; k <= n; ++k)
            CHECK(composed.fs[static_cast<std::size_t>(k) - 1] ==
                  StepFunction::indicator(Rat(0), Rat(1), discrete.poly.coeff(k)));
    }
}

TEST_CASE("continuous law is associative") {
    RandomSource src(22);
    for (int it = 0; it < 80; ++it) {
        const int n = src.integer(1, 4);
        const CurrentElement a = src.current_element(n);
        const CurrentElement b = src.current_element(n);
        const CurrentElement c = src.current_element(n);
        CHECK(current_compose(current_compose(a, b), c) ==
              current_compose(a, current_compose(b, c)));
        CHECK(current_compose(a, neutral_current(n)) == a);
        CHECK_THROWS_AS(current_compose(src.current_element(1), src.current_element(2)),
                        std::invalid_argument);
    }
}

TEST_CASE("closed continuous law at bound 2") {
    const CurrentElement e1(2, Rat(0), StepFunction::indicator(Rat(0), Rat(1)),
                            {StepFunction(), StepFunction()});
    const CurrentElement e2(2, Rat(0), StepFunction(),
                            {StepFunction(), StepFunction::indicator(Rat(0), Rat(1))});
    CHECK(galilei_compose_closed(e1, e2).central == Rat(1, 6));

    RandomSource src(23);
    for (int it = 0; it < 100; ++it) {
        const CurrentElement a = src.current_element(2);
        const CurrentElement b = src.current_element(2);
        CHECK(galilei_compose_closed(a, b) == current_compose(a, b));
    }
    // equal momentum and densities cancel the antisymmetric pairings
    const CurrentElement same(2, Rat(0), StepFunction::indicator(Rat(0), Rat(2), Rat(3)),
                              {StepFunction::indicator(Rat(0), Rat(2), Rat(1)),
                               StepFunction::indicator(Rat(0), Rat(2), Rat(-2))});
    CHECK(galilei_compose_closed(same, same).central == Rat(0));
    CHECK(galilei_compose_closed(same, neutral_current(2)) == same);
    CHECK_THROWS_AS(galilei_compose_closed(neutral_current(1), neutral_current(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(neutral_current(0), std::invalid_argument);
    CHECK_THROWS_AS(CurrentElement(2, Rat(0), StepFunction(), {StepFunction()}),
                    std::invalid_argument);
}

TEST_CASE("Weyl phase") {
    const StepFunction one = StepFunction::indicator(Rat(0), Rat(1));
    CHECK(weyl_phase(one, one, one, one) == Rat(0));
    // f = (1+i) 1_[0,1), h = (1-i) 1_[0,1): -Im<f,h> = -Im((1-i)^2) = 2
    CHECK(weyl_phase(one, one, one, -one) == Rat(2));
    const StepFunction far = StepFunction::indicator(Rat(5), Rat(6));
    CHECK(weyl_phase(one, one, far, far) == Rat(0));
}

TEST_CASE("bound-1 central term is the Weyl phase") {
    RandomSource src(24);
    for (int it = 0; it < 120; ++it) {
        const StepFunction f1 = src.step_function();
        const StepFunction f2 = src.step_function();
        const StepFunction h1 = src.step_function();
        const StepFunction h2 = src.step_function();
        // rational stand-in r = 2 for the sqrt2 scaling: r^2/2 == 2
        const Rat two(2);
        const CurrentElement lhs(1, Rat(0), two * f2, {two * f1});
        const CurrentElement rhs(1, Rat(0), two * h2, {two * h1});
        CHECK(current_compose(lhs, rhs).central == Rat(2) * weyl_phase(f1, f2, h1, h2));
    }
}

TEST_CASE("composition is invariant under grid refinement") {
    RandomSource src(25);
    for (int it = 0; it < 80; ++it) {
        const int n = src.integer(1, 4);
        const CurrentElement a = src.current_element(n);
        const CurrentElement b = src.current_element(n);
        const CurrentElement direct = current_compose(a, b);
        const std::vector<Rat> grid = refine_all(densities(a, b));
        CHECK(compose_on_grid(a, b, grid) == direct);
        CHECK(compose_on_grid(a, b, with_midpoints(grid)) == direct);
        CHECK(compose_on_grid(a, b, with_midpoints(with_midpoints(grid))) == direct);
    }
}
