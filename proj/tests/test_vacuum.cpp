#include <doctest.h>

#include <cmath>

#include "heispoly/vacuum.hpp"
#include "heispoly/verify.hpp"

using namespace heispoly;
using doctest::Approx;

namespace {
const CF64 kI(0.0, 1.0);
}

TEST_CASE("gaussian expectations by quadrature") {
    CHECK(std::abs(gauss_expectation({}, CF64(0.0)) - 1.0) < 1e-12);
    CHECK(std::abs(gauss_expectation({}, CF64(1.0)) - std::exp(0.5)) < 1e-10);
    // E[e^{i X^2 / 2}] = (1 - i)^{-1/2}
    const CF64 expected(0.7768869870150188, 0.3217971264527913);
    CHECK(std::abs(gauss_expectation({CF64(0.0), CF64(0.0), CF64(0.5)}, CF64(0.0)) - expected) <
          1e-9);
}

TEST_CASE("quadrature failure paths are loud") {
    // a degree-8 phase oscillates too fast for the node budget
    std::vector<CF64> octic(9, CF64(0.0));
    octic[8] = CF64(0.3);
    CHECK_THROWS_AS(gauss_expectation(octic, CF64(0.0)), numerical_error);
    // overflow in the linear weight surfaces as a numerical error, not a NaN
    CHECK_THROWS_AS(gauss_expectation({}, CF64(1000.0)), numerical_error);
    CHECK_THROWS_AS(gauss_expectation(std::vector<CF64>(10, CF64(0.0)), CF64(0.0)),
                    std::invalid_argument);

    QuadratureSpec bad;
    bad.initial_nodes = 4;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadratureSpec{};
    bad.tolerance = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = QuadratureSpec{};
    bad.max_nodes = 100;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("quadratic characteristic function closed form") {
    CHECK(charfn_quadratic(0, 0, 0) == CF64(1.0));
    CHECK(std::abs(charfn_quadratic(0.5, 0, 0) - CF64(0.7768869870150188, 0.3217971264527913)) <
          1e-15);
    const double beta = 0.8;
    const double gamma = -0.6;
    const CF64 expected = std::exp(CF64(gamma * gamma / 2 - beta * beta / 2, beta * gamma));
    CHECK(std::abs(charfn_quadratic(0, beta, gamma) - expected) < 1e-15);
}

TEST_CASE("closed form equals quadrature over the coefficient box") {
    RandomSource src(31);
    for (int it = 0; it < 40; ++it) {
        const double alpha = src.real(-2, 2);
        const double beta = src.real(-2, 2);
        const double gamma = src.real(-2, 2);
        const CF64 closed = charfn_quadratic(alpha, beta, gamma);
        const CF64 quad =
            gauss_expectation({CF64(0.0), CF64(beta), CF64(alpha)}, CF64(gamma, 0.0));
        CHECK(std::abs(closed - quad) < 1e-8);
    }
}

TEST_CASE("vacuum characteristic function of quadratic observables") {
    CHECK(charfn_heis2(0.7, -0.3, 0.4, 0.0) == CF64(1.0));
    for (double t : {-0.5, -0.1, 0.2, 0.45}) {
        CHECK(std::abs(charfn_heis2(0, 1, 0, t) - std::exp(-t * t / 2)) < 1e-15);
        CHECK(std::abs(charfn_heis2(1, 0, 0, t) - 1.0 / std::sqrt(CF64(1.0, -2.0 * t))) < 1e-15);
    }
}

TEST_CASE("characteristic functions are Hermitian and bounded") {
    RandomSource src(32);
    for (int it = 0; it < 60; ++it) {
        const double A = src.real(-1, 1);
        const double B = src.real(-1, 1);
        const double C = src.real(-1, 1);
        const double t = src.real(-0.5, 0.5);
        const CF64 v = charfn_heis2(A, B, C, t);
        CHECK(std::abs(charfn_heis2(A, B, C, -t) - std::conj(v)) < 1e-14);
        CHECK(std::abs(v) <= 1.0 + 1e-12);
    }
}

TEST_CASE("principal branch stays continuous along a time sweep") {
    for (double A : {-1.0, 0.6, 1.0}) {
        CF64 prev = charfn_heis2(A, 0.4, 0.8, -2.0);
        for (double t = -2.0 + 1e-3; t <= 2.0; t += 1e-3) {
            const CF64 cur = charfn_heis2(A, 0.4, 0.8, t);
            CHECK(std::abs(cur - prev) < 0.05);
            prev = cur;
        }
    }
}

TEST_CASE("q-projection path matches the closed form") {
    CHECK(std::abs(charfn_general(0.0, {}) - 1.0) < 1e-12);
    // momentum alone: <vac, e^{iup} vac> = e^{-u^2/4} after the q reduction
    CHECK(std::abs(charfn_general(0.6, {}) - std::exp(-0.36 / 4.0)) < 1e-10);
    CHECK(std::abs(charfn_general(0.0, {0.0, 0.7}) - std::exp(-0.7 * 0.7 / 4.0)) < 1e-10);

    auto general_of = [](double A, double B, double C, double t) {
        const double s2 = std::sqrt(2.0);
        return charfn_general(s2 * C * t, {0.0, s2 * B * t, 2.0 * A * t});
    };
    CHECK(std::abs(general_of(1, 1, 1, 0.3) - charfn_heis2(1, 1, 1, 0.3)) < 1e-8);

    RandomSource src(33);
    for (int it = 0; it < 25; ++it) {
        const double A = src.real(-1, 1);
        const double B = src.real(-1, 1);
        const double C = src.real(-1, 1);
        const double t = src.real(-0.5, 0.5);
        CHECK(std::abs(general_of(A, B, C, t) - charfn_heis2(A, B, C, t)) < 1e-8);
    }
}

TEST_CASE("constant terms contribute a pure phase") {
    const CF64 base = charfn_general(0.4, {0.0, 0.5, 0.2});
    const CF64 shifted = charfn_general(0.4, {0.9, 0.5, 0.2});
    CHECK(std::abs(shifted - std::exp(kI * 0.9) * base) < 1e-10);

    const GroupElement g(Rat(2, 5), Poly(2, {Rat(0), Rat(1, 2), Rat(1, 5)}));
    CHECK(std::abs(charfn_general(g) - base) < 1e-12);
}

TEST_CASE("partition enumeration") {
    auto count = [](int n) {
        int c = 0;
        for_each_partition(n, [&](const std::vector<int>&) { ++c; });
        return c;
    };
    CHECK(count(1) == 1);
    CHECK(count(6) == 11);
    CHECK(count(10) == 42);
}

TEST_CASE("vacuum moments against the worked values") {
    CHECK(moments_heis2(0.3, -1, 2, 0) == 1.0);
    CHECK(moments_heis2(1, 0, 0, 1) == Approx(1.0).epsilon(1e-12));
    CHECK(moments_heis2(1, 0, 0, 2) == Approx(3.0).epsilon(1e-12));
    CHECK(moments_heis2(1, 0, 0, 3) == Approx(15.0).epsilon(1e-12));
    const double B = 0.7;
    const double C = -0.4;
    CHECK(moments_heis2(0, B, C, 2) == Approx(B * B + C * C).epsilon(1e-12));
    CHECK(moments_heis2(0.8, 0.1, -0.2, 1) == Approx(0.8).epsilon(1e-12));
    CHECK_THROWS_AS(moments_heis2(1, 0, 0, 31), std::invalid_argument);
}

TEST_CASE("the 2^{3n} prefactor variant fails the mean witness") {
    // E(X) must equal A; the variant yields 4A already at n = 1.
    CHECK(std::abs(moments_printed_variant(1, 0, 0, 1) - 1.0) > 0.5);
    CHECK(moments_printed_variant(1, 0, 0, 1) == Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(moments_heis2(1, 0, 0, 1) - 1.0) < 1e-12);
}

TEST_CASE("partition moments match the Fock oracle") {
    CHECK(moments_oracle(1, 0, 0, 2) == Approx(3.0).epsilon(1e-12));
    CHECK(moments_oracle(0, 1, 0, 2) == Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(moments_oracle(0, 0, 1, 1)) < 1e-14);

    RandomSource src(34);
    for (int it = 0; it < 25; ++it) {
        const double A = src.real(-1, 1);
        const double B = src.real(-1, 1);
        const double C = src.real(-1, 1);
        for (int n = 0; n <= 12; ++n) {
            const double direct = moments_heis2(A, B, C, n);
            const double oracle = moments_oracle(A, B, C, n);
            const double scale = std::max({std::abs(direct), std::abs(oracle), 1.0});
            CHECK(std::abs(direct - oracle) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("finite differences of the characteristic function recover moments") {
    const double h = 1e-3;
    auto check_point = [&](double A, double B, double C) {
        auto f = [&](double t) { return charfn_heis2(A, B, C, t); };
        const CF64 f0 = f(0), f1 = f(h), fm1 = f(-h), f2 = f(2 * h), fm2 = f(-2 * h);
        const CF64 d1 = (f1 - fm1) / (2 * h);
        const CF64 d2 = (f1 - 2.0 * f0 + fm1) / (h * h);
        const CF64 d3 = (f2 - 2.0 * f1 + 2.0 * fm1 - fm2) / (2 * h * h * h);
        const CF64 d4 = (f2 - 4.0 * f1 + 6.0 * f0 - 4.0 * fm1 + fm2) / (h * h * h * h);
        const CF64 deriv[] = {d1, d2, d3, d4};
        for (int n = 1; n <= 4; ++n) {
            const double expected = moments_heis2(A, B, C, n);
            const double got = (std::pow(kI, -n) * deriv[n - 1]).real();
            CHECK(std::abs(got - expected) <= 1e-3 * std::max(std::abs(expected), 1.0));
        }
    };
    check_point(1, 0, 0);
    check_point(0.5, 0.3, -0.4);
    check_point(0, 1, 1);
    check_point(-0.7, 0.2, 0.9);
}

TEST_CASE("overlap specializations") {
    const QuadObservable p{0.6, -0.8, 0.5};
    for (double t : {-0.4, 0.1, 0.5}) {
        CHECK(overlap_heis2(p, p, t) == CF64(1.0));
        CHECK(std::abs(overlap_heis2(QuadObservable{}, p, t) - charfn_heis2(p.a, p.b, p.c, t)) <
              1e-14);
    }
}
