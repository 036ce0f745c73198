#include "heispoly/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "heispoly/fock.hpp"
#include "heispoly/tri_matrix.hpp"
#include "heispoly/vacuum.hpp"

namespace heispoly {

Rat RandomSource::rat(long max_abs_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(num(rng_), den(rng_));
}

Rat RandomSource::nonzero_rat(long max_abs_num, long max_den) {
    for (;;) {
        Rat r = rat(max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

Poly RandomSource::poly(int bound) {
    Poly p(bound);
    for (int k = 0; k <= bound; ++k) p.set_coeff(k, rat());
    return p;
}

Poly RandomSource::zero_constant_poly(int bound) {
    Poly p = poly(bound);
    p.set_coeff(0, Rat(0));
    return p;
}

GroupElement RandomSource::element(int bound) { return GroupElement(rat(), poly(bound)); }

GroupElement RandomSource::zero_constant_element(int bound) {
    return GroupElement(rat(), zero_constant_poly(bound));
}

StepFunction RandomSource::step_function(int max_cells) {
    const int cells = integer(0, max_cells);
    if (cells == 0) return StepFunction();
    // Breakpoints drawn from the half-integer grid in [-4, 4].
    std::vector<int> ticks;
    std::uniform_int_distribution<int> tick(-8, 8);
    while (static_cast<int>(ticks.size()) < cells + 1) {
        int t = tick(rng_);
        bool seen = false;
        for (int s : ticks) seen = seen || s == t;
        if (!seen) ticks.push_back(t);
    }
    std::sort(ticks.begin(), ticks.end());
    std::vector<Rat> breaks;
    breaks.reserve(ticks.size());
    for (int t : ticks) breaks.push_back(Rat(t, 2));
    std::vector<Rat> values;
    values.reserve(static_cast<std::size_t>(cells));
    for (int i = 0; i < cells; ++i) values.push_back(rat(4, 3));
    return StepFunction(std::move(breaks), std::move(values));
}

CurrentElement RandomSource::current_element(int bound) {
    std::vector<StepFunction> fs;
    fs.reserve(static_cast<std::size_t>(bound));
    for (int k = 0; k < bound; ++k) fs.push_back(step_function());
    return CurrentElement(bound, rat(), step_function(), std::move(fs));
}

double RandomSource::real(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng_);
}

int RandomSource::integer(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng_);
}

json VerifyReport::to_json() const {
    json out{{"suite", suite},
             {"seed", seed},
             {"cases", cases},
             {"checks_run", checks_run},
             {"ok", ok()}};
    out["failures"] = json::array();
    for (const json& f : failures) out["failures"].push_back(f);
    return out;
}

namespace {

class Suite {
  public:
    Suite(std::string name, std::uint64_t seed, int cases)
        : source_(seed) {
        report_.suite = std::move(name);
        report_.seed = seed;
        report_.cases = cases;
    }

    RandomSource& source() { return source_; }

    void check(bool ok, const std::string& identity, json payload) {
        ++report_.checks_run;
        if (!ok)
            report_.failures.push_back(json{{"identity", identity}, {"payload", std::move(payload)}});
    }

    VerifyReport take() && { return std::move(report_); }

  private:
    RandomSource source_;
    VerifyReport report_;
};

json pair_payload(const GroupElement& a, const GroupElement& b) {
    return json{{"lhs", group_element_to_json(a)}, {"rhs", group_element_to_json(b)}};
}

VerifyReport verify_group(std::uint64_t seed, int cases) {
    Suite s("group", seed, cases);
    RandomSource& src = s.source();
    for (int it = 0; it < cases; ++it) {
        const int n = src.integer(1, 6);
        const GroupElement a = src.element(n);
        const GroupElement b = src.element(n);
        const GroupElement c = src.element(n);
        json triple{{"bound", n},
                    {"a", group_element_to_json(a)},
                    {"b", group_element_to_json(b)},
                    {"c", group_element_to_json(c)}};

        s.check(compose(compose(a, b), c) == compose(a, compose(b, c)),
                "associativity: (a o b) o c == a o (b o c)", triple);
        s.check(compose(a, identity_element(n)) == a && compose(identity_element(n), a) == a,
                "identity: a o e == a == e o a", group_element_to_json(a));
        s.check(compose(a, inverse(a)) == identity_element(n) &&
                    compose(inverse(a), a) == identity_element(n),
                "inverse: a o a^{-1} == e == a^{-1} o a", group_element_to_json(a));
        s.check(embed(compose(a, b), n + 2) == compose(embed(a, n + 2), embed(b, n + 2)),
                "embedding commutes with composition", pair_payload(a, b));

        const GroupElement z1 = src.zero_constant_element(n);
        const GroupElement z2 = src.zero_constant_element(n);
        s.check(sigma(z1, z2) == sigma_closed(z1, z2),
                "cocycle: direct extraction == closed formula", pair_payload(z1, z2));

        const GroupElement a1 = src.element(1);
        const GroupElement b1 = src.element(1);
        s.check(compose_n1_closed(a1, b1) == compose(a1, b1),
                "closed law at bound 1 == general law", pair_payload(a1, b1));
        const GroupElement a2 = src.element(2);
        const GroupElement b2 = src.element(2);
        s.check(compose_n2_closed(a2, b2) == compose(a2, b2),
                "closed law at bound 2 == general law", pair_payload(a2, b2));
    }
    return std::move(s).take();
}

VerifyReport verify_matrices(std::uint64_t seed, int cases) {
    Suite s("matrices", seed, cases);
    RandomSource& src = s.source();
    for (int it = 0; it < cases; ++it) {
        const int n = src.integer(1, 8);
        const Rat u = src.nonzero_rat();
        const Rat v = src.nonzero_rat();
        const Rat w = src.rat();
        json params{{"bound", n}, {"u", u.str()}, {"v", v.str()}, {"w", w.str()}};

        s.check(t_matrix(w, n) * s_matrix(u, n) == s_matrix(u, n) * t_matrix(w, n),
                "T_w S_u == S_u T_w", params);
        s.check(t_matrix(w, n) * t_matrix(u, n) == t_matrix(u, n) * t_matrix(w, n),
                "T_w T_u == T_u T_w", params);
        s.check(t_matrix(u, n) * s_matrix(v, n) ==
                    (Rat(1) + v / u) * t_matrix(u + v, n) - (v / u) * t_matrix(v, n),
                "T_u S_v == (1 + v/u) T_{u+v} - (v/u) T_v", params);
        s.check(t_matrix(u, n) * s_matrix(-u, n) == t_matrix(-u, n), "T_u S_{-u} == T_{-u}",
                params);

        // the averaged-product expansion acts through a primitive lift
        {
            const TriMatrix lhs = t_matrix(u, n) * t_matrix(v, n);
            bool ok = true;
            for (int k = 0; k <= n && ok; ++k) {
                const Poly pk = Poly::monomial(k, n);
                Poly prim = pk.primitive();
                prim.set_coeff(0, w);  // any integration constant
                const Poly expanded =
                    (Rat(1) / u + Rat(1) / v) * apply(t_matrix(u + v, n + 1), prim) -
                    (Rat(1) / v) * apply(t_matrix(u, n + 1), prim) -
                    (Rat(1) / u) * apply(t_matrix(v, n + 1), prim);
                ok = expanded.coeff(n + 1) == Rat(0);
                std::vector<Rat> low(expanded.coeffs().begin(), expanded.coeffs().end() - 1);
                ok = ok && Poly(n, std::move(low)) == apply(lhs, pk);
            }
            s.check(ok, "T_u T_v == ((1/u + 1/v) T_{u+v} - (1/v) T_u - (1/u) T_v) o primitive",
                    params);
        }

        s.check(s_matrix(u, n) * s_matrix(v, n) == s_matrix(u + v, n), "S_u S_v == S_{u+v}",
                params);
        s.check(t_inverse(w, n) * t_matrix(w, n) == TriMatrix::identity(n),
                "T_w^{-1} T_w == id", params);

        TriMatrix power = t_strict(w, n);
        bool powers_ok = t_power_closed(w, 1, n) == power;
        for (int k = 2; k <= n + 1; ++k) {
            power = power * t_strict(w, n);
            powers_ok = powers_ok && t_power_closed(w, k, n) == power;
        }
        s.check(powers_ok && t_power_closed(w, n + 1, n).is_zero(),
                "closed strict powers == iterated products, nilpotent at N+1", params);
    }
    return std::move(s).take();
}

VerifyReport verify_vacuum(std::uint64_t seed, int cases) {
    Suite s("vacuum", seed, cases);
    RandomSource& src = s.source();
    for (int it = 0; it < cases; ++it) {
        const double alpha = src.real(-2.0, 2.0);
        const double beta = src.real(-2.0, 2.0);
        const double gamma = src.real(-2.0, 2.0);
        const CF64 closed = charfn_quadratic(alpha, beta, gamma);
        const CF64 quad = gauss_expectation({CF64(0.0), CF64(beta), CF64(alpha)},
                                            CF64(gamma, 0.0));
        s.check(std::abs(closed - quad) <= 1e-8,
                "quadratic characteristic function: closed form == quadrature",
                json{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma},
                     {"delta", std::abs(closed - quad)}});

        const double A = src.real(-1.0, 1.0);
        const double B = src.real(-1.0, 1.0);
        const double C = src.real(-1.0, 1.0);
        const double t = src.real(-0.5, 0.5);
        const CF64 heis2 = charfn_heis2(A, B, C, t);
        const CF64 general =
            charfn_general(std::sqrt(2.0) * C * t, {0.0, std::sqrt(2.0) * B * t, 2.0 * A * t});
        s.check(std::abs(heis2 - general) <= 1e-8,
                "characteristic function: closed form == q-projection quadrature",
                json{{"A", A}, {"B", B}, {"C", C}, {"t", t},
                     {"delta", std::abs(heis2 - general)}});
        s.check(std::abs(charfn_heis2(A, B, C, 0.0) - 1.0) == 0.0,
                "characteristic function equals 1 at t == 0",
                json{{"A", A}, {"B", B}, {"C", C}});
        s.check(std::abs(charfn_heis2(A, B, C, -t) - std::conj(heis2)) <= 1e-15,
                "characteristic function is Hermitian in t",
                json{{"A", A}, {"B", B}, {"C", C}, {"t", t}});

        const int n = src.integer(0, 8);
        const double direct = moments_heis2(A, B, C, n);
        const double oracle = moments_oracle(A, B, C, n);
        const double scale = std::max({std::abs(direct), std::abs(oracle), 1.0});
        s.check(std::abs(direct - oracle) <= 1e-9 * scale,
                "vacuum moments: partition sum == Fock oracle",
                json{{"A", A}, {"B", B}, {"C", C}, {"n", n},
                     {"partition_sum", direct}, {"oracle", oracle}});

        const QuadObservable p1{A, B, C};
        s.check(std::abs(overlap_heis2(p1, p1, t) - 1.0) == 0.0,
                "overlap of an observable with itself equals 1",
                json{{"A", A}, {"B", B}, {"C", C}, {"t", t}});
    }
    return std::move(s).take();
}

VerifyReport verify_current(std::uint64_t seed, int cases) {
    Suite s("current", seed, cases);
    RandomSource& src = s.source();
    for (int it = 0; it < cases; ++it) {
        // Cellwise equivalence on a unit cell against the discrete law.
        {
            const int n = src.integer(1, 6);
            const GroupElement d1 = src.zero_constant_element(n);
            const GroupElement d2 = src.zero_constant_element(n);
            auto lift = [&](const GroupElement& d) {
                std::vector<StepFunction> fs;
                for (int k = 1; k <= n; ++k)
                    fs.push_back(StepFunction::indicator(Rat(0), Rat(1), d.poly.coeff(k)));
                return CurrentElement(n, Rat(0),
                                      StepFunction::indicator(Rat(0), Rat(1), d.u),
                                      std::move(fs));
            };
            const CurrentElement composed = current_compose(lift(d1), lift(d2));
            const GroupElement discrete = compose(d1, d2);
            bool ok = composed.central == discrete.poly.coeff(0);
            for (int k = 1; k <= n; ++k)
                ok = ok && composed.fs[static_cast<std::size_t>(k) - 1] ==
                               StepFunction::indicator(Rat(0), Rat(1), discrete.poly.coeff(k));
            s.check(ok, "unit-cell continuous law == discrete law", pair_payload(d1, d2));
        }

        const int n = src.integer(1, 4);
        const CurrentElement a = src.current_element(n);
        const CurrentElement b = src.current_element(n);
        const CurrentElement c = src.current_element(n);
        s.check(current_compose(current_compose(a, b), c) ==
                    current_compose(a, current_compose(b, c)),
                "continuous associativity",
                json{{"bound", n},
                     {"a", current_element_to_json(a)},
                     {"b", current_element_to_json(b)},
                     {"c", current_element_to_json(c)}});

        const CurrentElement a2 = src.current_element(2);
        const CurrentElement b2 = src.current_element(2);
        s.check(galilei_compose_closed(a2, b2) == current_compose(a2, b2),
                "closed continuous law at bound 2 == cellwise law",
                json{{"a", current_element_to_json(a2)}, {"b", current_element_to_json(b2)}});

        // Weyl phase consistency at bound 1 under the sqrt2 scaling.
        {
            const StepFunction f1 = src.step_function();
            const StepFunction f2 = src.step_function();
            const StepFunction h1 = src.step_function();
            const StepFunction h2 = src.step_function();
            const Rat two(2);
            const CurrentElement lhs(1, Rat(0), two * f2, {two * f1});
            const CurrentElement rhs(1, Rat(0), two * h2, {two * h1});
            // central term of the composition with f'_i = sqrt2 f_i absorbs
            // the two sqrt2 factors into a single 2
            const Rat central = current_compose(lhs, rhs).central / Rat(2);
            s.check(central == weyl_phase(f1, f2, h1, h2),
                    "bound-1 central term == Weyl phase -Im<f,h>",
                    json{{"f_re", step_function_to_json(f1)},
                         {"f_im", step_function_to_json(f2)},
                         {"h_re", step_function_to_json(h1)},
                         {"h_im", step_function_to_json(h2)}});
        }
    }
    return std::move(s).take();
}

VerifyReport verify_oracle(std::uint64_t seed, int cases) {
    Suite s("oracle", seed, cases);
    RandomSource& src = s.source();
    for (int it = 0; it < cases; ++it) {
        const double u = src.real(-0.5, 0.5);
        const std::vector<double> coeffs{0.0, src.real(-0.5, 0.5), src.real(-0.5, 0.5)};
        json params{{"u", u}, {"coeffs", coeffs}};

        const auto pair = fock::build_canonical(64);
        const fock::TruncatedOp h = fock::observable(u, coeffs, 64);
        const double herm = (h - h.adjoint()).cwiseAbs().maxCoeff();
        s.check(herm <= 1e-12, "observable matrices are Hermitian", params);

        const fock::FockVector evolved = fock::expm(CF64(0.0, 1.0) * h) * fock::vacuum(64);
        s.check(std::abs(evolved.norm() - 1.0) <= 1e-10, "exp(iH) preserves the vacuum norm",
                params);

        const CF64 c16 = fock::vacuum_charfn_at(u, coeffs, 16);
        const CF64 c32 = fock::vacuum_charfn_at(u, coeffs, 32);
        const CF64 c64 = fock::vacuum_charfn_at(u, coeffs, 64);
        s.check(std::abs(c64 - c32) <= std::abs(c32 - c16) + 1e-12,
                "characteristic value settles under dimension doubling", params);

        const double ccr = ((pair.q * pair.p - pair.p * pair.q).topLeftCorner(63, 63) -
                            CF64(0.0, 1.0) * fock::TruncatedOp::Identity(63, 63))
                               .cwiseAbs()
                               .maxCoeff();
        s.check(ccr <= 1e-12, "[q, p] == i below the truncation edge", params);
    }
    return std::move(s).take();
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed, int cases) {
    if (cases < 1) throw std::invalid_argument("verify: cases must be positive");
    if (suite == "group") return verify_group(seed, cases);
    if (suite == "matrices") return verify_matrices(seed, cases);
    if (suite == "vacuum") return verify_vacuum(seed, cases);
    if (suite == "current") return verify_current(seed, cases);
    if (suite == "oracle") return verify_oracle(seed, cases);
    throw std::invalid_argument("verify: unknown suite \"" + suite + "\"");
}

}  // namespace heispoly
