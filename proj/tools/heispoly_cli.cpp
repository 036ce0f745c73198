// Command-line front end: exact composition, cocycles and operator matrices,
// vacuum characteristic functions and moments, the continuous (current)
// composition, and the randomized verification suites. JSON on stdout,
// diagnostics on stderr.
//
// Exit codes: 0 success, 1 input or validation error, 2 numerical
// non-convergence, 3 verification-suite failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "heispoly/fock.hpp"
#include "heispoly/group.hpp"
#include "heispoly/json_io.hpp"
#include "heispoly/tri_matrix.hpp"
#include "heispoly/vacuum.hpp"
#include "heispoly/verify.hpp"

namespace {

using heispoly::json;

json parse_payload(const std::string& text) {
    // Inline JSON or a path to a file holding it.
    if (!text.empty() && (text.front() == '{' || text.front() == '[')) return json::parse(text);
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("cannot open payload file: " + text);
    return json::parse(in);
}

void emit(const json& value, const std::optional<std::string>& out_path) {
    const std::string text = value.dump();
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + *out_path);
        out << text << "\n";
    }
    std::cout << text << "\n";
}

heispoly::QuadratureSpec quadrature_from_env() {
    heispoly::QuadratureSpec spec;
    if (const char* cap_text = std::getenv("HEISPOLY_MAX_NODES")) {
        const int cap = std::stoi(cap_text);
        spec.max_nodes = std::min(spec.max_nodes, cap);
        spec.initial_nodes = std::min(spec.initial_nodes, spec.max_nodes);
    }
    spec.validate();
    return spec;
}

heispoly::GroupElement element_arg(const std::string& text, int bound) {
    heispoly::GroupElement g = heispoly::group_element_from_json(parse_payload(text));
    if (g.bound() != bound)
        throw std::invalid_argument("group element does not match --n " + std::to_string(bound));
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial Heisenberg group calculator"};
    app.require_subcommand(1);

    std::optional<std::string> out_path;
    app.add_option("--out", out_path, "also write the JSON result to this file");

    int exit_code = 0;

    // compose
    {
        auto* cmd = app.add_subcommand("compose", "compose two group elements");
        auto n = std::make_shared<int>(1);
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "polynomial degree bound")->required();
        cmd->add_option("--lhs", *lhs, "left element JSON")->required();
        cmd->add_option("--rhs", *rhs, "right element JSON")->required();
        cmd->callback([&, n, lhs, rhs] {
            const auto result = heispoly::compose(element_arg(*lhs, *n), element_arg(*rhs, *n));
            emit(heispoly::group_element_to_json(result, /*with_bound=*/false), out_path);
        });
    }

    // sigma
    {
        auto* cmd = app.add_subcommand("sigma", "cocycle of two zero-constant elements");
        auto n = std::make_shared<int>(1);
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "polynomial degree bound")->required();
        cmd->add_option("--lhs", *lhs, "left element JSON")->required();
        cmd->add_option("--rhs", *rhs, "right element JSON")->required();
        cmd->callback([&, n, lhs, rhs] {
            const auto a = element_arg(*lhs, *n);
            const auto b = element_arg(*rhs, *n);
            emit(json{{"sigma", heispoly::sigma(a, b).str()},
                      {"sigma_closed", heispoly::sigma_closed(a, b).str()}},
                 out_path);
        });
    }

    // tw-matrix
    {
        auto* cmd = app.add_subcommand("tw-matrix", "averaging operator matrix T_w");
        auto w = std::make_shared<std::string>("0");
        auto n = std::make_shared<int>(1);
        auto inverse = std::make_shared<bool>(false);
        auto power = std::make_shared<int>(0);
        cmd->add_option("--w", *w, "shift parameter, rational")->required();
        cmd->add_option("--n", *n, "polynomial degree bound")->required();
        auto* inv_flag = cmd->add_flag("--inverse", *inverse, "emit T_w^{-1}");
        auto* pow_opt =
            cmd->add_option("--power", *power, "emit the closed form of the strict part power");
        pow_opt->excludes(inv_flag);
        cmd->callback([&, w, n, inverse, power, pow_opt] {
            const heispoly::Rat wr = heispoly::Rat::parse(*w);
            heispoly::TriMatrix m = *inverse          ? heispoly::t_inverse(wr, *n)
                                    : pow_opt->count() ? heispoly::t_power_closed(wr, *power, *n)
                                                       : heispoly::t_matrix(wr, *n);
            emit(heispoly::matrix_to_json(m), out_path);
        });
    }

    // su-matrix
    {
        auto* cmd = app.add_subcommand("su-matrix", "shift operator matrix S_u");
        auto u = std::make_shared<std::string>("0");
        auto n = std::make_shared<int>(1);
        cmd->add_option("--u", *u, "translation, rational")->required();
        cmd->add_option("--n", *n, "polynomial degree bound")->required();
        cmd->callback([&, u, n] {
            emit(heispoly::matrix_to_json(heispoly::s_matrix(heispoly::Rat::parse(*u), *n)),
                 out_path);
        });
    }

    // charfn
    {
        auto* cmd = app.add_subcommand(
            "charfn", "vacuum characteristic function, closed form or quadrature");
        auto A = std::make_shared<double>(0);
        auto B = std::make_shared<double>(0);
        auto C = std::make_shared<double>(0);
        auto t = std::make_shared<double>(0);
        auto u = std::make_shared<double>(0);
        auto poly_text = std::make_shared<std::string>();
        auto* a_opt = cmd->add_option("--A", *A, "coefficient of (sqrt2 q)^2");
        cmd->add_option("--B", *B, "coefficient of sqrt2 q");
        cmd->add_option("--C", *C, "coefficient of sqrt2 p");
        cmd->add_option("--t", *t, "time parameter");
        auto* u_opt = cmd->add_option("--u", *u, "momentum coefficient");
        auto* poly_opt = cmd->add_option("--poly", *poly_text, "polynomial JSON for u p + P'(q)");
        poly_opt->needs(u_opt);
        poly_opt->excludes(a_opt);
        cmd->callback([&, A, B, C, t, u, poly_text, poly_opt] {
            heispoly::CF64 value;
            if (poly_opt->count()) {
                const heispoly::Poly p = heispoly::poly_from_json(parse_payload(*poly_text));
                std::vector<double> coeffs;
                for (const heispoly::Rat& c : p.coeffs()) coeffs.push_back(c.to_double());
                value = heispoly::charfn_general(*u, coeffs, quadrature_from_env());
            } else {
                value = heispoly::charfn_heis2(*A, *B, *C, *t);
            }
            emit(heispoly::complex_to_json(value), out_path);
        });
    }

    // moments
    {
        auto* cmd = app.add_subcommand("moments", "vacuum moments 0..max-n");
        auto A = std::make_shared<double>(0);
        auto B = std::make_shared<double>(0);
        auto C = std::make_shared<double>(0);
        auto max_n = std::make_shared<int>(0);
        cmd->add_option("--A", *A)->required();
        cmd->add_option("--B", *B)->required();
        cmd->add_option("--C", *C)->required();
        cmd->add_option("--max-n", *max_n, "largest moment order")->required();
        cmd->callback([&, A, B, C, max_n] {
            json values = json::array();
            for (int k = 0; k <= *max_n; ++k)
                values.push_back(heispoly::moments_heis2(*A, *B, *C, k));
            emit(values, out_path);
        });
    }

    // overlap
    {
        auto* cmd = app.add_subcommand("overlap", "vacuum overlap of two evolutions");
        auto p = std::make_shared<std::array<double, 6>>();
        auto t = std::make_shared<double>(0);
        cmd->add_option("--a1", (*p)[0])->required();
        cmd->add_option("--b1", (*p)[1])->required();
        cmd->add_option("--c1", (*p)[2])->required();
        cmd->add_option("--a2", (*p)[3])->required();
        cmd->add_option("--b2", (*p)[4])->required();
        cmd->add_option("--c2", (*p)[5])->required();
        cmd->add_option("--t", *t)->required();
        cmd->callback([&, p, t] {
            const heispoly::QuadObservable p1{(*p)[0], (*p)[1], (*p)[2]};
            const heispoly::QuadObservable p2{(*p)[3], (*p)[4], (*p)[5]};
            emit(heispoly::complex_to_json(heispoly::overlap_heis2(p1, p2, *t)), out_path);
        });
    }

    // current-compose
    {
        auto* cmd = app.add_subcommand("current-compose", "compose two current elements");
        auto n = std::make_shared<int>(1);
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>();
        cmd->add_option("--n", *n, "polynomial degree bound")->required();
        cmd->add_option("--lhs", *lhs)->required();
        cmd->add_option("--rhs", *rhs)->required();
        cmd->callback([&, n, lhs, rhs] {
            auto a = heispoly::current_element_from_json(parse_payload(*lhs));
            auto b = heispoly::current_element_from_json(parse_payload(*rhs));
            if (a.bound != *n || b.bound != *n)
                throw std::invalid_argument("current elements do not match --n");
            emit(heispoly::current_element_to_json(heispoly::current_compose(a, b)), out_path);
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand("verify", "randomized identity suites");
        auto suite = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>(1);
        auto cases = std::make_shared<int>(100);
        cmd->add_option("--suite", *suite, "group | matrices | vacuum | current | oracle")
            ->required();
        cmd->add_option("--seed", *seed, "RNG seed");
        cmd->add_option("--cases", *cases, "number of random cases");
        cmd->callback([&, suite, seed, cases] {
            const heispoly::VerifyReport report =
                heispoly::run_verify_suite(*suite, *seed, *cases);
            emit(report.to_json(), out_path);
            if (!report.ok()) {
                std::cerr << "verify: " << report.failures.size() << " identity violation(s) in "
                          << report.suite << " suite\n";
                exit_code = 3;
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const heispoly::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
