#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heispoly/current.hpp"
#include "heispoly/group.hpp"
#include "heispoly/json_io.hpp"

namespace heispoly {

/// Deterministic source of random exact elements for the verification suites
/// and property tests. Numerators and denominators stay small so thousands of
/// exact compositions remain cheap.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    Rat rat(long max_abs_num = 9, long max_den = 9);
    Rat nonzero_rat(long max_abs_num = 9, long max_den = 9);
    Poly poly(int bound);
    Poly zero_constant_poly(int bound);
    GroupElement element(int bound);
    GroupElement zero_constant_element(int bound);
    StepFunction step_function(int max_cells = 3);
    CurrentElement current_element(int bound);
    double real(double lo, double hi);
    int integer(int lo, int hi);

  private:
    std::mt19937_64 rng_;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    int checks_run = 0;
    std::vector<json> failures;  // each: {"identity": ..., "payload": {...}}

    bool ok() const { return failures.empty(); }
    json to_json() const;
};

/// Runs one randomized identity suite: group | matrices | vacuum | current |
/// oracle. Deterministic for a fixed seed; failures carry the violated
/// identity and the counterexample payload.
VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed, int cases);

}  // namespace heispoly
