#ifndef RAMIFY_CASES_HPP
#define RAMIFY_CASES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ramify/theorems.hpp"

namespace ramify {

// One randomized verification case. All coefficient data is exact integral
// data, so the same (seed, index) pair reproduces the same case at any
// working precision.
struct RandomCase {
    BaseFieldConfig base;
    EisensteinPoly f;
    PerturbationSeries phi;           // general perturbation
    long ell = 1;
    FieldElement r;                   // one-term perturbation coefficient
    PerturbationSeries phi_nochange;  // congruent to X mod X^(ell+1)

    RandomCase(BaseFieldConfig b, EisensteinPoly poly, PerturbationSeries general,
               long l, FieldElement rr, PerturbationSeries nochange)
        : base(b), f(std::move(poly)), phi(std::move(general)), ell(l),
          r(std::move(rr)), phi_nochange(std::move(nochange)) {}
};

// Deterministic case generation over p in {2,3,5}, n in 2..9, backends
// qp / ramified:2 / laurent (laurent only for p <= 3), deg phi <= 5.
RandomCase random_case(uint64_t seed, uint64_t index, int precision);

std::string backend_name(const BaseFieldConfig& cfg);

// Per-case outcome of the randomized verification suite.
struct CaseResult {
    uint64_t index = 0;
    std::string backend;
    long p = 0, n = 0, ell = 0;
    int shared_precision = 0;  // smallest certified precision across routes
    bool routes_agree = false;
    bool root_ok = false;
    bool nochange_ok = false;
    bool special_ok = false;
    bool profile_stable = false;
    bool krasner_ok = false;
    bool passed = false;
    std::string note;  // failure detail, empty when passed
};

// Runs every check on one case, retrying at doubled precision when a
// verdict is not certifiable, up to precision_ceiling.
CaseResult run_case(uint64_t seed, uint64_t index, int precision, int precision_ceiling);

struct SuiteResult {
    std::vector<CaseResult> cases;
    bool all_passed = false;
};

SuiteResult run_random_suite(uint64_t seed, int count, int precision,
                             int precision_ceiling);

}  // namespace ramify

#endif
