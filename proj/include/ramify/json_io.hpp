#ifndef RAMIFY_JSON_IO_HPP
#define RAMIFY_JSON_IO_HPP

#include <json.hpp>

#include <tuple>

#include "ramify/cases.hpp"
#include "ramify/theorems.hpp"

namespace ramify {

// ordered_json keeps key order stable, so identical runs emit identical bytes
using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"mu": [...], "n": k, "coeffs": [{"lambda": [...], "d": v}, ...]}
Json coeff_map_to_json(const Partition& mu, long n, const CoeffMap& coeffs);
std::tuple<Partition, long, CoeffMap> coeff_map_from_json(const Json& j);

Json config_to_json(const BaseFieldConfig& cfg);
BaseFieldConfig config_from_json(const Json& j);

// {"value": "...", "prec": 20} with prec "exact" for exact elements
Json element_to_json(const FieldElement& e);
FieldElement element_from_json(const BaseFieldConfig& cfg, const Json& j);

Json poly_to_json(const EisensteinPoly& f);
EisensteinPoly poly_from_json(const Json& j);

Json series_to_json(const PerturbationSeries& phi);
PerturbationSeries series_from_json(const BaseFieldConfig& cfg, const Json& j);

// {"base": ..., "n": ..., "u": ..., "nu": ..., "i_raw": [...], "i": [...],
//  "A": [...], "b": [...], "breaks": [...]}
Json profile_to_json(const InseparabilityProfile& profile);
InseparabilityProfile profile_from_json(const Json& j);

// rows ell = 1..lmax with the phi~_j and phi_j columns
Json phi_table_to_json(const InseparabilityProfile& profile, long lmax);

Json congruence_report_to_json(const CongruenceReport& report);
CongruenceReport congruence_report_from_json(const Json& j);

Json special_verdict_to_json(const SpecialVerdict& v);
SpecialVerdict special_verdict_from_json(const BaseFieldConfig& cfg, const Json& j);

// dual-route perturbation report for the CLI
Json perturb_report_to_json(const EisensteinPoly& f, const PerturbationSeries& phi,
                            const EisensteinPoly& lin, const EisensteinPoly& sym);

// one verification case: inputs, profile, per-h table with rho/kappa and the
// refined rows where Theorem-style predictions exist
Json verify_case_to_json(const EisensteinPoly& f, const InseparabilityProfile& profile,
                         long ell, const CongruenceReport& report,
                         const std::vector<SpecialVerdict>& special);

Json case_result_to_json(const CaseResult& r);
CaseResult case_result_from_json(const Json& j);
Json suite_result_to_json(const SuiteResult& s);

// "c0,c1,..." in the alternating-sign convention (leading 1 first), or the
// plain monic coefficients when raw = true; entries may be bracketed
// coordinate lists or polynomials in t.
EisensteinPoly parse_poly_spec(const BaseFieldConfig& cfg, const std::string& text,
                               bool raw);

// "{1: r1, 3: r3}"-style sparse map degree -> value for perturbations
PerturbationSeries parse_phi_spec(const BaseFieldConfig& cfg, const std::string& text);

std::string mpq_to_string(const mpq_class& q);

}  // namespace ramify

#endif
