#ifndef RAMIFY_THEOREMS_HPP
#define RAMIFY_THEOREMS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ramify/perturb.hpp"

namespace ramify {

// rho_h(ell) = ceil((phi_j(ell) + h) / n) with j = vbar_p(h).
long rho(const InseparabilityProfile& profile, long h, long ell);

// Krasner's exponent kappa_h(ell) = ceil((phi_nu(ell) + h) / n); never
// exceeds rho_h(ell).
long kappa(const InseparabilityProfile& profile, long h, long ell);

struct CoeffCheck {
    long h = 0;
    long rho = 0;
    long kappa = 0;
    bool verified = false;
    long max_verified = 0;  // largest certified congruence exponent
    long prec_cap = 0;      // shared precision of the two coefficients
};

// Outcome of checking ftilde ~_ell f coefficient by coefficient.
struct CongruenceReport {
    long ell = 0;
    std::vector<CoeffCheck> per_h;
    bool all_verified = false;
};

// The ~_ell check: c~_h = c_h mod M_K^(rho_h(ell)) for every h, with the
// profile taken from f (uniformizer independence makes the choice
// immaterial). Throws precision_too_low naming the first h whose
// coefficients carry fewer than rho_h digits.
CongruenceReport equiv_ell(const EisensteinPoly& f, const EisensteinPoly& ftilde,
                           long ell);

struct SpecialTermData {
    long m = 0;
    long A = 0, b = 0;
    long long g = 0;  // the three-case coefficient g_m
};

// The Theorem 4.5 data for one admissible j: the unique h with n dividing
// phi_j(ell) + h, k = (phi_j(ell) + h)/n, h_0 = h / p^j, and
// S_j = { m <= j : phi_j(ell) = phi~_m(ell) } with its g_m values.
struct SpecialTerms {
    long ell = 0, j = 0;
    long h = 0, h0 = 0, k = 0;
    std::vector<SpecialTermData> terms;
};

// nullopt when vbar_p(phi_j(ell)) != j.
std::optional<SpecialTerms> special_terms(const InseparabilityProfile& profile,
                                          long ell, long j);

struct SpecialPrediction {
    SpecialTerms data;
    FieldElement predicted;  // c~_h mod M_K^(k+1)
};

// Right-hand side of the Theorem 4.5 congruence:
//   c_h + sum over m in S_j of g_m c_n^(k-A_m) c_{b_m} r^(p^m),
// truncated to M_K^(k+1).
std::optional<SpecialPrediction> predict_special(const EisensteinPoly& f,
                                                 const FieldElement& r, long ell,
                                                 long j);

// Theorem 4.3 harness: requires phi(pi_L) = pi_L mod M_L^(ell+1), computes
// the perturbed minimal polynomial by both routes, and checks ~_ell.
CongruenceReport verify_nochange(const EisensteinPoly& f, const PerturbationSeries& phi,
                                 long ell);

struct SpecialVerdict {
    long j = 0, h = 0, k = 0;
    bool verified = false;
    FieldElement predicted;
    FieldElement actual;  // ground-truth c~_h
};

// Theorem 4.5 harness for phi = X + r X^(ell+1): one verdict per j with
// vbar_p(phi_j(ell)) = j, comparing the prediction against ground truth mod
// M_K^(k+1).
std::vector<SpecialVerdict> verify_special(const EisensteinPoly& f,
                                           const FieldElement& r, long ell);

// Re-runs a computation at doubled working precision while it reports
// precision_too_low, up to the ceiling. Case builders receive the precision
// to instantiate their inputs at.
template <typename T>
T with_precision_retry(int initial, int ceiling, const std::function<T(int)>& attempt) {
    int n = initial;
    while (true) {
        try {
            return attempt(n);
        } catch (const precision_too_low&) {
            if (n >= ceiling) throw;
            n = std::min(2 * n, ceiling);
        }
    }
}

}  // namespace ramify

#endif
