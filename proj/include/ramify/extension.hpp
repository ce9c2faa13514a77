#ifndef RAMIFY_EXTENSION_HPP
#define RAMIFY_EXTENSION_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ramify/basefield.hpp"

namespace ramify {

// Eisenstein polynomial in the alternating-sign convention
//   f(X) = X^n - c_1 X^(n-1) + c_2 X^(n-2) - ... + (-1)^n c_n,
// defining the totally ramified degree-n extension L = K[X]/(f).
class EisensteinPoly {
public:
    EisensteinPoly(BaseFieldConfig base, std::vector<FieldElement> coeffs);

    const BaseFieldConfig& base() const { return base_; }
    long degree() const { return n_; }
    long unit_part() const { return u_; }   // u with n = u p^nu
    long wild_exponent() const { return nu_; }  // nu = v_p(n)

    // c_h for 1 <= h <= n
    const FieldElement& coeff(long h) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    // plain coefficient of X^(n-h), i.e. (-1)^h c_h
    FieldElement plain_coeff(long h) const;

private:
    BaseFieldConfig base_;
    long n_ = 0;
    long u_ = 0;
    long nu_ = 0;
    std::vector<FieldElement> c_;
};

// Empty list when f satisfies v_K(c_h) >= 1 for all h and v_K(c_n) = 1;
// otherwise one message per violated condition. Throws precision_too_low
// when a needed valuation cannot be certified.
std::vector<std::string> validate_eisenstein(const EisensteinPoly& f);

// min(v_p(k), nu); k = 0 is treated as v_p = infinity and caps at nu.
long vbar(const mpz_class& k, long nu, long p);

// i_j^{pi_L} for one j: a nonnegative integer, or infinite when every
// eligible coefficient is exactly zero.
struct RawIndex {
    bool infinite = false;
    long value = 0;
};

// Raw indices of inseparability i_j^{pi_L} for j = 0..nu:
//   min { n v_K(c_h) - h : 1 <= h <= n, vbar_p(h) <= j }.
// Throws precision_too_low if an uncertain coefficient could decide a
// minimum.
std::vector<RawIndex> indices_raw(const EisensteinPoly& f);

// Indices of inseparability and the data the generalized Hasse-Herbrand
// functions are built from. Immutable value object.
struct InseparabilityProfile {
    BaseFieldConfig base;
    long n = 0, u = 0, nu = 0;
    long p = 0;
    std::vector<RawIndex> raw;  // i_j^{pi_L}, j = 0..nu
    std::vector<long> i;        // i_j
    std::vector<long> A, b;     // i_j = A_j n - b_j with 1 <= b_j <= n

    bool char_p() const { return base.backend == Backend::char_p; }
    // v_L(p); only meaningful in characteristic zero (conceptually infinite
    // in char p, where the (j'-j) e_L terms drop out of the definition).
    long e_l() const { return n * base.e_k; }

    bool operator==(const InseparabilityProfile& o) const {
        return n == o.n && u == o.u && nu == o.nu && p == o.p && i == o.i &&
               A == o.A && b == o.b;
    }
};

// Full profile from eq. (3.2): i_j = min { i_{j'}^{pi_L} + (j'-j) e_L },
// with the j' > j terms discarded in char p. Rejects char-p input whose raw
// indices are infinite (the extension would be inseparable).
InseparabilityProfile indices(const EisensteinPoly& f);

// phi~_j(x) = i_j + p^j x, exact rational arithmetic.
mpq_class phi_tilde(const InseparabilityProfile& profile, long j, const mpq_class& x);

// phi_j(x) = min over j0 <= j of phi~_{j0}(x).
mpq_class phi(const InseparabilityProfile& profile, long j, const mpq_class& x);

// The classical Hasse-Herbrand function phi_{L/K}(x) = phi_nu(x) / n.
mpq_class hasse_herbrand(const InseparabilityProfile& profile, const mpq_class& x);

// x-coordinates where the active minimizer of phi_nu changes, ascending:
// the lower ramification breaks of L/K. Empty for nu = 0.
std::vector<mpq_class> lower_breaks(const InseparabilityProfile& profile);

}  // namespace ramify

#endif
