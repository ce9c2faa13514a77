#ifndef RAMIFY_PERTURB_HPP
#define RAMIFY_PERTURB_HPP

#include <vector>

#include "ramify/extension.hpp"
#include "ramify/symcomb.hpp"

namespace ramify {

// Polynomial truncation of a perturbation phi(X) = r_1 X + r_2 X^2 + ...
// applied to a uniformizer. Requires v_K(r_1) = 0 so that phi(pi_L) is
// again a uniformizer.
class PerturbationSeries {
public:
    PerturbationSeries(BaseFieldConfig base, std::vector<FieldElement> coeffs);

    static PerturbationSeries identity(const BaseFieldConfig& base);  // X
    // X + r X^(ell+1)
    static PerturbationSeries one_term(const BaseFieldConfig& base,
                                       const FieldElement& r, long ell);

    const BaseFieldConfig& base() const { return base_; }
    long degree() const { return static_cast<long>(r_.size()); }
    const FieldElement& coeff(long d) const;  // r_d, 1 <= d <= degree
    const std::vector<FieldElement>& coeffs() const { return r_; }

private:
    BaseFieldConfig base_;
    std::vector<FieldElement> r_;
};

// Element of L = K[X]/(f) in the power basis 1, pi_L, ..., pi_L^(n-1).
struct QuotientElement {
    std::vector<FieldElement> a;
};

// Arithmetic in L = K[X]/(f) for an Eisenstein f; v_L-aware.
class QuotientRing {
public:
    explicit QuotientRing(EisensteinPoly f);

    const EisensteinPoly& modulus() const { return f_; }
    long degree() const { return f_.degree(); }

    QuotientElement zero() const;
    QuotientElement one() const;
    QuotientElement pi() const;
    QuotientElement from_coords(std::vector<FieldElement> a) const;

    QuotientElement add(const QuotientElement& x, const QuotientElement& y) const;
    QuotientElement sub(const QuotientElement& x, const QuotientElement& y) const;
    QuotientElement mul(const QuotientElement& x, const QuotientElement& y) const;
    QuotientElement mul_base(const QuotientElement& x, const FieldElement& s) const;
    QuotientElement pow(const QuotientElement& x, unsigned long e) const;

    // phi(pi_L), reduced mod f; the result has v_L = 1.
    QuotientElement apply_series(const PerturbationSeries& phi) const;

    // g evaluated at x, for monic g of the same degree in the alternating
    // sign convention.
    QuotientElement eval_poly(const EisensteinPoly& g, const QuotientElement& x) const;

    // v_L via min over i of (n v_K(a_i) + i); the minimum is unique when it
    // exists, so a certain answer needs only the deciding coordinate.
    Valuation v_l(const QuotientElement& x) const;
    long v_l_lower_bound(const QuotientElement& x) const;
    bool indistinguishable_from_zero(const QuotientElement& x) const;

private:
    EisensteinPoly f_;
};

// c_lambda = product of c_{lambda_i}; empty lambda gives 1.
FieldElement c_lambda(const EisensteinPoly& f, const Partition& lambda);

// M_mu(pi_L) = sum over partitions lambda of |mu| with parts <= n of
// d_{lambda,mu} c_lambda (the tilings route).
FieldElement M_mu(const EisensteinPoly& f, const Partition& mu);

// Exact coefficient c~_h = E_h(phi(pi_L)) as a sum over partitions mu with
// h parts bounded by deg phi. Terms of weight beyond weight_cap are dropped
// and accounted for by capping the certified precision: every dropped term
// has v_K >= ceil((weight_cap+1)/n) because each c_h carries valuation >= 1.
FieldElement E_h_perturbed(const EisensteinPoly& f, const PerturbationSeries& phi,
                           long h, long weight_cap = kWeightCap);

// Minimal polynomial of phi(pi_L) through E_h_perturbed for h = 1..n.
EisensteinPoly minpoly_symmetric(const EisensteinPoly& f, const PerturbationSeries& phi,
                                 long weight_cap = kWeightCap);

// Minimal polynomial of phi(pi_L) by valuation-pivoted elimination over the
// power basis; per-coefficient precision comes out of the arithmetic.
EisensteinPoly minpoly_linear_algebra(const EisensteinPoly& f,
                                      const PerturbationSeries& phi);

// True iff ftilde(phi(pi_L)) is indistinguishable from zero at the
// precision the computation certifies.
bool root_check(const EisensteinPoly& f, const PerturbationSeries& phi,
                const EisensteinPoly& ftilde);

// Per-coefficient merge of the two routes after checking they agree to the
// smaller certified precision; keeps the better-certified coefficient.
EisensteinPoly minpoly_both_routes(const EisensteinPoly& f,
                                   const PerturbationSeries& phi,
                                   long weight_cap = kWeightCap);

}  // namespace ramify

#endif
