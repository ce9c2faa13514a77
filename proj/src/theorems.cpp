#include "ramify/theorems.hpp"

#include <algorithm>
#include <cassert>

namespace ramify {

namespace {

long ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r.get_si();
}

long pow_long(long base, long e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

long rho(const InseparabilityProfile& profile, long h, long ell) {
    if (h < 1 || h > profile.n) throw error("rho: h out of range");
    if (ell < 1) throw error("rho: ell must be >= 1");
    long j = vbar(h, profile.nu, profile.p);
    mpq_class q = (phi(profile, j, ell) + h) / profile.n;
    return ceil_q(q);
}

long kappa(const InseparabilityProfile& profile, long h, long ell) {
    if (h < 1 || h > profile.n) throw error("kappa: h out of range");
    if (ell < 1) throw error("kappa: ell must be >= 1");
    mpq_class q = (phi(profile, profile.nu, ell) + h) / profile.n;
    long k = ceil_q(q);
    assert(k <= rho(profile, h, ell));
    return k;
}

CongruenceReport equiv_ell(const EisensteinPoly& f, const EisensteinPoly& ftilde,
                           long ell) {
    if (f.degree() != ftilde.degree())
        throw error("~_ell needs polynomials of the same degree");
    if (!f.base().same_field(ftilde.base()))
        throw config_mismatch("~_ell needs polynomials over the same base field");
    InseparabilityProfile profile = indices(f);

    CongruenceReport report;
    report.ell = ell;
    report.all_verified = true;
    for (long h = 1; h <= f.degree(); ++h) {
        CoeffCheck check;
        check.h = h;
        check.rho = rho(profile, h, ell);
        check.kappa = kappa(profile, h, ell);
        const FieldElement& a = f.coeff(h);
        const FieldElement& b = ftilde.coeff(h);
        check.prec_cap = std::min(a.precision(), b.precision());
        if (check.prec_cap < check.rho)
            throw precision_too_low("~_" + std::to_string(ell) + " at h = " +
                                    std::to_string(h) + ": need precision " +
                                    std::to_string(check.rho) + ", have " +
                                    std::to_string(check.prec_cap));
        check.verified = a.congruent(b, static_cast<int>(check.rho));
        Valuation dv = (b - a).valuation();
        if (dv.is_finite())
            check.max_verified = std::min(dv.value, check.prec_cap);
        else
            check.max_verified = check.prec_cap;
        report.all_verified = report.all_verified && check.verified;
        report.per_h.push_back(check);
    }
    return report;
}

std::optional<SpecialTerms> special_terms(const InseparabilityProfile& profile,
                                          long ell, long j) {
    if (j < 0 || j > profile.nu) throw error("special_terms: j out of range");
    if (ell < 1) throw error("special_terms: ell must be >= 1");

    mpq_class phij_q = phi(profile, j, ell);
    assert(phij_q.get_den() == 1);
    mpz_class phij = phij_q.get_num();
    if (vbar(phij, profile.nu, profile.p) != j) return std::nullopt;

    SpecialTerms st;
    st.ell = ell;
    st.j = j;
    mpz_class rem = phij % profile.n;
    st.h = profile.n - rem.get_si();
    if (st.h == 0) st.h = profile.n;  // unreachable: rem < n
    assert(st.h >= 1 && st.h <= profile.n);
    mpz_class kq = (phij + st.h) / profile.n;
    assert((phij + st.h) % profile.n == 0);
    st.k = kq.get_si();
    long pj = pow_long(profile.p, j);
    assert(st.h % pj == 0);
    st.h0 = st.h / pj;

    for (long m = 0; m <= j; ++m) {
        if (phi_tilde(profile, m, ell) != phij_q) continue;
        SpecialTermData t;
        t.m = m;
        t.A = profile.A[m];
        t.b = profile.b[m];
        assert(st.k >= t.A);
        long sign = (st.k + ell + t.A) % 2 == 0 ? 1 : -1;
        if (t.b < st.h)
            t.g = sign * (st.h0 * pow_long(profile.p, j - m) + ell -
                          profile.u * pow_long(profile.p, profile.nu - m));
        else if (t.b < profile.n)
            t.g = sign * (st.h0 * pow_long(profile.p, j - m) + ell);
        else
            t.g = sign * profile.u * pow_long(profile.p, profile.nu - m);
        st.terms.push_back(t);
    }
    assert(!st.terms.empty());  // m = j itself always qualifies
    return st;
}

std::optional<SpecialPrediction> predict_special(const EisensteinPoly& f,
                                                 const FieldElement& r, long ell,
                                                 long j) {
    InseparabilityProfile profile = indices(f);
    auto st = special_terms(profile, ell, j);
    if (!st) return std::nullopt;

    FieldElement pred = f.coeff(st->h);
    for (const SpecialTermData& t : st->terms) {
        FieldElement term = f.coeff(f.degree()).pow_u(st->k - t.A) * f.coeff(t.b) *
                            r.pow_u(pow_long(profile.p, t.m));
        pred = pred + term.mul_scalar(mpz_class(static_cast<long>(t.g)));
    }
    pred = pred.truncated(static_cast<int>(st->k + 1));
    return SpecialPrediction{*st, std::move(pred)};
}

CongruenceReport verify_nochange(const EisensteinPoly& f, const PerturbationSeries& phi,
                                 long ell) {
    if (ell < 1) throw error("verify_nochange: ell must be >= 1");
    QuotientRing ring(f);
    QuotientElement delta = ring.sub(ring.apply_series(phi), ring.pi());
    Valuation dv = ring.v_l(delta);
    if (dv.is_finite() && dv.value < ell + 1)
        throw hypothesis_violated("phi(pi_L) = pi_L mod M_L^" + std::to_string(ell + 1) +
                                  " fails: v_L of the difference is " +
                                  std::to_string(dv.value));
    if (dv.is_unknown() && ring.v_l_lower_bound(delta) < ell + 1)
        throw precision_too_low("cannot certify the Theorem hypothesis at ell = " +
                                std::to_string(ell));

    EisensteinPoly ftilde = minpoly_both_routes(f, phi);
    return equiv_ell(f, ftilde, ell);
}

std::vector<SpecialVerdict> verify_special(const EisensteinPoly& f,
                                           const FieldElement& r, long ell) {
    InseparabilityProfile profile = indices(f);
    PerturbationSeries phi_series =
        r.is_exact_zero() ? PerturbationSeries::identity(f.base())
                          : PerturbationSeries::one_term(f.base(), r, ell);
    EisensteinPoly ftilde = minpoly_both_routes(f, phi_series);

    std::vector<SpecialVerdict> out;
    for (long j = 0; j <= profile.nu; ++j) {
        auto pred = predict_special(f, r, ell, j);
        if (!pred) continue;
        SpecialVerdict v;
        v.j = j;
        v.h = pred->data.h;
        v.k = pred->data.k;
        v.predicted = pred->predicted;
        v.actual = ftilde.coeff(v.h);
        v.verified = v.actual.congruent(v.predicted, static_cast<int>(v.k + 1));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ramify
