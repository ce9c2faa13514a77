#include "ramify/extension.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace ramify {

EisensteinPoly::EisensteinPoly(BaseFieldConfig base, std::vector<FieldElement> coeffs)
    : base_(base), c_(std::move(coeffs)) {
    n_ = static_cast<long>(c_.size());
    if (n_ < 1) throw error("Eisenstein polynomial needs degree >= 1");
    for (const auto& ch : c_)
        if (!ch.config().same_field(base_))
            throw config_mismatch("coefficient from a different base field");
    nu_ = 0;
    u_ = n_;
    while (u_ % base_.p == 0) {
        u_ /= base_.p;
        ++nu_;
    }
}

const FieldElement& EisensteinPoly::coeff(long h) const {
    if (h < 1 || h > n_) throw error("coefficient index out of range");
    return c_[h - 1];
}

FieldElement EisensteinPoly::plain_coeff(long h) const {
    const FieldElement& ch = coeff(h);
    return h % 2 == 0 ? ch : -ch;
}

std::vector<std::string> validate_eisenstein(const EisensteinPoly& f) {
    std::vector<std::string> violations;
    long n = f.degree();
    for (long h = 1; h <= n; ++h) {
        Valuation v = f.coeff(h).valuation();
        if (v.is_infinite()) {
            if (h == n) violations.push_back("c_n is zero, v_K(c_n) = 1 fails");
            continue;
        }
        if (v.is_unknown()) {
            // vanishes to the stored precision, so v >= prec >= 1 unless the
            // element carries no digits at all
            if (f.coeff(h).precision() < 1)
                throw precision_too_low("cannot certify v_K(c_" + std::to_string(h) +
                                        ") >= 1");
            if (h == n)
                throw precision_too_low("cannot certify v_K(c_n) = 1");
            continue;
        }
        if (v.value < 1)
            violations.push_back("v_K(c_" + std::to_string(h) + ") = " +
                                 std::to_string(v.value) + " < 1");
        else if (h == n && v.value != 1)
            violations.push_back("v_K(c_n) = " + std::to_string(v.value) + " != 1");
    }
    return violations;
}

long vbar(const mpz_class& k, long nu, long p) {
    if (k == 0) return nu;
    return std::min(pval(k, p), nu);
}

std::vector<RawIndex> indices_raw(const EisensteinPoly& f) {
    std::vector<std::string> bad = validate_eisenstein(f);
    if (!bad.empty()) throw error("not Eisenstein: " + bad.front());
    long n = f.degree();
    long nu = f.wild_exponent();
    long p = f.base().p;

    std::vector<RawIndex> out(nu + 1);
    for (long j = 0; j <= nu; ++j) {
        long best = LONG_MAX;
        long uncertain_lb = LONG_MAX;
        for (long h = 1; h <= n; ++h) {
            if (vbar(h, nu, p) > j) continue;
            Valuation v = f.coeff(h).valuation();
            if (v.is_infinite()) continue;
            if (v.is_finite())
                best = std::min(best, n * v.value - h);
            else
                uncertain_lb = std::min(uncertain_lb, n * f.coeff(h).precision() - h);
        }
        if (uncertain_lb < best)
            throw precision_too_low("i_" + std::to_string(j) +
                                    "^pi undecidable: a coefficient vanishing at its "
                                    "precision could attain the minimum");
        if (best == LONG_MAX)
            out[j] = {true, 0};
        else
            out[j] = {false, best};
    }
    assert(!out[nu].infinite && out[nu].value == 0);
    return out;
}

InseparabilityProfile indices(const EisensteinPoly& f) {
    InseparabilityProfile prof;
    prof.base = f.base();
    prof.n = f.degree();
    prof.u = f.unit_part();
    prof.nu = f.wild_exponent();
    prof.p = f.base().p;
    prof.raw = indices_raw(f);

    long nu = prof.nu;
    prof.i.resize(nu + 1);
    if (prof.char_p()) {
        for (long j = 0; j <= nu; ++j) {
            if (prof.raw[j].infinite)
                throw error("raw index i_" + std::to_string(j) +
                            "^pi is infinite in characteristic p: the extension "
                            "is inseparable");
            prof.i[j] = prof.raw[j].value;
        }
    } else {
        long el = prof.e_l();
        for (long j = 0; j <= nu; ++j) {
            long best = LONG_MAX;
            for (long jp = j; jp <= nu; ++jp) {
                if (prof.raw[jp].infinite) continue;
                best = std::min(best, prof.raw[jp].value + (jp - j) * el);
            }
            assert(best < LONG_MAX);  // the j' = nu term is always finite
            prof.i[j] = best;
        }
    }

    prof.A.resize(nu + 1);
    prof.b.resize(nu + 1);
    for (long j = 0; j <= nu; ++j) {
        prof.A[j] = prof.i[j] / prof.n + 1;
        prof.b[j] = prof.A[j] * prof.n - prof.i[j];
        assert(prof.b[j] >= 1 && prof.b[j] <= prof.n);
    }

    assert(prof.i[nu] == 0);
    for (long j = 0; j < nu; ++j) assert(prof.i[j] >= prof.i[j + 1]);
    if (nu >= 1) assert(prof.i[nu - 1] > 0);
    return prof;
}

mpq_class phi_tilde(const InseparabilityProfile& profile, long j, const mpq_class& x) {
    if (j < 0 || j > profile.nu) throw error("phi~ index out of range");
    mpq_class r = pow_mpz(mpz_class(profile.p), j) * x;
    r += profile.i[j];
    return r;
}

mpq_class phi(const InseparabilityProfile& profile, long j, const mpq_class& x) {
    if (j < 0 || j > profile.nu) throw error("phi index out of range");
    mpq_class best = phi_tilde(profile, 0, x);
    for (long j0 = 1; j0 <= j; ++j0) best = std::min(best, phi_tilde(profile, j0, x));
    return best;
}

mpq_class hasse_herbrand(const InseparabilityProfile& profile, const mpq_class& x) {
    return phi(profile, profile.nu, x) / profile.n;
}

std::vector<mpq_class> lower_breaks(const InseparabilityProfile& profile) {
    // phi_nu is the lower envelope of the lines i_j + p^j x; walk the active
    // minimizer from x = 0 (line nu, the unique minimum there) towards the
    // flattest line.
    std::vector<mpq_class> breaks;
    long active = profile.nu;
    while (active > 0) {
        mpq_class best_x;
        long next = -1;
        for (long j = 0; j < active; ++j) {
            mpq_class slope_diff =
                pow_mpz(mpz_class(profile.p), active) - pow_mpz(mpz_class(profile.p), j);
            mpq_class x = mpq_class(profile.i[j] - profile.i[active]) / slope_diff;
            x.canonicalize();
            if (next < 0 || x < best_x || (x == best_x && j < next)) {
                best_x = x;
                next = j;
            }
        }
        if (breaks.empty() || best_x > breaks.back()) breaks.push_back(best_x);
        active = next;
    }
    return breaks;
}

}  // namespace ramify
