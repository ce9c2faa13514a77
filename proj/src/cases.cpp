#include "ramify/cases.hpp"

#include <algorithm>
#include <climits>
#include <random>

namespace ramify {

namespace {

// mt19937_64 with explicit modulo keeps case generation identical across
// standard libraries (distributions are implementation-defined).
struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t s) : g(s) {}
    long next(long bound) { return static_cast<long>(g() % static_cast<uint64_t>(bound)); }
};

FieldElement random_unit(Rng& rng, const BaseFieldConfig& cfg) {
    std::vector<mpz_class> coords;
    if (cfg.backend == Backend::char_p) {
        coords.emplace_back(1 + rng.next(cfg.p - 1));
        long extra = rng.next(3);
        for (long i = 0; i < extra; ++i) coords.emplace_back(rng.next(cfg.p));
    } else {
        long p2 = cfg.p * cfg.p;
        long a0 = rng.next(p2);
        if (a0 % cfg.p == 0) ++a0;
        coords.emplace_back(a0);
        for (int i = 1; i < cfg.e_k; ++i) coords.emplace_back(rng.next(p2));
    }
    return FieldElement::from_coords(cfg, std::move(coords), -1);
}

FieldElement random_with_valuation(Rng& rng, const BaseFieldConfig& cfg, long v) {
    return FieldElement::uniformizer(cfg).pow_u(v) * random_unit(rng, cfg);
}

}  // namespace

std::string backend_name(const BaseFieldConfig& cfg) {
    if (cfg.backend == Backend::char_p) return "laurent";
    return cfg.e_k == 1 ? "qp" : "ramified:" + std::to_string(cfg.e_k);
}

RandomCase random_case(uint64_t seed, uint64_t index, int precision) {
    Rng rng(seed * 0x9E3779B97F4A7C15ull + index * 0xBF58476D1CE4E5B9ull + 1);
    static const long primes[3] = {2, 3, 5};
    long p = primes[rng.next(3)];
    long roll = rng.next(3);
    BaseFieldConfig cfg;
    cfg.p = p;
    cfg.precision = precision;
    if (roll == 0 && p <= 3) {
        cfg.backend = Backend::char_p;
        cfg.e_k = 1;
    } else {
        cfg.backend = Backend::char_zero;
        cfg.e_k = roll == 2 ? 2 : 1;
    }

    long n = 2 + rng.next(8);
    std::vector<FieldElement> c(n, FieldElement::zero(cfg));
    for (long h = 1; h < n; ++h) {
        if (rng.next(3) == 0) continue;
        c[h - 1] = random_with_valuation(rng, cfg, 1 + rng.next(3));
    }
    c[n - 1] = random_with_valuation(rng, cfg, 1);
    if (cfg.backend == Backend::char_p && n % p == 0) {
        // keep the extension separable: some c_h with p coprime to h
        bool ok = false;
        for (long h = 1; h <= n; ++h)
            if (h % p != 0 && !c[h - 1].is_exact_zero()) ok = true;
        if (!ok) c[0] = random_with_valuation(rng, cfg, 1 + rng.next(3));
    }
    EisensteinPoly f(cfg, std::move(c));

    long ell = 1 + rng.next(3);

    FieldElement r;
    long rroll = rng.next(10);
    if (rroll == 0)
        r = FieldElement::zero(cfg);
    else if (rroll == 1)
        r = random_with_valuation(rng, cfg, 1);
    else
        r = random_unit(rng, cfg);

    long dmax = 1 + rng.next(5);
    std::vector<FieldElement> rg(dmax, FieldElement::zero(cfg));
    rg[0] = random_unit(rng, cfg);
    for (long d = 2; d <= dmax; ++d) {
        if (rng.next(3) == 0) continue;
        rg[d - 1] = random_with_valuation(rng, cfg, rng.next(3));
    }
    PerturbationSeries phi(cfg, std::move(rg));

    std::vector<FieldElement> rn(ell + 2, FieldElement::zero(cfg));
    rn[0] = FieldElement::one(cfg);
    if (rng.next(3) == 0) {
        // r_1 = 1 + pi^a u with n a >= ell keeps phi(pi) = pi mod M_L^(ell+1)
        long a = (ell + n - 1) / n;
        rn[0] = rn[0] + random_with_valuation(rng, cfg, a);
    }
    if (rng.next(4) != 0) rn[ell] = random_unit(rng, cfg);
    if (rng.next(2) == 0) rn[ell + 1] = random_with_valuation(rng, cfg, rng.next(2));
    PerturbationSeries phi_nochange(cfg, std::move(rn));

    return RandomCase(cfg, std::move(f), std::move(phi), ell, std::move(r),
                      std::move(phi_nochange));
}

CaseResult run_case(uint64_t seed, uint64_t index, int precision, int precision_ceiling) {
    std::function<CaseResult(int)> attempt = [&](int prec) {
        RandomCase rc = random_case(seed, index, prec);
        CaseResult res;
        res.index = index;
        res.backend = backend_name(rc.base);
        res.p = rc.base.p;
        res.n = rc.f.degree();
        res.ell = rc.ell;

        InseparabilityProfile profile = indices(rc.f);

        EisensteinPoly lin = minpoly_linear_algebra(rc.f, rc.phi);
        EisensteinPoly sym = minpoly_symmetric(rc.f, rc.phi);
        res.routes_agree = true;
        int shared = INT_MAX;
        std::vector<FieldElement> merged;
        for (long h = 1; h <= rc.f.degree(); ++h) {
            const FieldElement& a = lin.coeff(h);
            const FieldElement& b = sym.coeff(h);
            int s = std::min(a.precision(), b.precision());
            shared = std::min(shared, s);
            if (!a.congruent(b, s)) {
                res.routes_agree = false;
                res.note = "routes disagree at h = " + std::to_string(h);
            }
            merged.push_back(a.precision() >= b.precision() ? a : b);
        }
        res.shared_precision = std::min(shared, 9999);
        res.root_ok = root_check(rc.f, rc.phi, lin);

        res.profile_stable =
            indices(EisensteinPoly(rc.base, std::move(merged))) == profile;

        res.nochange_ok = verify_nochange(rc.f, rc.phi_nochange, rc.ell).all_verified;

        res.special_ok = true;
        for (const SpecialVerdict& v : verify_special(rc.f, rc.r, rc.ell))
            res.special_ok = res.special_ok && v.verified;

        res.krasner_ok = true;
        for (long h = 1; h <= rc.f.degree(); ++h)
            for (long l = 1; l <= rc.ell + 2; ++l)
                res.krasner_ok =
                    res.krasner_ok && kappa(profile, h, l) <= rho(profile, h, l);

        res.passed = res.routes_agree && res.root_ok && res.nochange_ok &&
                     res.special_ok && res.profile_stable && res.krasner_ok;
        if (!res.passed && res.note.empty()) {
            if (!res.root_ok) res.note = "root check failed";
            else if (!res.nochange_ok) res.note = "a rho_h congruence failed";
            else if (!res.special_ok) res.note = "a refined congruence failed";
            else if (!res.profile_stable) res.note = "indices changed under perturbation";
            else res.note = "kappa exceeded rho";
        }
        return res;
    };
    try {
        return with_precision_retry<CaseResult>(precision, precision_ceiling, attempt);
    } catch (const precision_too_low& e) {
        CaseResult res;
        res.index = index;
        res.passed = false;
        res.note = std::string("precision ceiling hit: ") + e.what();
        return res;
    }
}

SuiteResult run_random_suite(uint64_t seed, int count, int precision,
                             int precision_ceiling) {
    SuiteResult suite;
    suite.all_passed = true;
    for (int i = 0; i < count; ++i) {
        suite.cases.push_back(run_case(seed, i, precision, precision_ceiling));
        suite.all_passed = suite.all_passed && suite.cases.back().passed;
    }
    return suite;
}

}  // namespace ramify
