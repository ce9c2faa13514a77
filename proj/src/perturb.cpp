#include "ramify/perturb.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace ramify {

// --------------------------------------------------------- PerturbationSeries

PerturbationSeries::PerturbationSeries(BaseFieldConfig base,
                                       std::vector<FieldElement> coeffs)
    : base_(base), r_(std::move(coeffs)) {
    if (r_.empty()) throw error("perturbation series needs at least r_1");
    for (const auto& rd : r_)
        if (!rd.config().same_field(base_))
            throw config_mismatch("perturbation coefficient from a different base field");
    Valuation v = r_.front().valuation();
    if (v.is_unknown())
        throw precision_too_low("cannot certify v_K(r_1) = 0");
    if (!v.is_finite() || v.value != 0)
        throw error("v_K(r_1) = 0 is required so phi(pi_L) stays a uniformizer");
}

PerturbationSeries PerturbationSeries::identity(const BaseFieldConfig& base) {
    return PerturbationSeries(base, {FieldElement::one(base)});
}

PerturbationSeries PerturbationSeries::one_term(const BaseFieldConfig& base,
                                                const FieldElement& r, long ell) {
    if (ell < 1) throw error("ell must be >= 1");
    std::vector<FieldElement> coeffs(ell + 1, FieldElement::zero(base));
    coeffs[0] = FieldElement::one(base);
    coeffs[ell] = r;
    return PerturbationSeries(base, std::move(coeffs));
}

const FieldElement& PerturbationSeries::coeff(long d) const {
    if (d < 1 || d > degree()) throw error("perturbation coefficient out of range");
    return r_[d - 1];
}

// --------------------------------------------------------------- QuotientRing

QuotientRing::QuotientRing(EisensteinPoly f) : f_(std::move(f)) {
    std::vector<std::string> bad = validate_eisenstein(f_);
    if (!bad.empty()) throw error("not Eisenstein: " + bad.front());
}

QuotientElement QuotientRing::zero() const {
    return {std::vector<FieldElement>(degree(), FieldElement::zero(f_.base()))};
}

QuotientElement QuotientRing::one() const {
    QuotientElement x = zero();
    x.a[0] = FieldElement::one(f_.base());
    return x;
}

QuotientElement QuotientRing::pi() const {
    QuotientElement x = zero();
    if (degree() == 1)
        return from_coords({f_.coeff(1)});  // X = c_1 in degree one
    x.a[1] = FieldElement::one(f_.base());
    return x;
}

QuotientElement QuotientRing::from_coords(std::vector<FieldElement> a) const {
    if (static_cast<long>(a.size()) > degree())
        throw error("quotient element has too many coordinates");
    a.resize(degree(), FieldElement::zero(f_.base()));
    return {std::move(a)};
}

QuotientElement QuotientRing::add(const QuotientElement& x, const QuotientElement& y) const {
    QuotientElement r = x;
    for (long i = 0; i < degree(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

QuotientElement QuotientRing::sub(const QuotientElement& x, const QuotientElement& y) const {
    QuotientElement r = x;
    for (long i = 0; i < degree(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

QuotientElement QuotientRing::mul(const QuotientElement& x, const QuotientElement& y) const {
    long n = degree();
    std::vector<FieldElement> t(2 * n - 1, FieldElement::zero(f_.base()));
    for (long i = 0; i < n; ++i) {
        if (x.a[i].is_exact_zero()) continue;
        for (long j = 0; j < n; ++j) t[i + j] = t[i + j] + x.a[i] * y.a[j];
    }
    // X^n = c_1 X^(n-1) - c_2 X^(n-2) + ... - (-1)^n c_n
    for (long k = 2 * n - 2; k >= n; --k) {
        if (t[k].is_exact_zero()) continue;
        FieldElement q = t[k];
        for (long h = 1; h <= n; ++h) {
            FieldElement term = q * f_.coeff(h);
            if (h % 2 == 0) term = -term;
            t[k - h] = t[k - h] + term;
        }
    }
    t.resize(n);
    return {std::move(t)};
}

QuotientElement QuotientRing::mul_base(const QuotientElement& x, const FieldElement& s) const {
    QuotientElement r = x;
    for (long i = 0; i < degree(); ++i) r.a[i] = r.a[i] * s;
    return r;
}

QuotientElement QuotientRing::pow(const QuotientElement& x, unsigned long e) const {
    QuotientElement acc = one();
    QuotientElement base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

QuotientElement QuotientRing::apply_series(const PerturbationSeries& phi) const {
    QuotientElement acc = zero();
    QuotientElement power = one();
    for (long d = 1; d <= phi.degree(); ++d) {
        power = mul(power, pi());
        if (!phi.coeff(d).is_exact_zero())
            acc = add(acc, mul_base(power, phi.coeff(d)));
    }
    assert(v_l_lower_bound(acc) >= 1);
    return acc;
}

QuotientElement QuotientRing::eval_poly(const EisensteinPoly& g,
                                        const QuotientElement& x) const {
    if (g.degree() != degree())
        throw error("polynomial degree does not match the quotient ring");
    QuotientElement acc = pow(x, g.degree());
    QuotientElement power = one();
    for (long h = g.degree(); h >= 1; --h) {
        // plain coefficient of X^(n-h) is (-1)^h c_h; power holds x^(n-h)
        acc = add(acc, mul_base(power, g.plain_coeff(h)));
        if (h > 1) power = mul(power, x);
    }
    return acc;
}

Valuation QuotientRing::v_l(const QuotientElement& x) const {
    long n = degree();
    long best = LONG_MAX, uncertain = LONG_MAX;
    for (long i = 0; i < n; ++i) {
        Valuation v = x.a[i].valuation();
        if (v.is_infinite()) continue;
        if (v.is_finite())
            best = std::min(best, n * v.value + i);
        else
            uncertain = std::min(uncertain, n * x.a[i].precision() + i);
    }
    if (best == LONG_MAX && uncertain == LONG_MAX) return Valuation::infinite();
    if (best < uncertain) return Valuation::finite(best);
    return Valuation::unknown();
}

long QuotientRing::v_l_lower_bound(const QuotientElement& x) const {
    long n = degree();
    long lb = LONG_MAX;
    for (long i = 0; i < n; ++i)
        lb = std::min(lb, n * x.a[i].val_lower_bound() + i);
    return lb;
}

bool QuotientRing::indistinguishable_from_zero(const QuotientElement& x) const {
    for (const auto& c : x.a)
        if (!c.indistinguishable_from_zero()) return false;
    return true;
}

// --------------------------------------------------------- symmetric route

namespace {

// one multiplication per new lambda: peel the smallest part
using ProductCache = std::map<Partition, FieldElement>;

const FieldElement& c_lambda_cached(const EisensteinPoly& f, const Partition& lambda,
                                    ProductCache& cache) {
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    FieldElement value = FieldElement::one(f.base());
    if (!lambda.empty()) {
        long part = lambda.parts().back();
        if (part > f.degree())
            throw part_out_of_range("partition part " + std::to_string(part) +
                                    " exceeds the degree " + std::to_string(f.degree()));
        std::vector<long> rest(lambda.parts().begin(), std::prev(lambda.parts().end()));
        value = c_lambda_cached(f, Partition(std::move(rest)), cache) * f.coeff(part);
    }
    return cache.emplace(lambda, std::move(value)).first->second;
}

FieldElement M_mu_cached(const EisensteinPoly& f, const Partition& mu,
                         ProductCache& cache) {
    if (static_cast<long>(mu.size()) > f.degree())
        throw too_many_parts("mu has more parts than the degree");
    long w = mu.weight();
    if (w > kWeightCap)
        throw cap_exceeded("weight " + std::to_string(w) + " exceeds the cap " +
                           std::to_string(kWeightCap));
    if (w == 0) return FieldElement::one(f.base());
    FieldElement acc = FieldElement::zero(f.base());
    for (const auto& [lambda, d] : psi_expansion(mu, f.degree()))
        acc = acc + c_lambda_cached(f, lambda, cache)
                        .mul_scalar(mpz_class(static_cast<long>(d)));
    return acc;
}

}  // namespace

FieldElement c_lambda(const EisensteinPoly& f, const Partition& lambda) {
    ProductCache cache;
    return c_lambda_cached(f, lambda, cache);
}

FieldElement M_mu(const EisensteinPoly& f, const Partition& mu) {
    ProductCache cache;
    return M_mu_cached(f, mu, cache);
}

namespace {

FieldElement E_h_with_cache(const EisensteinPoly& f, const PerturbationSeries& phi,
                            long h, long weight_cap, ProductCache& cache) {
    long n = f.degree();
    if (h < 1 || h > n) throw error("E_h index out of range");
    weight_cap = std::min(weight_cap, kWeightCap);
    if (h > weight_cap)
        throw cap_exceeded("E_" + std::to_string(h) +
                           " needs weights beyond the combinatorial cap");
    long dmax = phi.degree();
    bool dropped = false;
    FieldElement acc = FieldElement::zero(f.base());
    for (long w = h; w <= h * dmax; ++w) {
        if (w > weight_cap) {
            dropped = true;
            break;
        }
        for (const Partition& mu : partitions_of(w, dmax, h)) {
            FieldElement rmu = FieldElement::one(f.base());
            for (long part : mu.parts()) rmu = rmu * phi.coeff(part);
            if (rmu.is_exact_zero()) continue;
            acc = acc + rmu * M_mu_cached(f, mu, cache);
        }
    }
    if (dropped) {
        // every dropped term has v_K >= ceil((weight_cap+1)/n)
        long bound = (weight_cap + 1 + n - 1) / n;
        acc = acc.truncated(static_cast<int>(bound));
    }
    return acc;
}

}  // namespace

FieldElement E_h_perturbed(const EisensteinPoly& f, const PerturbationSeries& phi,
                           long h, long weight_cap) {
    ProductCache cache;
    return E_h_with_cache(f, phi, h, weight_cap, cache);
}

EisensteinPoly minpoly_symmetric(const EisensteinPoly& f, const PerturbationSeries& phi,
                                 long weight_cap) {
    ProductCache cache;
    std::vector<FieldElement> c;
    c.reserve(f.degree());
    for (long h = 1; h <= f.degree(); ++h)
        c.push_back(E_h_with_cache(f, phi, h, weight_cap, cache));
    return EisensteinPoly(f.base(), std::move(c));
}

// ------------------------------------------------------ linear-algebra route

EisensteinPoly minpoly_linear_algebra(const EisensteinPoly& f,
                                      const PerturbationSeries& phi) {
    long n = f.degree();
    QuotientRing ring(f);
    QuotientElement alpha = ring.apply_series(phi);

    // columns 0..n-1: coordinates of alpha^k; column n: alpha^n
    std::vector<std::vector<FieldElement>> m(
        n, std::vector<FieldElement>(n + 1, FieldElement::zero(f.base())));
    QuotientElement power = ring.one();
    for (long k = 0; k <= n; ++k) {
        for (long i = 0; i < n; ++i) m[i][k] = power.a[i];
        if (k < n) power = ring.mul(power, alpha);
    }

    // Gauss-Jordan, pivoting on entries of certified valuation zero. The
    // power-basis matrix is unit lower triangular mod M_K, so a unit pivot
    // survives every elimination step.
    std::vector<bool> row_done(n, false);
    std::vector<long> pivot_row_of_col(n, -1);
    for (long step = 0; step < n; ++step) {
        long pr = -1, pc = -1;
        bool saw_uncertain = false;
        for (long r = 0; r < n && pr < 0; ++r) {
            if (row_done[r]) continue;
            for (long c = 0; c < n; ++c) {
                if (pivot_row_of_col[c] >= 0) continue;
                Valuation v = m[r][c].valuation();
                if (v.is_unknown()) saw_uncertain = true;
                if (v.is_finite() && v.value == 0) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr < 0) {
            if (saw_uncertain)
                throw precision_too_low("elimination cannot certify a unit pivot");
            throw error("power-basis matrix is singular mod M_K");
        }
        FieldElement inv = m[pr][pc].inv_unit();
        for (long c = 0; c <= n; ++c) m[pr][c] = m[pr][c] * inv;
        for (long r = 0; r < n; ++r) {
            if (r == pr) continue;
            if (m[r][pc].is_exact_zero()) continue;
            FieldElement factor = m[r][pc];
            for (long c = 0; c <= n; ++c)
                m[r][c] = m[r][c] - factor * m[pr][c];
        }
        row_done[pr] = true;
        pivot_row_of_col[pc] = pr;
    }

    // alpha^n = sum x_k alpha^k, and the minimal polynomial is
    // X^n - x_{n-1} X^(n-1) - ... - x_0, so c~_h = (-1)^(h+1) x_{n-h}.
    std::vector<FieldElement> c(n, FieldElement::zero(f.base()));
    for (long h = 1; h <= n; ++h) {
        FieldElement x = m[pivot_row_of_col[n - h]][n];
        c[h - 1] = h % 2 == 1 ? x : -x;
    }
    return EisensteinPoly(f.base(), std::move(c));
}

bool root_check(const EisensteinPoly& f, const PerturbationSeries& phi,
                const EisensteinPoly& ftilde) {
    QuotientRing ring(f);
    QuotientElement alpha = ring.apply_series(phi);
    return ring.indistinguishable_from_zero(ring.eval_poly(ftilde, alpha));
}

EisensteinPoly minpoly_both_routes(const EisensteinPoly& f,
                                   const PerturbationSeries& phi, long weight_cap) {
    EisensteinPoly lin = minpoly_linear_algebra(f, phi);
    EisensteinPoly sym = minpoly_symmetric(f, phi, weight_cap);
    std::vector<FieldElement> c;
    c.reserve(f.degree());
    for (long h = 1; h <= f.degree(); ++h) {
        const FieldElement& a = lin.coeff(h);
        const FieldElement& b = sym.coeff(h);
        int shared = std::min(a.precision(), b.precision());
        if (!a.congruent(b, shared))
            throw error("minimal-polynomial routes disagree at h = " + std::to_string(h));
        c.push_back(a.precision() >= b.precision() ? a : b);
    }
    return EisensteinPoly(f.base(), std::move(c));
}

}  // namespace ramify
