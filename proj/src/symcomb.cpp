#include "ramify/symcomb.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ramify {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (long p : parts_)
        if (p < 1) throw error("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<long>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "}";
    return os.str();
}

Partition scale_partition(const Partition& lambda, long k, ScaleMode mode) {
    if (k < 1) throw error("scale factor must be positive");
    std::vector<long> parts;
    if (mode == ScaleMode::multiply_parts) {
        for (long p : lambda.parts()) parts.push_back(p * k);
    } else {
        for (long i = 0; i < k; ++i)
            parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    }
    return Partition(std::move(parts));
}

namespace {

void partitions_rec(long rem, long max_part, long num_parts, std::vector<long>& cur,
                    std::vector<Partition>& out) {
    if (rem == 0) {
        if (num_parts == 0 || static_cast<long>(cur.size()) == num_parts)
            out.emplace_back(cur);
        return;
    }
    if (num_parts > 0) {
        long slots = num_parts - static_cast<long>(cur.size());
        if (slots <= 0 || rem < slots || rem > slots * max_part) return;
    }
    for (long a = std::min(rem, max_part); a >= 1; --a) {
        cur.push_back(a);
        partitions_rec(rem - a, a, num_parts, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long w, long max_part, long num_parts) {
    if (w < 0 || max_part < 1) return {};
    if (w == 0) return num_parts == 0 ? std::vector<Partition>{Partition{}}
                                      : std::vector<Partition>{};
    std::vector<Partition> out;
    std::vector<long> cur;
    partitions_rec(w, max_part, num_parts, cur, out);
    return out;
}

// ------------------------------------------------------------- CycleDigraph

CycleDigraph::CycleDigraph(Partition cycle_lengths) : lengths_(std::move(cycle_lengths)) {
    if (lengths_.empty()) throw error("cycle digraph needs at least one cycle");
}

int CycleDigraph::sign() const {
    return (vertex_count() - cycle_count()) % 2 == 0 ? 1 : -1;
}

// ------------------------------------------------- per-cycle cut-set tables
//
// A tiling of one directed cycle by paths is exactly a nonempty set of "cut"
// vertices (the edge leaving a cut vertex is removed); the path sizes are the
// cyclic gaps between consecutive cuts. A rotation fixes the tiling pair iff
// it fixes both cut sets, so the stabilizer of a pair on one cycle is the
// subgroup generated by rotation through lcm of the two cut-set periods.

namespace {

using MultMap = std::map<long, long>;  // part value -> multiplicity

MultMap to_mult(const Partition& p) {
    MultMap m;
    for (long a : p.parts()) ++m[a];
    return m;
}

bool consume(MultMap& avail, const Partition& p) {
    for (long a : p.parts()) {
        auto it = avail.find(a);
        if (it == avail.end() || it->second == 0) return false;
        if (--it->second == 0) avail.erase(it);
    }
    return true;
}


void sub_partitions_rec(MultMap::const_reverse_iterator it,
                        MultMap::const_reverse_iterator end, long target,
                        std::vector<long>& cur, std::vector<Partition>& out) {
    if (target == 0) {
        out.emplace_back(cur);
        return;
    }
    if (it == end) return;
    long a = it->first, avail = it->second;
    auto next = std::next(it);
    long take_max = std::min(avail, target / a);
    for (long c = take_max; c >= 0; --c) {
        for (long i = 0; i < c; ++i) cur.push_back(a);
        sub_partitions_rec(next, end, target - c * a, cur, out);
        for (long i = 0; i < c; ++i) cur.pop_back();
    }
}

// all sub-multisets of avail with total = target
std::vector<Partition> sub_partitions(const MultMap& avail, long target) {
    std::vector<Partition> out;
    std::vector<long> cur;
    sub_partitions_rec(avail.rbegin(), avail.rend(), target, cur, out);
    return out;
}

uint32_t rotate_mask(uint32_t mask, long d, long len) {
    uint64_t m = mask;
    uint64_t full = (1ull << len) - 1;
    return static_cast<uint32_t>(((m << d) | (m >> (len - d))) & full);
}

long mask_period(uint32_t mask, long len) {
    for (long d = 1; d <= len; ++d) {
        if (len % d != 0) continue;
        if (d == len || rotate_mask(mask, d, len) == mask) return d;
    }
    return len;
}

Partition mask_gaps(uint32_t mask, long len) {
    std::vector<long> cuts;
    for (long v = 0; v < len; ++v)
        if (mask & (1u << v)) cuts.push_back(v);
    std::vector<long> gaps;
    for (size_t i = 0; i < cuts.size(); ++i) {
        long prev = cuts[(i + cuts.size() - 1) % cuts.size()];
        long g = (cuts[i] - prev) % len;
        if (g <= 0) g += len;
        gaps.push_back(g);
    }
    return Partition(std::move(gaps));
}

// per cycle length: arc partition -> (cut-set period -> number of cut sets)
using PeriodTable = std::map<Partition, std::map<long, long long>>;

std::mutex g_memo_mutex;
std::map<long, PeriodTable> g_cycle_tables;

const PeriodTable& cycle_table(long len) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_cycle_tables.find(len);
    if (it != g_cycle_tables.end()) return it->second;
    PeriodTable t;
    for (uint32_t mask = 1; mask < (1u << len); ++mask)
        ++t[mask_gaps(mask, len)][mask_period(mask, len)];
    return g_cycle_tables.emplace(len, std::move(t)).first->second;
}

// number of rotation classes of cut-set pairs (arcs alpha | arcs beta) on a
// len-cycle whose joint stabilizer is trivial
long long n_trivial_classes(long len, const Partition& alpha, const Partition& beta) {
    const PeriodTable& t = cycle_table(len);
    auto ia = t.find(alpha);
    auto ib = t.find(beta);
    if (ia == t.end() || ib == t.end()) return 0;
    long long pairs = 0;
    for (auto& [da, ca] : ia->second)
        for (auto& [db, cb] : ib->second)
            if (std::lcm(da, db) == len) pairs += ca * cb;
    assert(pairs % len == 0);
    return pairs / len;
}

long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > LLONG_MAX) throw error("binomial overflow in tiling count");
    }
    return static_cast<long long>(r);
}

struct EtaContext {
    std::vector<std::pair<long, long>> classes;  // (length, #cycles), desc

    struct Cand {
        Partition alpha, beta;
        long long triv;
    };

    long long over_classes(size_t idx, const MultMap& lam, const MultMap& mu) const {
        if (idx == classes.size()) {
            assert(lam.empty() && mu.empty());
            return 1;
        }
        auto [len, count] = classes[idx];
        std::vector<Cand> cand;
        for (const Partition& a : sub_partitions(lam, len))
            for (const Partition& b : sub_partitions(mu, len)) {
                long long t = n_trivial_classes(len, a, b);
                if (t > 0) cand.push_back({a, b, t});
            }
        return pick_decorations(idx, cand, 0, count, lam, mu);
    }

    // Choose a multiset of `left` decoration classes for the equal-length
    // cycles of class idx. Classes sharing (alpha, beta) are interchangeable
    // but must be pairwise distinct, hence the binomial factor.
    long long pick_decorations(size_t idx, const std::vector<Cand>& cand, size_t i,
                               long left, const MultMap& lam, const MultMap& mu) const {
        if (left == 0) return over_classes(idx + 1, lam, mu);
        if (i == cand.size()) return 0;
        long long total = pick_decorations(idx, cand, i + 1, left, lam, mu);
        MultMap lam2 = lam, mu2 = mu;
        for (long c = 1; c <= left; ++c) {
            if (!consume(lam2, cand[i].alpha) || !consume(mu2, cand[i].beta)) break;
            long long ways = binom_ll(cand[i].triv, c);
            if (ways == 0) break;
            total += ways * pick_decorations(idx, cand, i + 1, left - c, lam2, mu2);
        }
        return total;
    }
};

}  // namespace

long long eta(const CycleDigraph& gamma, const Partition& lambda, const Partition& mu) {
    long w = gamma.vertex_count();
    if (lambda.weight() != w || mu.weight() != w)
        throw weight_mismatch("tiling weights " + lambda.to_string() + ", " +
                              mu.to_string() + " do not cover " + std::to_string(w) +
                              " vertices");
    if (w > kWeightCap)
        throw cap_exceeded("weight " + std::to_string(w) + " exceeds the cap " +
                           std::to_string(kWeightCap));
    EtaContext ctx;
    for (auto& [len, c] : to_mult(gamma.cycle_lengths()))
        ctx.classes.emplace_back(len, c);
    std::reverse(ctx.classes.begin(), ctx.classes.end());
    return ctx.over_classes(0, to_mult(lambda), to_mult(mu));
}

// -------------------------------------------------------------- closed forms

namespace {

struct BsD {
    long b = 0;  // 0 encodes s = 0 (mu is a single part)
    long s = 0;
    long d = 0;
};

// decompositions mu = {b^s, d} with b != d, or a single part (s = 0)
std::vector<BsD> decomp_bs_d(const Partition& mu) {
    std::vector<BsD> out;
    MultMap m = to_mult(mu);
    if (m.size() == 1) {
        auto [v, c] = *m.begin();
        if (c == 1) out.push_back({0, 0, v});
        return out;
    }
    if (m.size() == 2) {
        auto it = m.begin();
        auto [x, cx] = *it;
        auto [y, cy] = *std::next(it);
        if (cy == 1) out.push_back({x, cx, y});
        if (cx == 1) out.push_back({y, cy, x});
    }
    return out;
}

struct ArC {
    long a = 0;
    long r = 0;
    long c = 0;
};

// decompositions lambda = {a^r, c} with a != c and r >= 1
std::vector<ArC> decomp_ar_c(const Partition& lambda) {
    std::vector<ArC> out;
    MultMap m = to_mult(lambda);
    if (m.size() != 2) return out;
    auto it = m.begin();
    auto [x, cx] = *it;
    auto [y, cy] = *std::next(it);
    if (cy == 1) out.push_back({x, cx, y});
    if (cx == 1) out.push_back({y, cy, x});
    return out;
}

// lambda = {a^r} shape
std::optional<std::pair<long, long>> decomp_ar(const Partition& lambda) {
    MultMap m = to_mult(lambda);
    if (m.size() != 1) return std::nullopt;
    auto [a, r] = *m.begin();
    return std::make_pair(a, r);
}

int pow_m1(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::optional<long long> eta_closed_form(long w, const Partition& lambda,
                                         const Partition& mu) {
    if (lambda.weight() != w || mu.weight() != w)
        throw weight_mismatch("eta closed form: weights differ from cycle length");
    for (int swap = 0; swap < 2; ++swap) {
        const Partition& first = swap ? mu : lambda;
        const Partition& second = swap ? lambda : mu;
        if (auto ar = decomp_ar(first)) {
            for (const BsD& bd : decomp_bs_d(second)) {
                (void)bd;
                return ar->first;  // Prop 2.2(a): eta = a
            }
        }
        for (const ArC& ac : decomp_ar_c(first)) {
            (void)ac;
            if (!decomp_bs_d(second).empty()) return w;  // Prop 2.2(b): eta = w
        }
    }
    return std::nullopt;
}

// ----------------------------------------------------------------- d_lambda_mu

namespace {

std::map<std::pair<Partition, Partition>, long long> g_d_memo;

}  // namespace

long long d_coeff(const Partition& lambda, const Partition& mu) {
    long w = lambda.weight();
    if (w != mu.weight())
        throw weight_mismatch("d coefficient needs partitions of equal weight");
    if (w == 0) return 1;  // m_{} = 1 = empty product
    if (w > kWeightCap)
        throw cap_exceeded("weight " + std::to_string(w) + " exceeds the cap " +
                           std::to_string(kWeightCap));

    std::pair<Partition, Partition> key =
        mu < lambda ? std::make_pair(mu, lambda) : std::make_pair(lambda, mu);
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_d_memo.find(key);
        if (it != g_d_memo.end()) return it->second;
    }

    long maxpart = std::max(lambda.parts().front(), mu.parts().front());
    long maxcycles = std::min(lambda.size(), mu.size());
    long long sum = 0;
    for (const Partition& lens : partitions_of(w, w)) {
        // every cycle carries at least one arc of each tiling, and every
        // arc fits inside one cycle
        if (static_cast<long>(lens.size()) > maxcycles) continue;
        if (lens.parts().front() < maxpart) continue;
        if (lens.parts().back() < lambda.parts().back() ||
            lens.parts().back() < mu.parts().back())
            continue;
        CycleDigraph gamma(lens);
        long long e = eta(gamma, lambda, mu);
        if (e != 0) sum += gamma.sign() * e;
    }
    long long d = pow_m1(static_cast<long>(lambda.size() + mu.size())) * sum;

    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_d_memo.emplace(std::move(key), d);
    return d;
}

std::optional<long long> d_closed_form(const Partition& lambda, const Partition& mu) {
    long w = lambda.weight();
    if (w != mu.weight() || w == 0) return std::nullopt;
    for (int swap = 0; swap < 2; ++swap) {
        const Partition& first = swap ? mu : lambda;
        const Partition& second = swap ? lambda : mu;
        // {a^r, c} against {b^s, d}: Prop 2.4, needs a > sb
        for (const ArC& ac : decomp_ar_c(first)) {
            for (const BsD& bd : decomp_bs_d(second)) {
                if (ac.a <= bd.s * bd.b) continue;
                bool split = bd.s > 0 && ac.c % bd.b == 0 && bd.s * bd.b >= ac.c;
                long long val = w - (split ? ac.a * bd.b : 0);
                return pow_m1(ac.r + bd.s + w + 1) * val;
            }
        }
        // {a^r} against {b^s, d}: only the single w-cycle contributes when
        // a > sb, and its eta is a by Prop 2.2(a)
        if (auto ar = decomp_ar(first)) {
            auto [a, r] = *ar;
            for (const BsD& bd : decomp_bs_d(second)) {
                if (a <= bd.s * bd.b) continue;
                return pow_m1(r + bd.s + w) * a;
            }
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------- psi expansion
//
// The full coefficient vector of one mu is a single pass over the cycle
// digraphs: instead of testing a fixed lambda, the lambda-side decorations
// range over all arc partitions and the union of their arcs is accumulated
// at the leaves. Groupwise this is the same admissible-class count that
// d_coeff performs pairwise (a property test pins the two together).

namespace {

struct PsiBatch {
    long max_part = 0;  // bound on lambda parts
    const Partition* mu = nullptr;
    std::vector<std::pair<long, long>> classes;
    int gamma_sign = 1;
    CoeffMap* out = nullptr;
    std::vector<long> lambda_parts;

    struct Cand {
        Partition alpha, beta;
        long long triv;
    };

    void over_classes(size_t idx, const MultMap& m, long long weight) {
        if (idx == classes.size()) {
            assert(m.empty());
            long parity = static_cast<long>(lambda_parts.size() + mu->size());
            long long signed_w = (parity % 2 == 0 ? 1 : -1) * gamma_sign * weight;
            Partition lambda(lambda_parts);
            (*out)[lambda] += signed_w;
            return;
        }
        auto [len, count] = classes[idx];
        std::vector<Cand> cand;
        for (const Partition& a : partitions_of(len, std::min(max_part, len)))
            for (const Partition& b : sub_partitions(m, len)) {
                long long t = n_trivial_classes(len, a, b);
                if (t > 0) cand.push_back({a, b, t});
            }
        pick(idx, cand, 0, count, m, weight);
    }

    void pick(size_t idx, const std::vector<Cand>& cand, size_t i, long left,
              const MultMap& m, long long weight) {
        if (left == 0) {
            over_classes(idx + 1, m, weight);
            return;
        }
        if (i == cand.size()) return;
        pick(idx, cand, i + 1, left, m, weight);
        MultMap m2 = m;
        size_t mark = lambda_parts.size();
        for (long c = 1; c <= left; ++c) {
            if (!consume(m2, cand[i].beta)) break;
            long long ways = binom_ll(cand[i].triv, c);
            if (ways == 0) break;
            lambda_parts.insert(lambda_parts.end(), cand[i].alpha.parts().begin(),
                                cand[i].alpha.parts().end());
            pick(idx, cand, i + 1, left - c, m2, weight * ways);
        }
        lambda_parts.resize(mark);
    }
};

std::map<std::pair<Partition, long>, CoeffMap> g_psi_memo;

}  // namespace

CoeffMap psi_expansion(const Partition& mu, long n) {
    if (static_cast<long>(mu.size()) > n)
        throw too_many_parts("mu has " + std::to_string(mu.size()) +
                             " parts but only " + std::to_string(n) +
                             " variables are available");
    long w = mu.weight();
    CoeffMap out;
    if (w == 0) {
        out[Partition{}] = 1;
        return out;
    }
    if (w > kWeightCap)
        throw cap_exceeded("weight " + std::to_string(w) + " exceeds the cap " +
                           std::to_string(kWeightCap));
    long max_part = std::min(n, w);
    std::pair<Partition, long> key{mu, max_part};
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_psi_memo.find(key);
        if (it != g_psi_memo.end()) return it->second;
    }

    long min_mu_part = mu.parts().back();
    for (const Partition& lens : partitions_of(w, w)) {
        if (lens.size() > mu.size()) continue;
        if (lens.parts().front() < mu.parts().front()) continue;
        if (lens.parts().back() < min_mu_part) continue;
        CycleDigraph gamma(lens);
        PsiBatch batch;
        batch.max_part = max_part;
        batch.mu = &mu;
        for (auto& [len, c] : to_mult(lens)) batch.classes.emplace_back(len, c);
        std::reverse(batch.classes.begin(), batch.classes.end());
        batch.gamma_sign = gamma.sign();
        batch.out = &out;
        batch.over_classes(0, to_mult(mu), 1);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);

    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return g_psi_memo.emplace(std::move(key), std::move(out)).first->second;
}

// ------------------------------------------------------- independent oracle
//
// Classical reduction behind the fundamental theorem of symmetric
// polynomials: repeatedly subtract the elementary-symmetric product whose
// leading monomial matches. Polynomials are kept as dense exponent-vector
// maps, so nothing here touches the tiling machinery.

namespace {

using Expo = std::vector<int>;
using Poly = std::map<Expo, long long>;

void poly_add_scaled(Poly& p, const Poly& q, long long scale) {
    for (auto& [e, c] : q) {
        long long& slot = p[e];
        slot += scale * c;
        if (slot == 0) p.erase(e);
    }
}

Poly expand_monomial_sym(const Partition& mu, long n) {
    Expo base(n, 0);
    for (size_t i = 0; i < mu.size(); ++i) base[i] = static_cast<int>(mu.parts()[i]);
    std::sort(base.begin(), base.end());
    Poly p;
    do {
        p[base] = 1;
    } while (std::next_permutation(base.begin(), base.end()));
    return p;
}

Poly elementary_sym(long n, long k) {
    Poly p;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Expo e(n, 0);
        for (int i : idx) e[i] = 1;
        p[e] = 1;
        // next combination
        long i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return p;
}

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r;
    for (auto& [ea, ca] : p)
        for (auto& [eb, cb] : q) {
            Expo e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            long long& slot = r[e];
            slot += ca * cb;
            if (slot == 0) r.erase(e);
        }
    return r;
}

std::map<std::pair<long, Partition>, Poly> g_eprod_memo;

const Poly& e_product(long n, const Partition& lambda) {
    std::pair<long, Partition> key{n, lambda};
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_eprod_memo.find(key);
        if (it != g_eprod_memo.end()) return it->second;
    }
    Poly result;
    if (lambda.empty()) {
        result[Expo(n, 0)] = 1;
    } else {
        std::vector<long> rest(lambda.parts().begin(), std::prev(lambda.parts().end()));
        const Poly& parent = e_product(n, Partition(std::move(rest)));
        result = poly_mul(parent, elementary_sym(n, lambda.parts().back()));
    }
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return g_eprod_memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

CoeffMap oracle_psi_expansion(const Partition& mu, long n) {
    if (static_cast<long>(mu.size()) > n)
        throw too_many_parts("mu has " + std::to_string(mu.size()) +
                             " parts but only " + std::to_string(n) +
                             " variables are available");
    long w = mu.weight();
    CoeffMap out;
    if (w == 0) {
        out[Partition{}] = 1;
        return out;
    }
    if (w > kWeightCap)
        throw cap_exceeded("weight " + std::to_string(w) + " exceeds the cap " +
                           std::to_string(kWeightCap));
    if (n > 12)
        throw cap_exceeded("symbolic oracle supports at most 12 variables");

    Poly p = expand_monomial_sym(mu, n);
    Expo prev_lead;
    while (!p.empty()) {
        auto lead = std::prev(p.end());  // lex-greatest exponent vector
        Expo alpha = lead->first;
        long long c = lead->second;
        assert(std::is_sorted(alpha.rbegin(), alpha.rend()));
        assert(prev_lead.empty() || alpha < prev_lead);
        prev_lead = alpha;

        std::vector<long> parts;
        for (long j = 0; j < n; ++j) {
            int next = j + 1 < n ? alpha[j + 1] : 0;
            for (int t = 0; t < alpha[j] - next; ++t) parts.push_back(j + 1);
        }
        Partition lambda(std::move(parts));
        out[lambda] = c;
        poly_add_scaled(p, e_product(n, lambda), -c);
    }
    return out;
}

// --------------------------------------------------------- tiling enumeration

std::vector<Tiling> enumerate_tilings(const CycleDigraph& gamma, const Partition& lambda) {
    long w = gamma.vertex_count();
    if (lambda.weight() != w)
        throw weight_mismatch("tiling weight " + std::to_string(lambda.weight()) +
                              " does not cover " + std::to_string(w) + " vertices");
    if (w > kWeightCap)
        throw cap_exceeded("weight " + std::to_string(w) + " exceeds the cap " +
                           std::to_string(kWeightCap));

    const std::vector<long>& lens = gamma.cycle_lengths().parts();
    // per cycle: the tilings induced by each nonempty cut set, mask order
    std::vector<std::vector<std::pair<Partition, Tiling>>> options(lens.size());
    for (size_t q = 0; q < lens.size(); ++q) {
        long len = lens[q];
        for (uint32_t mask = 1; mask < (1u << len); ++mask) {
            Tiling paths;
            std::vector<long> cuts;
            for (long v = 0; v < len; ++v)
                if (mask & (1u << v)) cuts.push_back(v);
            std::vector<long> sizes;
            for (size_t i = 0; i < cuts.size(); ++i) {
                long prev = cuts[(i + cuts.size() - 1) % cuts.size()];
                long g = (cuts[i] - prev) % len;
                if (g <= 0) g += len;
                paths.push_back({static_cast<int>(q),
                                 static_cast<int>((prev + 1) % len),
                                 static_cast<int>(g)});
                sizes.push_back(g);
            }
            std::sort(paths.begin(), paths.end());
            options[q].emplace_back(Partition(std::move(sizes)), std::move(paths));
        }
    }

    std::vector<Tiling> out;
    Tiling cur;
    MultMap remaining = to_mult(lambda);
    std::function<void(size_t)> rec = [&](size_t q) {
        if (q == options.size()) {
            if (remaining.empty()) {
                Tiling t = cur;
                std::sort(t.begin(), t.end());
                out.push_back(std::move(t));
            }
            return;
        }
        for (auto& [sizes, paths] : options[q]) {
            MultMap saved = remaining;
            if (!consume(remaining, sizes)) {
                remaining = std::move(saved);
                continue;
            }
            cur.insert(cur.end(), paths.begin(), paths.end());
            rec(q + 1);
            cur.resize(cur.size() - paths.size());
            remaining = std::move(saved);
        }
    };
    rec(0);
    return out;
}

}  // namespace ramify
