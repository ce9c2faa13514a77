#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace ramify::oracle {

namespace {

struct Aut {
    std::vector<int> perm;  // cycle q maps to perm[q] (equal lengths only)
    std::vector<int> rot;   // rotation applied on cycle q
};

std::vector<Aut> automorphisms(const CycleDigraph& g) {
    const std::vector<long>& lens = g.cycle_lengths().parts();
    size_t m = lens.size();

    // permutations: independent shuffles of each equal-length block
    std::vector<std::vector<int>> perms;
    std::vector<int> ident(m);
    std::iota(ident.begin(), ident.end(), 0);
    perms.push_back(ident);
    size_t start = 0;
    while (start < m) {
        size_t end = start;
        while (end < m && lens[end] == lens[start]) ++end;
        std::vector<int> block(ident.begin() + start, ident.begin() + end);
        std::vector<std::vector<int>> next;
        std::sort(block.begin(), block.end());
        do {
            for (const auto& base : perms) {
                std::vector<int> p = base;
                for (size_t i = 0; i < block.size(); ++i) p[start + i] = block[i];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(block.begin(), block.end()));
        perms = std::move(next);
        start = end;
    }

    std::vector<Aut> out;
    for (const auto& perm : perms) {
        std::vector<int> rot(m, 0);
        while (true) {
            out.push_back({perm, rot});
            size_t i = 0;
            while (i < m) {
                if (++rot[i] < lens[i]) break;
                rot[i] = 0;
                ++i;
            }
            if (i == m) break;
        }
    }
    return out;
}

Tiling apply(const Aut& a, const Tiling& t, const std::vector<long>& lens) {
    Tiling r;
    r.reserve(t.size());
    for (const PathTile& p : t)
        r.push_back({a.perm[p.cycle],
                     static_cast<int>((p.start + a.rot[p.cycle]) % lens[p.cycle]),
                     p.len});
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

long long eta_bruteforce(const CycleDigraph& gamma, const Partition& lambda,
                         const Partition& mu) {
    std::vector<Tiling> S = enumerate_tilings(gamma, lambda);
    std::vector<Tiling> T = enumerate_tilings(gamma, mu);
    std::vector<Aut> auts = automorphisms(gamma);
    const std::vector<long>& lens = gamma.cycle_lengths().parts();

    long long classes = 0;
    for (const Tiling& s : S) {
        for (const Tiling& t : T) {
            int stab = 0;
            bool minimal = true;
            for (const Aut& a : auts) {
                auto img = std::make_pair(apply(a, s, lens), apply(a, t, lens));
                if (img.first == s && img.second == t)
                    ++stab;
                else if (img < std::make_pair(s, t))
                    minimal = false;
            }
            if (stab == 1 && minimal) ++classes;
        }
    }
    return classes;
}

long long d_bruteforce(const Partition& lambda, const Partition& mu) {
    long w = lambda.weight();
    long long sum = 0;
    for (const Partition& lens : partitions_of(w, w)) {
        CycleDigraph gamma(lens);
        sum += gamma.sign() * eta_bruteforce(gamma, lambda, mu);
    }
    long parity = static_cast<long>(lambda.size() + mu.size());
    return (parity % 2 == 0 ? 1 : -1) * sum;
}

namespace {

void add_scaled(CoeffMap& acc, const CoeffMap& q, long long scale) {
    for (const auto& [key, c] : q) {
        long long& slot = acc[key];
        slot += scale * c;
        if (slot == 0) acc.erase(key);
    }
}

CoeffMap mul_by_e(const CoeffMap& p, long i) {
    CoeffMap r;
    for (const auto& [key, c] : p) {
        std::vector<long> parts = key.parts();
        parts.push_back(i);
        r[Partition(std::move(parts))] += c;
    }
    return r;
}

}  // namespace

CoeffMap newton_power_sum(long k, long n) {
    std::vector<CoeffMap> p(k + 1);
    for (long kk = 1; kk <= k; ++kk) {
        CoeffMap acc;
        for (long i = 1; i <= std::min(kk - 1, n); ++i)
            add_scaled(acc, mul_by_e(p[kk - i], i), i % 2 == 1 ? 1 : -1);
        if (kk <= n) {
            CoeffMap ek;
            ek[Partition{kk}] = 1;
            add_scaled(acc, ek, kk % 2 == 1 ? kk : -kk);
        }
        p[kk] = std::move(acc);
    }
    return p[k];
}

}  // namespace ramify::oracle
