#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "ramify/symcomb.hpp"

using namespace ramify;

namespace {

bool divides_all_mults(const Partition& mu, long k) {
    std::map<long, long> m;
    for (long a : mu.parts()) ++m[a];
    for (auto& [part, c] : m)
        if (c % k != 0) return false;
    return true;
}

long long ipow(long b, long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("partition enumeration order and filters") {
    std::vector<Partition> got = partitions_of(4, 4);
    std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(got == want);
    CHECK(partitions_of(4, 2, 2) == std::vector<Partition>{{2, 2}});
    CHECK(partitions_of(3, 1) == std::vector<Partition>{{1, 1, 1}});
    CHECK(partitions_of(5, 4, 7).empty());
}

TEST_CASE("partition scaling") {
    CHECK(scale_partition({2, 1}, 3, ScaleMode::multiply_parts) == Partition{6, 3});
    CHECK(scale_partition({2, 1}, 3, ScaleMode::repeat) ==
          Partition{2, 2, 2, 1, 1, 1});
    CHECK(scale_partition({1}, 1, ScaleMode::multiply_parts) == Partition{1});
    CHECK(scale_partition({1}, 1, ScaleMode::repeat) == Partition{1});
}

TEST_CASE("tiling enumeration on small digraphs") {
    CHECK(enumerate_tilings(CycleDigraph(Partition{3}), {3}).size() == 3);
    CHECK(enumerate_tilings(CycleDigraph(Partition{2}), {1, 1}).size() == 1);
    CHECK(enumerate_tilings(CycleDigraph(Partition{1}), {1}).size() == 1);
    CHECK(enumerate_tilings(CycleDigraph(Partition{4}), {2, 2}).size() == 2);
    CHECK_THROWS_AS(enumerate_tilings(CycleDigraph(Partition{3}), {2}),
                    weight_mismatch);
}

TEST_CASE("eta on the closed-form shapes") {
    CHECK(eta(CycleDigraph(Partition{4}), {2, 2}, {3, 1}) == 2);
    CHECK(eta(CycleDigraph(Partition{5}), {2, 2, 1}, {3, 2}) == 5);
    CHECK(eta(CycleDigraph(Partition{1}), {1}, {1}) == 1);
}

TEST_CASE("eta equals the explicit orbit count everywhere (w <= 6)") {
    for (long w = 1; w <= 6; ++w) {
        std::vector<Partition> parts = partitions_of(w, w);
        for (const Partition& lens : parts) {
            CycleDigraph gamma(lens);
            for (const Partition& lam : parts)
                for (const Partition& mu : parts) {
                    INFO("gamma=", lens.to_string(), " lambda=", lam.to_string(),
                         " mu=", mu.to_string());
                    CHECK(eta(gamma, lam, mu) == oracle::eta_bruteforce(gamma, lam, mu));
                }
        }
    }
}

TEST_CASE("d coefficients: pinned small values") {
    CHECK(d_coeff({1}, {1}) == 1);
    // m_(2) = e_1^2 - 2 e_2
    CHECK(d_coeff({1, 1}, {2}) == 1);
    CHECK(d_coeff({2}, {2}) == -2);
    // m_(1,1) = e_2
    CHECK(d_coeff({2}, {1, 1}) == 1);
    CHECK(d_coeff({1, 1}, {1, 1}) == 0);
    // Prop 2.4 shapes
    CHECK(d_coeff({3, 1}, {2, 1, 1}) == 1);
    CHECK(d_coeff({5, 1}, {4, 2}) == -6);
    CHECK_THROWS_AS(d_coeff({2}, {1, 1, 1}), weight_mismatch);
}

TEST_CASE("d agrees with the brute-force group action (w <= 5)") {
    for (long w = 1; w <= 5; ++w) {
        std::vector<Partition> parts = partitions_of(w, w);
        for (const Partition& lam : parts)
            for (const Partition& mu : parts)
                CHECK(d_coeff(lam, mu) == oracle::d_bruteforce(lam, mu));
    }
}

TEST_CASE("d is symmetric (w <= 6)") {
    for (long w = 1; w <= 6; ++w) {
        std::vector<Partition> parts = partitions_of(w, w);
        for (const Partition& lam : parts)
            for (const Partition& mu : parts)
                CHECK(d_coeff(lam, mu) == d_coeff(mu, lam));
    }
}

TEST_CASE("psi expansion: pinned maps") {
    CoeffMap m2 = psi_expansion({2}, 2);
    CHECK(m2.size() == 2);
    CHECK(m2[{1, 1}] == 1);
    CHECK(m2[{2}] == -2);

    CoeffMap m1 = psi_expansion({1}, 1);
    CHECK(m1.size() == 1);
    CHECK(m1[{1}] == 1);

    CoeffMap m11 = psi_expansion({1, 1}, 2);
    CHECK(m11.size() == 1);
    CHECK(m11[{2}] == 1);

    CoeffMap m21 = psi_expansion({2, 1}, 3);
    CHECK(m21.size() == 2);
    CHECK(m21[{2, 1}] == 1);
    CHECK(m21[{3}] == -3);

    CHECK_THROWS_AS(psi_expansion({1, 1}, 1), too_many_parts);
}

TEST_CASE("oracle expansion: pinned maps and Newton cross-check") {
    CoeffMap m2 = oracle_psi_expansion({2}, 2);
    CHECK(m2.size() == 2);
    CHECK(m2[{1, 1}] == 1);
    CHECK(m2[{2}] == -2);
    CHECK(oracle_psi_expansion({1}, 3) == CoeffMap{{Partition{1}, 1}});
    CoeffMap m21 = oracle_psi_expansion({2, 1}, 3);
    CHECK(m21[{2, 1}] == 1);
    CHECK(m21[{3}] == -3);

    for (long n = 2; n <= 6; ++n)
        for (long k = 1; k <= 6; ++k) {
            INFO("n=", n, " k=", k);
            CHECK(oracle_psi_expansion({k}, n) == oracle::newton_power_sum(k, n));
        }
}

TEST_CASE("batched expansion equals pointwise d everywhere (w <= 7)") {
    for (long w = 1; w <= 7; ++w)
        for (const Partition& mu : partitions_of(w, w))
            for (long n : {2L, 3L, w}) {
                if (static_cast<long>(mu.size()) > n) continue;
                CoeffMap batched = psi_expansion(mu, n);
                for (const Partition& lam : partitions_of(w, std::min(n, w))) {
                    long long want = d_coeff(lam, mu);
                    auto it = batched.find(lam);
                    long long got = it == batched.end() ? 0 : it->second;
                    INFO("mu=", mu.to_string(), " lambda=", lam.to_string(), " n=", n);
                    CHECK(got == want);
                }
            }
}

TEST_CASE("tiling route matches the symbolic oracle (w <= 6, all n)") {
    for (long w = 1; w <= 6; ++w)
        for (const Partition& mu : partitions_of(w, w))
            for (long n = static_cast<long>(mu.size()); n <= 6; ++n) {
                INFO("mu=", mu.to_string(), " n=", n);
                CHECK(psi_expansion(mu, n) == oracle_psi_expansion(mu, n));
            }
}

TEST_CASE("closed form for d agrees with enumeration where it applies (w <= 8)") {
    long applicable = 0;
    for (long w = 1; w <= 8; ++w) {
        std::vector<Partition> parts = partitions_of(w, w);
        for (const Partition& lam : parts)
            for (const Partition& mu : parts) {
                auto cf = d_closed_form(lam, mu);
                if (!cf) continue;
                ++applicable;
                INFO("lambda=", lam.to_string(), " mu=", mu.to_string());
                CHECK(*cf == d_coeff(lam, mu));
            }
    }
    CHECK(applicable > 50);
    CHECK(d_closed_form({3, 1}, {2, 1, 1}) == 1);
    CHECK(d_closed_form({5, 1}, {4, 2}) == -6);
    CHECK(!d_closed_form({2, 2}, {2, 2}).has_value());
}

TEST_CASE("eta closed forms match enumeration on single cycles (w <= 8)") {
    long applicable = 0;
    for (long w = 1; w <= 8; ++w) {
        CycleDigraph gamma{Partition{w}};
        std::vector<Partition> parts = partitions_of(w, w);
        for (const Partition& lam : parts)
            for (const Partition& mu : parts) {
                auto cf = eta_closed_form(w, lam, mu);
                if (!cf) continue;
                ++applicable;
                INFO("w=", w, " lambda=", lam.to_string(), " mu=", mu.to_string());
                CHECK(*cf == eta(gamma, lam, mu));
            }
    }
    CHECK(applicable > 100);
}

TEST_CASE("p-power divisibility of d (small grid)") {
    for (long p : {2L, 3L}) {
        for (long t = 1; t <= 2; ++t) {
            long pt = ipow(p, t);
            for (long wp = 1; wp * pt <= 8; ++wp) {
                long w = wp * pt;
                for (const Partition& lamp : partitions_of(wp, wp)) {
                    Partition lam = scale_partition(lamp, pt, ScaleMode::multiply_parts);
                    for (const Partition& mu : partitions_of(w, w))
                        for (long j = 0; j <= t; ++j) {
                            if (divides_all_mults(mu, ipow(p, j + 1))) continue;
                            long long d = d_coeff(lam, mu);
                            INFO("p=", p, " t=", t, " j=", j, " lambda=",
                                 lam.to_string(), " mu=", mu.to_string());
                            CHECK(d % ipow(p, t - j) == 0);
                        }
                }
            }
        }
    }
}

TEST_CASE("scaling congruence of d (small grid)") {
    for (long p : {2L, 3L}) {
        for (long j = 1; j <= 2; ++j) {
            long pj = ipow(p, j);
            for (long wp = 1; wp * pj <= 10; ++wp) {
                for (const Partition& lamp : partitions_of(wp, wp))
                    for (const Partition& mup : partitions_of(wp, wp)) {
                        long long base = d_coeff(lamp, mup);
                        Partition lam =
                            scale_partition(lamp, pj, ScaleMode::multiply_parts);
                        Partition mu = scale_partition(mup, pj, ScaleMode::repeat);
                        long long scaled = d_coeff(lam, mu);
                        // t = largest power of p dividing every part of lambda'
                        long t = 0;
                        while (true) {
                            bool all = true;
                            for (long a : lamp.parts())
                                if (a % ipow(p, t + 1) != 0) all = false;
                            if (!all) break;
                            ++t;
                        }
                        long long mod = ipow(p, t + 1);
                        INFO("p=", p, " j=", j, " lambda'=", lamp.to_string(), " mu'=",
                             mup.to_string());
                        CHECK((scaled - base) % mod == 0);
                    }
            }
        }
    }
}

TEST_CASE("weight cap and argument checks") {
    Partition big17(std::vector<long>(17, 1));
    CHECK_THROWS_AS(d_coeff(big17, big17), cap_exceeded);
    CHECK_THROWS_AS(eta(CycleDigraph(Partition{17}), big17, big17), cap_exceeded);
    CHECK_THROWS_AS(oracle_psi_expansion(Partition{17}, 17), cap_exceeded);
    CHECK_THROWS_AS(Partition({0}), error);
}
