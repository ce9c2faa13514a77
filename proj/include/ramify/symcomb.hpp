#ifndef RAMIFY_SYMCOMB_HPP
#define RAMIFY_SYMCOMB_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify {

// Enumeration beyond this total weight is refused: the cycle-digraph sums
// are exponential and every use in the library stays well below it.
inline constexpr long kWeightCap = 16;

// Partition of a positive integer, stored as parts sorted descending.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts)
        : Partition(std::vector<long>(parts)) {}

    const std::vector<long>& parts() const { return parts_; }
    long weight() const { return weight_; }
    size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<long> parts_;
    long weight_ = 0;
};

enum class ScaleMode { multiply_parts, repeat };

// k.lambda (parts multiplied by k) or k*lambda (k concatenated copies).
Partition scale_partition(const Partition& lambda, long k, ScaleMode mode);

// All partitions of w with parts <= max_part, in descending lexicographic
// order; num_parts > 0 restricts to exactly that many parts.
std::vector<Partition> partitions_of(long w, long max_part, long num_parts = 0);

// Disjoint union of directed cycles, up to isomorphism.
class CycleDigraph {
public:
    explicit CycleDigraph(Partition cycle_lengths);
    const Partition& cycle_lengths() const { return lengths_; }
    long vertex_count() const { return lengths_.weight(); }
    long cycle_count() const { return static_cast<long>(lengths_.size()); }
    int sign() const;  // (-1)^(vertices - cycles)

private:
    Partition lengths_;
};

// Directed path inside a concrete labeling of a cycle digraph: the cycle
// index (cycles ordered by descending length), the start vertex, and the
// number of vertices covered.
struct PathTile {
    int cycle = 0;
    int start = 0;
    int len = 0;
    bool operator==(const PathTile& o) const {
        return cycle == o.cycle && start == o.start && len == o.len;
    }
    bool operator<(const PathTile& o) const {
        if (cycle != o.cycle) return cycle < o.cycle;
        if (start != o.start) return start < o.start;
        return len < o.len;
    }
};

using Tiling = std::vector<PathTile>;  // kept sorted

// All lambda-tilings of the concrete labeling of gamma, deterministic order.
std::vector<Tiling> enumerate_tilings(const CycleDigraph& gamma, const Partition& lambda);

// Number of isomorphism classes of admissible (lambda,mu)-tilings of gamma:
// orbit count, under rotations of each cycle and permutations of
// equal-length cycles, of tiling pairs with trivial stabilizer.
long long eta(const CycleDigraph& gamma, const Partition& lambda, const Partition& mu);

// Single-cycle closed forms for eta: lambda = {a^r} gives a, and
// lambda = {a^r, c} with a != c gives w, both against mu = {b^s, d} with
// b != d. Disengages (nullopt) outside those shapes.
std::optional<long long> eta_closed_form(long w, const Partition& lambda,
                                         const Partition& mu);

// d_{lambda,mu} = (-1)^(|lambda|+|mu|) * sum over cycle digraphs of
// sgn(gamma) * eta(gamma, lambda, mu), by exhaustive enumeration.
long long d_coeff(const Partition& lambda, const Partition& mu);

// Closed form for d where the {a^r(,c)} vs {b^s,d} hypotheses with a > sb
// apply; nullopt otherwise.
std::optional<long long> d_closed_form(const Partition& lambda, const Partition& mu);

using CoeffMap = std::map<Partition, long long>;

// Expansion of the monomial symmetric polynomial m_mu in n variables over
// products of elementary symmetric polynomials: lambda -> d_{lambda,mu},
// zero coefficients omitted. Computed through the tiling counts.
CoeffMap psi_expansion(const Partition& mu, long n);

// Same contract, computed by the classical leading-term reduction of the
// fundamental theorem of symmetric polynomials; shares nothing with the
// tiling route.
CoeffMap oracle_psi_expansion(const Partition& mu, long n);

}  // namespace ramify

#endif
