#ifndef RAMIFY_BASEFIELD_HPP
#define RAMIFY_BASEFIELD_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify {

// Backend for the base local field K with residue field F_p:
//   char_zero : O_K = Z_p[pi_K] / (pi_K^e_K - p), a totally ramified
//               extension of Q_p of degree e_K,
//   char_p    : O_K = F_p[[pi_K]], truncated Laurent-series coefficients.
enum class Backend { char_zero, char_p };

struct BaseFieldConfig {
    long p = 2;
    Backend backend = Backend::char_zero;
    int e_k = 1;        // ramification over Q_p; ignored by char_p
    int precision = 20; // default working precision N, in units of v_K

    bool same_field(const BaseFieldConfig& o) const {
        if (p != o.p || backend != o.backend) return false;
        return backend == Backend::char_p || e_k == o.e_k;
    }
};

// Three-way valuation answer: a certain finite value, +infinity (the exact
// zero element), or unknown because the element is indistinguishable from 0
// at its stored precision.
struct Valuation {
    enum class Kind { finite, infinite, unknown };
    Kind kind = Kind::unknown;
    long value = 0;  // meaningful only when kind == finite

    bool is_finite() const { return kind == Kind::finite; }
    bool is_infinite() const { return kind == Kind::infinite; }
    bool is_unknown() const { return kind == Kind::unknown; }

    static Valuation finite(long v) { return {Kind::finite, v}; }
    static Valuation infinite() { return {Kind::infinite, 0}; }
    static Valuation unknown() { return {Kind::unknown, 0}; }
};

// Element of O_K with tracked absolute precision: the element is known
// modulo M_K^prec, or exactly (integral data that never loses digits).
//
// Representation: char_zero keeps e_K coordinates over Z_p (coordinate i is
// known mod p^ceil((prec-i)/e_K)); char_p keeps F_p coefficients of powers
// of pi_K. Values are immutable after construction.
class FieldElement {
public:
    static constexpr int exact_precision = 1 << 28;

    FieldElement() : prec_(exact_precision) {}

    static FieldElement zero(const BaseFieldConfig& cfg);
    static FieldElement one(const BaseFieldConfig& cfg);
    static FieldElement from_integer(const BaseFieldConfig& cfg, const mpz_class& m);
    static FieldElement uniformizer(const BaseFieldConfig& cfg);
    // coords are pi_K-power coordinates; prec < 0 means exact.
    static FieldElement from_coords(const BaseFieldConfig& cfg,
                                    std::vector<mpz_class> coords, int prec);

    const BaseFieldConfig& config() const { return cfg_; }
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ >= exact_precision; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement mul_scalar(const mpz_class& s) const;
    FieldElement pow_u(unsigned long e) const;

    Valuation valuation() const;
    // Certified lower bound on v_K: the valuation when certain, the stored
    // precision when the element vanishes at that precision.
    long val_lower_bound() const;

    bool is_exact_zero() const;
    // All stored digits vanish (the element cannot be told apart from 0).
    bool indistinguishable_from_zero() const;

    // Same value with precision lowered to at most k (k >= 0).
    FieldElement truncated(int k) const;

    // Multiplicative inverse of a unit, to min(precision(), target) digits;
    // target < 0 uses the config's working precision.
    FieldElement inv_unit(int target = -1) const;

    // True iff v_K(*this - o) >= k. Throws precision_too_low unless both
    // operands carry at least k digits.
    bool congruent(const FieldElement& o, int k) const;

    // Canonical residue string: integer for unramified char 0, coordinate
    // list [a0,...] for ramified, polynomial in t for char p. to_string
    // appends the precision marker; value_string is the bare value.
    std::string to_string() const;
    std::string value_string() const;
    static FieldElement parse(const BaseFieldConfig& cfg, const std::string& text);

    bool operator==(const FieldElement& o) const {
        return cfg_.same_field(o.cfg_) && prec_ == o.prec_ && coords_ == o.coords_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    const std::vector<mpz_class>& coords() const { return coords_; }

private:
    FieldElement(BaseFieldConfig cfg, std::vector<mpz_class> coords, int prec);
    void normalize();
    void check_same_field(const FieldElement& o) const;

    BaseFieldConfig cfg_;
    std::vector<mpz_class> coords_;
    int prec_ = exact_precision;
};

mpz_class pow_mpz(const mpz_class& base, unsigned long e);
long pval(const mpz_class& m, long p);  // v_p(m), m != 0

// Throws parse_error unless p is prime, e_K >= 1 and the precision >= 1.
void validate_config(const BaseFieldConfig& cfg);

}  // namespace ramify

#endif
