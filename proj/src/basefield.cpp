#include "ramify/basefield.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <sstream>

namespace ramify {

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long pval(const mpz_class& m, long p) {
    assert(m != 0);
    mpz_class quot;
    mpz_class pp(p);
    return static_cast<long>(
        mpz_remove(quot.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
}

void validate_config(const BaseFieldConfig& cfg) {
    if (cfg.p < 2 || mpz_probab_prime_p(mpz_class(cfg.p).get_mpz_t(), 30) == 0)
        throw parse_error("p = " + std::to_string(cfg.p) + " is not prime");
    if (cfg.backend == Backend::char_zero && cfg.e_k < 1)
        throw parse_error("ramification index must be >= 1");
    if (cfg.precision < 1)
        throw parse_error("working precision must be >= 1");
}

namespace {

long sat_add(long a, long b) {
    const long cap = FieldElement::exact_precision;
    if (a >= cap || b >= cap) return cap;
    return std::min(a + b, cap);
}

// ceil(a / b) for b > 0, clamped below at 0.
long ceil_div_pos(long a, long b) {
    if (a <= 0) return 0;
    return (a + b - 1) / b;
}

}  // namespace

FieldElement::FieldElement(BaseFieldConfig cfg, std::vector<mpz_class> coords, int prec)
    : cfg_(cfg), coords_(std::move(coords)), prec_(prec) {
    normalize();
}

void FieldElement::normalize() {
    if (prec_ < 0) prec_ = 0;
    if (prec_ > exact_precision) prec_ = exact_precision;
    const long p = cfg_.p;
    if (cfg_.backend == Backend::char_p) {
        if (!is_exact() && coords_.size() > static_cast<size_t>(prec_))
            coords_.resize(prec_);
        for (auto& c : coords_) {
            c %= p;
            if (c < 0) c += p;
        }
        while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
    } else {
        const long e = cfg_.e_k;
        // fold pi_K^k for k >= e_K through the relation pi_K^e_K = p
        for (size_t k = coords_.size(); k-- > static_cast<size_t>(e);) {
            coords_[k - e] += p * coords_[k];
            coords_[k] = 0;
        }
        coords_.resize(e, mpz_class(0));
        if (!is_exact()) {
            for (long i = 0; i < e; ++i) {
                long mi = ceil_div_pos(prec_ - i, e);
                if (mi == 0) {
                    coords_[i] = 0;
                    continue;
                }
                mpz_class mod = pow_mpz(mpz_class(p), mi);
                coords_[i] %= mod;
                if (coords_[i] < 0) coords_[i] += mod;
            }
        }
    }
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!cfg_.same_field(o.cfg_))
        throw config_mismatch("field elements from different base fields");
}

FieldElement FieldElement::zero(const BaseFieldConfig& cfg) {
    return FieldElement(cfg, {}, exact_precision);
}

FieldElement FieldElement::one(const BaseFieldConfig& cfg) {
    return from_integer(cfg, 1);
}

FieldElement FieldElement::from_integer(const BaseFieldConfig& cfg, const mpz_class& m) {
    return FieldElement(cfg, {m}, exact_precision);
}

FieldElement FieldElement::uniformizer(const BaseFieldConfig& cfg) {
    if (cfg.backend == Backend::char_zero && cfg.e_k == 1)
        return from_integer(cfg, cfg.p);
    return FieldElement(cfg, {mpz_class(0), mpz_class(1)}, exact_precision);
}

FieldElement FieldElement::from_coords(const BaseFieldConfig& cfg,
                                       std::vector<mpz_class> coords, int prec) {
    return FieldElement(cfg, std::move(coords), prec < 0 ? exact_precision : prec);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    std::vector<mpz_class> c(std::max(coords_.size(), o.coords_.size()), mpz_class(0));
    for (size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i];
    for (size_t i = 0; i < o.coords_.size(); ++i) c[i] += o.coords_[i];
    return FieldElement(cfg_, std::move(c), std::min(prec_, o.prec_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator-() const {
    std::vector<mpz_class> c(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
    return FieldElement(cfg_, std::move(c), prec_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    if (is_exact_zero() || o.is_exact_zero()) return zero(cfg_);
    long prec;
    if (is_exact() && o.is_exact())
        prec = exact_precision;
    else
        prec = std::min(sat_add(val_lower_bound(), o.prec_),
                        sat_add(o.val_lower_bound(), prec_));
    std::vector<mpz_class> c;
    if (!coords_.empty() && !o.coords_.empty()) {
        c.assign(coords_.size() + o.coords_.size() - 1, mpz_class(0));
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            for (size_t j = 0; j < o.coords_.size(); ++j)
                c[i + j] += coords_[i] * o.coords_[j];
        }
    }
    return FieldElement(cfg_, std::move(c), static_cast<int>(prec));
}

FieldElement FieldElement::mul_scalar(const mpz_class& s) const {
    return *this * from_integer(cfg_, s);
}

FieldElement FieldElement::pow_u(unsigned long e) const {
    FieldElement acc = one(cfg_);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Valuation FieldElement::valuation() const {
    long best = LONG_MAX;
    bool found = false;
    if (cfg_.backend == Backend::char_p) {
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] != 0) {
                best = static_cast<long>(i);
                found = true;
                break;
            }
        }
    } else {
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            long v = cfg_.e_k * pval(coords_[i], cfg_.p) + static_cast<long>(i);
            best = std::min(best, v);
            found = true;
        }
    }
    if (!found) return is_exact() ? Valuation::infinite() : Valuation::unknown();
    // a nonzero normalized digit always sits below the precision horizon
    assert(is_exact() || best < prec_);
    return Valuation::finite(best);
}

long FieldElement::val_lower_bound() const {
    Valuation v = valuation();
    if (v.is_finite()) return v.value;
    if (v.is_infinite()) return exact_precision;
    return prec_;
}

bool FieldElement::is_exact_zero() const {
    if (!is_exact()) return false;
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::indistinguishable_from_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

FieldElement FieldElement::truncated(int k) const {
    if (k < 0) k = 0;
    if (k >= prec_) return *this;
    return FieldElement(cfg_, coords_, k);
}

FieldElement FieldElement::inv_unit(int target) const {
    Valuation v = valuation();
    if (v.is_unknown())
        throw not_a_unit("cannot invert: valuation uncertain at precision " +
                         std::to_string(prec_));
    if (!v.is_finite() || v.value != 0)
        throw not_a_unit("cannot invert: element is not a unit");
    int n = std::min(prec_, target < 0 ? cfg_.precision : target);
    if (n < 1) throw precision_too_low("no digits available for inversion");

    mpz_class a0 = coords_.empty() ? mpz_class(0) : coords_[0];
    a0 %= cfg_.p;
    if (a0 < 0) a0 += cfg_.p;
    mpz_class inv0;
    int ok = mpz_invert(inv0.get_mpz_t(), a0.get_mpz_t(), mpz_class(cfg_.p).get_mpz_t());
    assert(ok != 0);
    (void)ok;

    FieldElement a = truncated(n);
    FieldElement b = from_integer(cfg_, inv0).truncated(n);
    FieldElement two = from_integer(cfg_, 2);
    FieldElement id = one(cfg_);
    // Newton iteration b <- b(2 - ab), quadratic convergence
    for (int it = 0; it < 64; ++it) {
        if ((a * b).congruent(id, n)) return b;
        b = (b * (two - a * b)).truncated(n);
    }
    throw error("unit inversion failed to converge");
}

bool FieldElement::congruent(const FieldElement& o, int k) const {
    check_same_field(o);
    if (k <= 0) return true;
    if (prec_ < k || o.prec_ < k)
        throw precision_too_low("congruence mod M^" + std::to_string(k) +
                                " requested at precision " +
                                std::to_string(std::min(prec_, o.prec_)));
    FieldElement d = *this - o;
    if (d.is_exact()) {
        Valuation v = d.valuation();
        return !v.is_finite() || v.value >= k;
    }
    return d.truncated(k).indistinguishable_from_zero();
}

std::string FieldElement::to_string() const {
    std::string s = value_string();
    if (cfg_.backend == Backend::char_p && !is_exact())
        s += " (mod t^" + std::to_string(prec_) + ")";
    return s;
}

std::string FieldElement::value_string() const {
    std::ostringstream os;
    if (cfg_.backend == Backend::char_p) {
        bool first = true;
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << coords_[i];
            } else {
                if (coords_[i] != 1) os << coords_[i] << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
    } else if (cfg_.e_k == 1) {
        os << (coords_.empty() ? mpz_class(0) : coords_[0]);
    } else {
        os << "[";
        for (long i = 0; i < cfg_.e_k; ++i) {
            if (i) os << ",";
            os << (static_cast<size_t>(i) < coords_.size() ? coords_[i] : mpz_class(0));
        }
        os << "]";
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

mpz_class parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw parse_error("expected integer in '" + s + "' at position " +
                          std::to_string(start));
    return mpz_class(s.substr(start, i - start));
}

}  // namespace

FieldElement FieldElement::parse(const BaseFieldConfig& cfg, const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '[') {
        if (cfg.backend != Backend::char_zero || cfg.e_k < 2)
            throw parse_error("coordinate list is only valid for a ramified char-0 base");
        ++i;
        std::vector<mpz_class> coords;
        while (true) {
            coords.push_back(parse_int(text, i));
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= text.size() || text[i] != ']')
            throw parse_error("unterminated coordinate list in '" + text + "'");
        ++i;
        skip_ws(text, i);
        if (i != text.size())
            throw parse_error("trailing characters after ']' in '" + text + "'");
        if (coords.size() > static_cast<size_t>(cfg.e_k))
            throw parse_error("coordinate list longer than e_K");
        return from_coords(cfg, std::move(coords), -1);
    }

    // optional "(mod t^N)" suffix selects a finite precision in char p
    std::string body = text;
    int prec = -1;
    size_t mod_pos = text.find("(mod");
    if (mod_pos != std::string::npos) {
        if (cfg.backend != Backend::char_p)
            throw parse_error("precision suffix is only valid for the char-p base");
        size_t j = mod_pos + 4;
        skip_ws(text, j);
        if (text.compare(j, 2, "t^") != 0)
            throw parse_error("malformed precision suffix in '" + text + "'");
        j += 2;
        prec = static_cast<int>(parse_int(text, j).get_si());
        skip_ws(text, j);
        if (j >= text.size() || text[j] != ')')
            throw parse_error("malformed precision suffix in '" + text + "'");
        body = text.substr(0, mod_pos);
    }

    if (body.find('t') == std::string::npos) {
        size_t j = 0;
        mpz_class m = parse_int(body, j);
        skip_ws(body, j);
        if (j != body.size())
            throw parse_error("trailing characters in '" + text + "'");
        FieldElement e = from_integer(cfg, m);
        return prec < 0 ? e : e.truncated(prec);
    }

    if (cfg.backend != Backend::char_p)
        throw parse_error("polynomial in t is only valid for the char-p base");
    std::vector<mpz_class> coords;
    i = 0;
    bool first = true;
    while (true) {
        skip_ws(body, i);
        if (i >= body.size()) break;
        int sign = 1;
        if (body[i] == '+' || body[i] == '-') {
            sign = body[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in '" + text + "' at position " +
                              std::to_string(i));
        }
        first = false;
        skip_ws(body, i);
        mpz_class coeff = 1;
        bool saw_coeff = false;
        if (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
            coeff = parse_int(body, i);
            saw_coeff = true;
            skip_ws(body, i);
            if (i < body.size() && body[i] == '*') {
                ++i;
                skip_ws(body, i);
            }
        }
        size_t deg = 0;
        if (i < body.size() && body[i] == 't') {
            ++i;
            deg = 1;
            if (i < body.size() && body[i] == '^') {
                ++i;
                mpz_class d = parse_int(body, i);
                if (d < 0) throw parse_error("negative exponent in '" + text + "'");
                deg = d.get_ui();
            }
        } else if (!saw_coeff) {
            throw parse_error("expected term in '" + text + "' at position " +
                              std::to_string(i));
        }
        if (coords.size() <= deg) coords.resize(deg + 1, mpz_class(0));
        coords[deg] += sign * coeff;
    }
    return from_coords(cfg, std::move(coords), prec);
}

}  // namespace ramify
