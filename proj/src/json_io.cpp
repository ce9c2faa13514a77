#include "ramify/json_io.hpp"

#include <algorithm>

namespace ramify {

std::string mpq_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json partition_to_json(const Partition& p) {
    Json j = Json::array();
    for (long a : p.parts()) j.push_back(a);
    return j;
}

Partition partition_from_json(const Json& j) {
    std::vector<long> parts;
    for (const Json& v : j) parts.push_back(v.get<long>());
    return Partition(std::move(parts));
}

Json coeff_map_to_json(const Partition& mu, long n, const CoeffMap& coeffs) {
    Json j;
    j["mu"] = partition_to_json(mu);
    j["n"] = n;
    Json arr = Json::array();
    for (const auto& [lambda, d] : coeffs) {
        Json row;
        row["lambda"] = partition_to_json(lambda);
        row["d"] = d;
        arr.push_back(std::move(row));
    }
    j["coeffs"] = std::move(arr);
    return j;
}

std::tuple<Partition, long, CoeffMap> coeff_map_from_json(const Json& j) {
    Partition mu = partition_from_json(j.at("mu"));
    long n = j.at("n").get<long>();
    CoeffMap coeffs;
    for (const Json& row : j.at("coeffs"))
        coeffs[partition_from_json(row.at("lambda"))] = row.at("d").get<long long>();
    return {std::move(mu), n, std::move(coeffs)};
}

Json config_to_json(const BaseFieldConfig& cfg) {
    Json j;
    j["p"] = cfg.p;
    j["backend"] = backend_name(cfg);
    j["precision"] = cfg.precision;
    return j;
}

BaseFieldConfig config_from_json(const Json& j) {
    BaseFieldConfig cfg;
    cfg.p = j.at("p").get<long>();
    cfg.precision = j.at("precision").get<int>();
    std::string b = j.at("backend").get<std::string>();
    if (b == "laurent") {
        cfg.backend = Backend::char_p;
        cfg.e_k = 1;
    } else if (b == "qp") {
        cfg.backend = Backend::char_zero;
        cfg.e_k = 1;
    } else if (b.rfind("ramified:", 0) == 0) {
        cfg.backend = Backend::char_zero;
        cfg.e_k = std::stoi(b.substr(9));
    } else {
        throw parse_error("unknown backend '" + b + "'");
    }
    validate_config(cfg);
    return cfg;
}

Json element_to_json(const FieldElement& e) {
    Json j;
    j["value"] = e.value_string();
    if (e.is_exact())
        j["prec"] = "exact";
    else
        j["prec"] = e.precision();
    return j;
}

FieldElement element_from_json(const BaseFieldConfig& cfg, const Json& j) {
    FieldElement e = FieldElement::parse(cfg, j.at("value").get<std::string>());
    const Json& prec = j.at("prec");
    if (prec.is_string()) {
        if (prec.get<std::string>() != "exact")
            throw parse_error("unexpected precision '" + prec.get<std::string>() + "'");
        return e;
    }
    return e.truncated(prec.get<int>());
}

Json poly_to_json(const EisensteinPoly& f) {
    Json j;
    j["base"] = config_to_json(f.base());
    Json arr = Json::array();
    for (long h = 1; h <= f.degree(); ++h) arr.push_back(element_to_json(f.coeff(h)));
    j["c"] = std::move(arr);
    return j;
}

EisensteinPoly poly_from_json(const Json& j) {
    BaseFieldConfig cfg = config_from_json(j.at("base"));
    std::vector<FieldElement> c;
    for (const Json& e : j.at("c")) c.push_back(element_from_json(cfg, e));
    return EisensteinPoly(cfg, std::move(c));
}

Json series_to_json(const PerturbationSeries& phi) {
    Json arr = Json::array();
    for (long d = 1; d <= phi.degree(); ++d) arr.push_back(element_to_json(phi.coeff(d)));
    return arr;
}

PerturbationSeries series_from_json(const BaseFieldConfig& cfg, const Json& j) {
    std::vector<FieldElement> r;
    for (const Json& e : j) r.push_back(element_from_json(cfg, e));
    return PerturbationSeries(cfg, std::move(r));
}

Json profile_to_json(const InseparabilityProfile& profile) {
    Json j;
    j["base"] = config_to_json(profile.base);
    j["n"] = profile.n;
    j["u"] = profile.u;
    j["nu"] = profile.nu;
    Json raw = Json::array();
    for (const RawIndex& r : profile.raw) {
        if (r.infinite)
            raw.push_back("inf");
        else
            raw.push_back(r.value);
    }
    j["i_raw"] = std::move(raw);
    j["i"] = profile.i;
    j["A"] = profile.A;
    j["b"] = profile.b;
    Json breaks = Json::array();
    for (const mpq_class& x : lower_breaks(profile)) breaks.push_back(mpq_to_string(x));
    j["breaks"] = std::move(breaks);
    return j;
}

InseparabilityProfile profile_from_json(const Json& j) {
    InseparabilityProfile profile;
    profile.base = config_from_json(j.at("base"));
    profile.p = profile.base.p;
    profile.n = j.at("n").get<long>();
    profile.u = j.at("u").get<long>();
    profile.nu = j.at("nu").get<long>();
    for (const Json& r : j.at("i_raw")) {
        if (r.is_string())
            profile.raw.push_back({true, 0});
        else
            profile.raw.push_back({false, r.get<long>()});
    }
    profile.i = j.at("i").get<std::vector<long>>();
    profile.A = j.at("A").get<std::vector<long>>();
    profile.b = j.at("b").get<std::vector<long>>();
    return profile;
}

Json phi_table_to_json(const InseparabilityProfile& profile, long lmax) {
    Json rows = Json::array();
    for (long ell = 1; ell <= lmax; ++ell) {
        Json row;
        row["ell"] = ell;
        Json pt = Json::array(), pp = Json::array();
        for (long jdx = 0; jdx <= profile.nu; ++jdx) {
            pt.push_back(mpq_to_string(phi_tilde(profile, jdx, ell)));
            pp.push_back(mpq_to_string(phi(profile, jdx, ell)));
        }
        row["phi_tilde"] = std::move(pt);
        row["phi"] = std::move(pp);
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = std::move(rows);
    return j;
}

Json congruence_report_to_json(const CongruenceReport& report) {
    Json j;
    j["ell"] = report.ell;
    Json rows = Json::array();
    for (const CoeffCheck& c : report.per_h) {
        Json row;
        row["h"] = c.h;
        row["rho"] = c.rho;
        row["kappa"] = c.kappa;
        row["verified"] = c.verified;
        row["max_verified"] = c.max_verified;
        row["prec_cap"] = c.prec_cap;
        rows.push_back(std::move(row));
    }
    j["per_h"] = std::move(rows);
    j["all_verified"] = report.all_verified;
    return j;
}

CongruenceReport congruence_report_from_json(const Json& j) {
    CongruenceReport report;
    report.ell = j.at("ell").get<long>();
    for (const Json& row : j.at("per_h")) {
        CoeffCheck c;
        c.h = row.at("h").get<long>();
        c.rho = row.at("rho").get<long>();
        c.kappa = row.at("kappa").get<long>();
        c.verified = row.at("verified").get<bool>();
        c.max_verified = row.at("max_verified").get<long>();
        c.prec_cap = row.at("prec_cap").get<long>();
        report.per_h.push_back(c);
    }
    report.all_verified = j.at("all_verified").get<bool>();
    return report;
}

Json special_verdict_to_json(const SpecialVerdict& v) {
    Json j;
    j["j"] = v.j;
    j["h"] = v.h;
    j["k"] = v.k;
    j["predicted"] = element_to_json(v.predicted);
    j["actual_mod"] = element_to_json(v.actual.truncated(static_cast<int>(v.k + 1)));
    j["verified"] = v.verified;
    return j;
}

SpecialVerdict special_verdict_from_json(const BaseFieldConfig& cfg, const Json& j) {
    SpecialVerdict v;
    v.j = j.at("j").get<long>();
    v.h = j.at("h").get<long>();
    v.k = j.at("k").get<long>();
    v.predicted = element_from_json(cfg, j.at("predicted"));
    v.actual = element_from_json(cfg, j.at("actual_mod"));
    v.verified = j.at("verified").get<bool>();
    return v;
}

Json perturb_report_to_json(const EisensteinPoly& f, const PerturbationSeries& phi,
                            const EisensteinPoly& lin, const EisensteinPoly& sym) {
    Json j;
    j["f"] = poly_to_json(f);
    j["phi"] = series_to_json(phi);
    Json rows = Json::array();
    bool all = true;
    for (long h = 1; h <= f.degree(); ++h) {
        const FieldElement& a = lin.coeff(h);
        const FieldElement& b = sym.coeff(h);
        int shared = std::min(a.precision(), b.precision());
        bool agree = a.congruent(b, shared);
        all = all && agree;
        Json row;
        row["h"] = h;
        row["linear_algebra"] = element_to_json(a);
        row["symmetric"] = element_to_json(b);
        row["shared_prec"] = shared;
        row["agree"] = agree;
        rows.push_back(std::move(row));
    }
    j["coeffs"] = std::move(rows);
    j["routes_agree"] = all;
    return j;
}

Json verify_case_to_json(const EisensteinPoly& f, const InseparabilityProfile& profile,
                         long ell, const CongruenceReport& report,
                         const std::vector<SpecialVerdict>& special) {
    Json j;
    j["f"] = poly_to_json(f);
    j["profile"] = profile_to_json(profile);
    j["ell"] = ell;
    j["congruences"] = congruence_report_to_json(report);
    Json sp = Json::array();
    for (const SpecialVerdict& v : special) sp.push_back(special_verdict_to_json(v));
    j["refined"] = std::move(sp);
    bool all = report.all_verified;
    for (const SpecialVerdict& v : special) all = all && v.verified;
    j["all_verified"] = all;
    return j;
}

Json case_result_to_json(const CaseResult& r) {
    Json j;
    j["index"] = r.index;
    j["backend"] = r.backend;
    j["p"] = r.p;
    j["n"] = r.n;
    j["ell"] = r.ell;
    j["shared_precision"] = r.shared_precision;
    j["routes_agree"] = r.routes_agree;
    j["root_ok"] = r.root_ok;
    j["nochange_ok"] = r.nochange_ok;
    j["special_ok"] = r.special_ok;
    j["profile_stable"] = r.profile_stable;
    j["krasner_ok"] = r.krasner_ok;
    j["passed"] = r.passed;
    j["note"] = r.note;
    return j;
}

CaseResult case_result_from_json(const Json& j) {
    CaseResult r;
    r.index = j.at("index").get<uint64_t>();
    r.backend = j.at("backend").get<std::string>();
    r.p = j.at("p").get<long>();
    r.n = j.at("n").get<long>();
    r.ell = j.at("ell").get<long>();
    r.shared_precision = j.at("shared_precision").get<int>();
    r.routes_agree = j.at("routes_agree").get<bool>();
    r.root_ok = j.at("root_ok").get<bool>();
    r.nochange_ok = j.at("nochange_ok").get<bool>();
    r.special_ok = j.at("special_ok").get<bool>();
    r.profile_stable = j.at("profile_stable").get<bool>();
    r.krasner_ok = j.at("krasner_ok").get<bool>();
    r.passed = j.at("passed").get<bool>();
    r.note = j.at("note").get<std::string>();
    return r;
}

Json suite_result_to_json(const SuiteResult& s) {
    Json j;
    Json arr = Json::array();
    for (const CaseResult& c : s.cases) arr.push_back(case_result_to_json(c));
    j["cases"] = std::move(arr);
    j["count"] = s.cases.size();
    j["all_passed"] = s.all_passed;
    return j;
}

namespace {

// split on top-level commas, respecting [...] groups
std::vector<std::string> split_entries(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

EisensteinPoly parse_poly_spec(const BaseFieldConfig& cfg, const std::string& text,
                               bool raw) {
    std::vector<std::string> entries = split_entries(text);
    if (entries.size() < 2)
        throw parse_error("polynomial spec needs the leading 1 and at least one "
                          "coefficient");
    FieldElement lead = FieldElement::parse(cfg, entries[0]);
    if (lead != FieldElement::one(cfg))
        throw parse_error("polynomial spec must start with the leading coefficient 1");
    std::vector<FieldElement> c;
    for (size_t h = 1; h < entries.size(); ++h) {
        FieldElement e = FieldElement::parse(cfg, entries[h]);
        // raw entries are the plain coefficients of X^(n-h): c_h = (-1)^h a
        if (raw && h % 2 == 1) e = -e;
        c.push_back(std::move(e));
    }
    return EisensteinPoly(cfg, std::move(c));
}

PerturbationSeries parse_phi_spec(const BaseFieldConfig& cfg, const std::string& text) {
    std::string body = text;
    auto strip = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    body = strip(body);
    if (!body.empty() && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    std::vector<FieldElement> r;
    for (const std::string& entry : split_entries(body)) {
        std::string s = strip(entry);
        if (s.empty()) continue;
        size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw parse_error("phi spec entries must look like degree:value");
        long d = std::stol(strip(s.substr(0, colon)));
        if (d < 1) throw parse_error("phi spec degrees start at 1");
        FieldElement v = FieldElement::parse(cfg, strip(s.substr(colon + 1)));
        if (static_cast<long>(r.size()) < d) r.resize(d, FieldElement::zero(cfg));
        r[d - 1] = std::move(v);
    }
    if (r.empty()) throw parse_error("phi spec is empty");
    return PerturbationSeries(cfg, std::move(r));
}

}  // namespace ramify
