// ramify: ramification invariants of totally ramified local-field
// extensions, coefficients of monomial-to-elementary basis change, and
// machine verification of uniformizer-perturbation congruences.
//
// Exit codes: 0 pass, 1 certified failure, 2 input error, 3 precision
// ceiling hit.

#include <CLI11.hpp>

#include <iostream>

#include "ramify/fixtures.hpp"
#include "ramify/json_io.hpp"

using namespace ramify;

namespace {

struct GlobalOpts {
    long p = 2;
    std::string backend = "qp";
    int precision = 20;
    int max_precision = 160;
    std::string format = "table";
    uint64_t seed = 7;

    BaseFieldConfig config() const {
        BaseFieldConfig cfg;
        cfg.p = p;
        cfg.precision = precision;
        if (backend == "qp") {
            cfg.backend = Backend::char_zero;
            cfg.e_k = 1;
        } else if (backend == "laurent") {
            cfg.backend = Backend::char_p;
            cfg.e_k = 1;
        } else if (backend.rfind("ramified:", 0) == 0) {
            cfg.backend = Backend::char_zero;
            cfg.e_k = std::stoi(backend.substr(9));
            if (cfg.e_k < 1) throw parse_error("ramification index must be >= 1");
        } else {
            throw parse_error("unknown backend '" + backend +
                              "' (expected qp, ramified:E, or laurent)");
        }
        validate_config(cfg);
        return cfg;
    }

    bool json() const { return format == "json"; }
};

Partition parse_partition(const std::string& text) {
    std::vector<long> parts;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(std::stol(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (parts.empty()) throw parse_error("empty partition '" + text + "'");
    return Partition(std::move(parts));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

EisensteinPoly load_poly(const GlobalOpts& g, const std::string& poly_spec,
                         const std::string& example, bool raw, int precision) {
    if (!example.empty()) {
        auto f = fixture_by_name(example, precision);
        if (!f) throw parse_error("unknown example '" + example + "'");
        return *f;
    }
    if (poly_spec.empty()) throw parse_error("need --poly or --example");
    BaseFieldConfig cfg = g.config();
    cfg.precision = precision;
    EisensteinPoly f = parse_poly_spec(cfg, poly_spec, raw);
    std::vector<std::string> bad = validate_eisenstein(f);
    if (!bad.empty()) throw parse_error("not Eisenstein: " + bad.front());
    return f;
}

void print_profile_table(const InseparabilityProfile& prof) {
    std::cout << "n = " << prof.n << " = " << prof.u << " * " << prof.p << "^"
              << prof.nu << "  (" << backend_name(prof.base) << ")\n";
    std::cout << "j  i_raw  i   A  b\n";
    for (long j = 0; j <= prof.nu; ++j) {
        std::string raw =
            prof.raw[j].infinite ? "inf" : std::to_string(prof.raw[j].value);
        std::cout << j << "  " << raw << "  " << prof.i[j] << "  " << prof.A[j]
                  << "  " << prof.b[j] << "\n";
    }
    std::cout << "lower breaks:";
    for (const mpq_class& x : lower_breaks(prof)) std::cout << " " << mpq_to_string(x);
    std::cout << "\n";
}

int cmd_indices(const GlobalOpts& g, const std::string& poly_spec,
                const std::string& example, bool raw) {
    EisensteinPoly f = load_poly(g, poly_spec, example, raw, g.precision);
    InseparabilityProfile prof = indices(f);
    if (g.json())
        emit(profile_to_json(prof));
    else
        print_profile_table(prof);
    return 0;
}

int cmd_phi_table(const GlobalOpts& g, const std::string& poly_spec,
                  const std::string& example, bool raw, long lmax) {
    EisensteinPoly f = load_poly(g, poly_spec, example, raw, g.precision);
    InseparabilityProfile prof = indices(f);
    if (g.json()) {
        emit(phi_table_to_json(prof, lmax));
        return 0;
    }
    std::cout << "ell";
    for (long j = 0; j <= prof.nu; ++j) std::cout << "  pt_" << j;
    for (long j = 0; j <= prof.nu; ++j) std::cout << "  phi_" << j;
    std::cout << "\n";
    for (long ell = 1; ell <= lmax; ++ell) {
        std::cout << ell;
        for (long j = 0; j <= prof.nu; ++j)
            std::cout << "  " << mpq_to_string(phi_tilde(prof, j, ell));
        for (long j = 0; j <= prof.nu; ++j)
            std::cout << "  " << mpq_to_string(phi(prof, j, ell));
        std::cout << "\n";
    }
    return 0;
}

int cmd_dcoeff(const GlobalOpts& g, const std::string& lambda_s,
               const std::string& mu_s) {
    Partition lambda = parse_partition(lambda_s);
    Partition mu = parse_partition(mu_s);
    long long d = d_coeff(lambda, mu);
    if (g.json()) {
        Json j;
        j["lambda"] = partition_to_json(lambda);
        j["mu"] = partition_to_json(mu);
        j["d"] = d;
        auto cf = d_closed_form(lambda, mu);
        j["closed_form"] = cf ? Json(*cf) : Json(nullptr);
        emit(j);
    } else {
        std::cout << "d[" << lambda.to_string() << ", " << mu.to_string()
                  << "] = " << d << "\n";
    }
    return 0;
}

int cmd_psi(const GlobalOpts& g, const std::string& mu_s, long n, bool use_oracle) {
    Partition mu = parse_partition(mu_s);
    CoeffMap coeffs = use_oracle ? oracle_psi_expansion(mu, n) : psi_expansion(mu, n);
    if (g.json()) {
        emit(coeff_map_to_json(mu, n, coeffs));
    } else {
        std::cout << "m_" << mu.to_string() << " over e_1..e_" << n << ":\n";
        for (const auto& [lambda, d] : coeffs)
            std::cout << "  " << lambda.to_string() << "  " << d << "\n";
    }
    return 0;
}

int cmd_perturb(const GlobalOpts& g, const std::string& poly_spec,
                const std::string& example, bool raw, const std::string& phi_spec) {
    std::function<int(int)> attempt = [&](int prec) {
        EisensteinPoly f = load_poly(g, poly_spec, example, raw, prec);
        PerturbationSeries phi = parse_phi_spec(f.base(), phi_spec);
        EisensteinPoly lin = minpoly_linear_algebra(f, phi);
        EisensteinPoly sym = minpoly_symmetric(f, phi);
        Json rep = perturb_report_to_json(f, phi, lin, sym);
        bool agree = rep["routes_agree"].get<bool>();
        if (g.json()) {
            emit(rep);
        } else {
            std::cout << "h  linear_algebra  symmetric  shared_prec  agree\n";
            for (const Json& row : rep["coeffs"])
                std::cout << row["h"] << "  " << row["linear_algebra"]["value"]
                          << "  " << row["symmetric"]["value"] << "  "
                          << row["shared_prec"] << "  "
                          << (row["agree"].get<bool>() ? "yes" : "NO") << "\n";
            std::cout << (agree ? "routes agree" : "ROUTES DISAGREE") << "\n";
        }
        return agree ? 0 : 1;
    };
    return with_precision_retry<int>(g.precision, g.max_precision, attempt);
}

int cmd_verify_fixture(const GlobalOpts& g, const std::string& poly_spec,
                       const std::string& example, bool raw, long ell,
                       const std::string& r_spec) {
    std::function<int(int)> attempt = [&](int prec) {
        EisensteinPoly f = load_poly(g, poly_spec, example, raw, prec);
        FieldElement r = FieldElement::parse(f.base(), r_spec);
        InseparabilityProfile prof = indices(f);
        PerturbationSeries phi = PerturbationSeries::one_term(f.base(), r, ell);
        CongruenceReport rep = verify_nochange(f, phi, ell);
        std::vector<SpecialVerdict> special = verify_special(f, r, ell);
        bool ok = rep.all_verified;
        for (const SpecialVerdict& v : special) ok = ok && v.verified;
        if (g.json()) {
            emit(verify_case_to_json(f, prof, ell, rep, special));
        } else {
            std::cout << "h  rho  kappa  verified\n";
            for (const CoeffCheck& c : rep.per_h)
                std::cout << c.h << "  " << c.rho << "  " << c.kappa << "  "
                          << (c.verified ? "yes" : "NO") << "\n";
            for (const SpecialVerdict& v : special)
                std::cout << "refined h=" << v.h << " mod M^" << v.k + 1 << ": "
                          << (v.verified ? "verified" : "FAILED") << "\n";
            std::cout << (ok ? "all congruences confirmed" : "FAILURE") << "\n";
        }
        return ok ? 0 : 1;
    };
    return with_precision_retry<int>(g.precision, g.max_precision, attempt);
}

int cmd_verify_random(const GlobalOpts& g, int count) {
    SuiteResult suite = run_random_suite(g.seed, count, g.precision, g.max_precision);
    bool ceiling = false;
    for (const CaseResult& c : suite.cases)
        if (c.note.rfind("precision ceiling", 0) == 0) ceiling = true;
    if (g.json()) {
        Json j = suite_result_to_json(suite);
        j["seed"] = g.seed;
        emit(j);
    } else {
        for (const CaseResult& c : suite.cases)
            std::cout << "case " << c.index << " [" << c.backend << " p=" << c.p
                      << " n=" << c.n << " ell=" << c.ell << "] "
                      << (c.passed ? "pass" : "FAIL " + c.note) << "\n";
        std::cout << (suite.all_passed ? "all cases passed" : "FAILURES") << "\n";
    }
    if (ceiling) return 3;
    return suite.all_passed ? 0 : 1;
}

int cmd_example(const GlobalOpts& g, const std::string& name) {
    if (name.empty()) {
        for (const std::string& n : fixture_names()) std::cout << n << "\n";
        return 0;
    }
    auto f = fixture_by_name(name, g.precision);
    if (!f) throw parse_error("unknown example '" + name + "'");
    if (g.json()) {
        Json j;
        j["name"] = name;
        j["poly"] = poly_to_json(*f);
        j["profile"] = profile_to_json(indices(*f));
        emit(j);
    } else {
        print_profile_table(indices(*f));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramification invariants and uniformizer-perturbation congruences"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--p", g.p, "residue characteristic (prime)");
    app.add_option("--backend", g.backend, "qp | ramified:E | laurent");
    app.add_option("--precision", g.precision, "working precision in units of v_K");
    app.add_option("--max-precision", g.max_precision, "precision-retry ceiling");
    app.add_option("--format", g.format, "json | table");
    app.add_option("--seed", g.seed, "seed for randomized suites");

    std::string poly_spec, example, phi_spec, lambda_s, mu_s, r_spec = "1", name;
    bool raw = false, use_oracle = false;
    long lmax = 3, ell = 1, n = 2;
    int count = 0;

    CLI::App* c_ind = app.add_subcommand("indices", "inseparability profile of f");
    c_ind->fallthrough();
    c_ind->add_option("--poly", poly_spec,
                      "1,c_1,...,c_n in the alternating-sign convention");
    c_ind->add_flag("--raw", raw, "entries are plain monic coefficients instead");
    c_ind->add_option("--example", example, "built-in fixture name");

    CLI::App* c_phi = app.add_subcommand("phi-table", "generalized Hasse-Herbrand values");
    c_phi->fallthrough();
    c_phi->add_option("--poly", poly_spec, "polynomial spec");
    c_phi->add_flag("--raw", raw, "plain monic coefficients");
    c_phi->add_option("--example", example, "fixture name");
    c_phi->add_option("--lmax", lmax, "rows ell = 1..lmax");

    CLI::App* c_d = app.add_subcommand("dcoeff", "basis-change coefficient d");
    c_d->fallthrough();
    c_d->add_option("--lambda", lambda_s, "partition, e.g. 3,1")->required();
    c_d->add_option("--mu", mu_s, "partition")->required();

    CLI::App* c_psi = app.add_subcommand("psi", "monomial-to-elementary expansion");
    c_psi->fallthrough();
    c_psi->add_option("--mu", mu_s, "partition")->required();
    c_psi->add_option("--n", n, "number of variables")->required();
    c_psi->add_flag("--oracle", use_oracle, "use the symbolic reduction instead");

    CLI::App* c_pert =
        app.add_subcommand("perturb", "dual-route perturbed minimal polynomial");
    c_pert->fallthrough();
    c_pert->add_option("--poly", poly_spec, "polynomial spec");
    c_pert->add_flag("--raw", raw, "plain monic coefficients");
    c_pert->add_option("--example", example, "fixture name");
    c_pert->add_option("--phi", phi_spec, "sparse series {1: 1, 2: 1}")->required();

    CLI::App* c_ver = app.add_subcommand("verify", "congruence verification");
    c_ver->fallthrough();
    c_ver->add_option("--poly", poly_spec, "polynomial spec");
    c_ver->add_flag("--raw", raw, "plain monic coefficients");
    c_ver->add_option("--example", example, "fixture name");
    c_ver->add_option("--ell", ell, "perturbation depth");
    c_ver->add_option("--r", r_spec, "perturbation coefficient (default 1)");
    c_ver->add_option("--random", count, "run this many seeded random cases");

    CLI::App* c_ex = app.add_subcommand("example", "list or dump built-in fixtures");
    c_ex->fallthrough();
    c_ex->add_option("name", name, "fixture name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_ind)) return cmd_indices(g, poly_spec, example, raw);
        if (app.got_subcommand(c_phi))
            return cmd_phi_table(g, poly_spec, example, raw, lmax);
        if (app.got_subcommand(c_d)) return cmd_dcoeff(g, lambda_s, mu_s);
        if (app.got_subcommand(c_psi)) return cmd_psi(g, mu_s, n, use_oracle);
        if (app.got_subcommand(c_pert))
            return cmd_perturb(g, poly_spec, example, raw, phi_spec);
        if (app.got_subcommand(c_ver)) {
            if (count > 0) return cmd_verify_random(g, count);
            return cmd_verify_fixture(g, poly_spec, example, raw, ell, r_spec);
        }
        if (app.got_subcommand(c_ex)) return cmd_example(g, name);
    } catch (const precision_too_low& e) {
        std::cerr << "precision ceiling: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
