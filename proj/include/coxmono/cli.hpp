#ifndef COXMONO_CLI_HPP
#define COXMONO_CLI_HPP

#include <complex>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxmono/arrangement.hpp"
#include "coxmono/coxeter.hpp"
#include "coxmono/finite_field.hpp"
#include "coxmono/group.hpp"
#include "coxmono/invariants.hpp"
#include "coxmono/macdonald.hpp"
#include "coxmono/monodromy.hpp"
#include "coxmono/root_system.hpp"
#include "coxmono/zeta.hpp"

namespace coxmono::cli {

using nlohmann::json;

inline RotationNumber parse_rotation(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        long long a = std::stoll(s);
        return RotationNumber(a, 1);
    }
    long long a = std::stoll(s.substr(0, slash));
    long long k = std::stoll(s.substr(slash + 1));
    return RotationNumber(a, k);
}

// Canonical text rendering of a payload; the JSON format carries the
// same payload, so parsing it and re-rendering reproduces the text.
inline std::string text_render(const json& p) {
    std::ostringstream os;
    const std::string cmd = p.at("command").get<std::string>();
    if (cmd == "zeta") {
        os << p.at("zeta").get<std::string>() << "\n";
    } else if (cmd == "class") {
        os << "class: " << p.at("class").get<std::string>() << "\n";
        if (p.contains("zeta") && !p.at("zeta").is_null())
            os << "zeta: " << p.at("zeta").get<std::string>() << "\n";
    } else if (cmd == "subgraphs") {
        for (const auto& e : p.at("subgraphs")) {
            bool first = true;
            for (const auto& v : e.at("vertices")) {
                if (!first) os << " ";
                os << v.get<int>();
                first = false;
            }
            os << " -> " << e.at("type").get<std::string>() << "\n";
        }
        os << "count: " << p.at("count").get<int>() << "\n";
    } else if (cmd == "degrees" || cmd == "molien") {
        os << "degrees:";
        for (const auto& d : p.at("degrees")) os << " " << d.get<int>();
        os << "\n";
        if (p.contains("order"))
            os << "order: " << p.at("order").get<long long>() << "\n"
               << "reflections: " << p.at("reflections").get<int>() << "\n";
    } else if (cmd == "chambers") {
        os << p.at("chambers").get<long long>() << "\n";
    } else if (cmd == "euler") {
        os << "chi_B: " << p.at("chi_B").get<long long>() << "\n"
           << "expected: " << p.at("expected").get<long long>() << "\n"
           << "chambers: " << p.at("chambers").get<long long>() << "\n"
           << "pass: " << (p.at("pass").get<bool>() ? "true" : "false") << "\n";
    } else if (cmd == "invariants") {
        const auto& basics = p.at("basics");
        for (size_t i = 0; i < basics.size(); ++i)
            os << "f" << (i + 1) << " = " << basics[i].get<std::string>() << "\n";
    } else if (cmd == "discriminant") {
        os << "delta = " << p.at("delta").get<std::string>() << "\n"
           << "delta_tilde = " << p.at("delta_tilde").get<std::string>() << "\n";
    } else if (cmd == "kappa") {
        os << p.at("kappa").get<std::string>() << "\n";
    } else if (cmd == "max") {
        os << "optimized: " << p.at("optimized").get<double>() << "\n"
           << "closed_form: " << p.at("closed_form").get<double>() << "\n"
           << "rel_err: " << p.at("rel_err").get<double>() << "\n";
    } else if (cmd == "integral") {
        os << "lhs: " << p.at("lhs").get<double>() << "\n"
           << "rhs: " << p.at("rhs").get<double>() << "\n"
           << "rel_err: " << p.at("rel_err").get<double>() << "\n";
    } else if (cmd == "charsum") {
        os << "S = (" << p.at("S_re").get<double>() << ", " << p.at("S_im").get<double>() << ")\n"
           << "RHS = (" << p.at("RHS_re").get<double>() << ", " << p.at("RHS_im").get<double>()
           << ")\n"
           << "abs_diff: " << p.at("abs_diff").get<double>() << "\n"
           << "pass: " << (p.at("pass").get<bool>() ? "true" : "false") << "\n";
    } else if (cmd == "verify-finite") {
        int npass = 0;
        for (const auto& e : p.at("entries"))
            if (e.at("pass").get<bool>()) ++npass;
        os << npass << "/" << p.at("entries").size() << " characters pass\n"
           << "pass: " << (p.at("pass").get<bool>() ? "true" : "false") << "\n";
    } else if (cmd == "check") {
        os << "identity: " << p.at("identity").get<std::string>() << "\n"
           << "pass: " << (p.at("pass").get<bool>() ? "true" : "false") << "\n";
    } else {
        throw std::invalid_argument("unknown command payload: " + cmd);
    }
    return os.str();
}

namespace detail {

inline json class_payload(const std::string& diagram_spec, const std::string& at,
                          const std::string& which) {
    CoxeterDiagram d = parse_diagram(diagram_spec);
    MonodromyClass c;
    if (which == "M") c = local_class_M(d);
    else if (which == "qN") c = qN_class(d);
    else if (which == "globalB") c = (at == "inf") ? global_class_at_inf(d) : global_class_at_0(d);
    else throw CLI::ValidationError("--which must be one of M, globalB, qN");
    json p;
    p["command"] = "class";
    p["diagram"] = diagram_spec;
    p["type"] = classify(d).name();
    p["at"] = at;
    p["which"] = which;
    p["class"] = c.to_string();
    try {
        p["zeta"] = zeta_of_class(c).to_string();
    } catch (const std::domain_error&) {
        p["zeta"] = nullptr;
    }
    return p;
}

}  // namespace detail

// Runs one CLI invocation. Returns 0 on success, 1 when a requested
// check fails, 2 on usage or input errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification toolkit for reflection discriminants"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string diagram_spec, type_spec, at = "0", which = "M", identity, chi_spec = "0/1";
    long long prime = 0;
    long long chi_index = -1;
    int s_param = 1, restarts = 100;
    unsigned seed = 12345;
    bool json_flag = false;

    auto* c_zeta = app.add_subcommand("zeta", "monodromy zeta function of the discriminant");
    c_zeta->add_option("diagram", diagram_spec)->required();

    auto* c_class = app.add_subcommand("class", "monodromy class in the inertia group ring");
    c_class->add_option("diagram", diagram_spec)->required();
    c_class->add_option("--at", at)->check(CLI::IsMember({"0", "inf"}));
    c_class->add_option("--which", which)->check(CLI::IsMember({"M", "globalB", "qN"}));

    auto* c_sub = app.add_subcommand("subgraphs", "connected induced subdiagrams");
    c_sub->add_option("diagram", diagram_spec)->required();

    auto* c_deg = app.add_subcommand("degrees", "invariant degrees from the table");
    c_deg->add_option("type", type_spec)->required();

    auto* c_mol = app.add_subcommand("molien", "invariant degrees from the Molien series");
    c_mol->add_option("type", type_spec)->required();

    auto* c_cham = app.add_subcommand("chambers", "chamber count of the reflection arrangement");
    c_cham->add_option("type", type_spec)->required();

    auto* c_eul = app.add_subcommand("euler", "Euler characteristic checks on the quadric");
    c_eul->add_option("type", type_spec)->required();

    auto* c_inv = app.add_subcommand("invariants", "basic invariant polynomials");
    c_inv->add_option("type", type_spec)->required();

    auto* c_disc = app.add_subcommand("discriminant", "discriminant in invariant coordinates");
    c_disc->add_option("type", type_spec)->required();

    auto* c_kappa = app.add_subcommand("kappa", "the product constant of the hyperplane forms");
    c_kappa->add_option("type", type_spec)->required();

    auto* c_max = app.add_subcommand("max", "maximum of the discriminant on the unit sphere");
    c_max->add_option("type", type_spec)->required();
    c_max->add_option("--restarts", restarts)->capture_default_str();
    c_max->add_option("--seed", seed)->capture_default_str();

    auto* c_int = app.add_subcommand("integral", "Gaussian discriminant integral vs Gamma product");
    c_int->add_option("type", type_spec)->required();
    c_int->add_option("-s", s_param, "integer exponent")->required();

    auto* c_csum = app.add_subcommand("charsum", "finite-field character sum for one character");
    c_csum->add_option("type", type_spec)->required();
    c_csum->add_option("-p", prime, "odd prime")->required();
    c_csum->add_option("--chi", chi_index, "character index")->required();

    auto* c_vf = app.add_subcommand("verify-finite", "Gauss-sum identity over a prime field");
    c_vf->add_option("type", type_spec)->required();
    c_vf->add_option("-p", prime, "odd prime")->required();
    c_vf->add_option("--chi", chi_index, "restrict to one character index");
    c_vf->add_flag("--json", json_flag, "shorthand for --format json");

    auto* c_check = app.add_subcommand("check", "run a named identity");
    c_check->add_option("diagram", diagram_spec)->required();
    c_check->add_option("--identity", identity)
        ->required()
        ->check(CLI::IsMember({"deg", "conn", "compl", "otherform", "ab2"}));
    c_check->add_option("--chi", chi_spec, "rotation number a/k for ab2");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("coxmono");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    json p;
    int exit_code = 0;
    try {
        if (*c_zeta) {
            CoxeterDiagram d = parse_diagram(diagram_spec);
            p["command"] = "zeta";
            p["diagram"] = diagram_spec;
            p["type"] = classify(d).name();
            p["zeta"] = zeta_of_type(d).to_string();
        } else if (*c_class) {
            p = detail::class_payload(diagram_spec, at, which);
        } else if (*c_sub) {
            CoxeterDiagram d = parse_diagram(diagram_spec);
            p["command"] = "subgraphs";
            p["diagram"] = diagram_spec;
            p["subgraphs"] = json::array();
            auto subs = connected_subgraphs(d);
            for (const auto& verts : subs) {
                json e;
                e["vertices"] = verts;
                e["type"] = classify(d.induced(verts)).name();
                p["subgraphs"].push_back(e);
            }
            p["count"] = static_cast<int>(subs.size());
        } else if (*c_deg) {
            GroupType t = parse_type(type_spec);
            p["command"] = "degrees";
            p["type"] = t.name();
            p["degrees"] = t.degrees();
            p["order"] = t.order();
            p["reflections"] = t.num_reflections();
        } else if (*c_mol) {
            GroupType t = parse_type(type_spec);
            RootSystemData r = root_system(t);
            p["command"] = "molien";
            p["type"] = t.name();
            p["degrees"] = molien_degrees(generate_group(r));
        } else if (*c_cham) {
            GroupType t = parse_type(type_spec);
            p["command"] = "chambers";
            p["type"] = t.name();
            p["chambers"] = chamber_count(coxeter_arrangement(root_system(t)));
        } else if (*c_eul) {
            GroupType t = parse_type(type_spec);
            EulerCheckReport rep = coxeter_euler_checks(t);
            p["command"] = "euler";
            p["type"] = t.name();
            p["chi_B"] = rep.chi_B;
            p["expected"] = rep.expected_chi_B;
            p["chambers"] = rep.chambers;
            p["pass"] = rep.chi_ok && rep.quotient_ok && rep.chambers_ok;
            if (!p["pass"].get<bool>()) exit_code = 1;
        } else if (*c_inv) {
            GroupType t = parse_type(type_spec);
            InvariantPresentation pres = basic_invariants(t);
            p["command"] = "invariants";
            p["type"] = t.name();
            p["degrees"] = pres.degrees;
            p["basics"] = json::array();
            for (const MultiPoly& f : pres.basics) p["basics"].push_back(f.to_string());
        } else if (*c_disc) {
            GroupType t = parse_type(type_spec);
            InvariantPresentation pres = discriminant_in_invariants(t);
            p["command"] = "discriminant";
            p["type"] = t.name();
            p["basics"] = json::array();
            for (const MultiPoly& f : pres.basics) p["basics"].push_back(f.to_string());
            p["delta"] = discriminant_poly(pres.root_data).to_string();
            std::vector<std::string> ynames;
            for (size_t i = 0; i < pres.basics.size(); ++i)
                ynames.push_back("y" + std::to_string(i + 1));
            p["delta_tilde"] = pres.delta_tilde.to_string(ynames);
        } else if (*c_kappa) {
            GroupType t = parse_type(type_spec);
            RootSystemData r = root_system(t);
            p["command"] = "kappa";
            p["type"] = t.name();
            if (r.exact) {
                Rational k = kappa_rational(r);
                p["kappa"] = to_string(k);
                p["kappa_double"] = to_double(k);
            } else {
                double k = macdonald_constants(t).kappa;
                std::ostringstream ks;
                ks << k;
                p["kappa"] = ks.str();
                p["kappa_double"] = k;
            }
        } else if (*c_max) {
            GroupType t = parse_type(type_spec);
            double opt = max_delta_optimize(t, restarts, seed);
            double cf = max_delta_closed_form(t);
            p["command"] = "max";
            p["type"] = t.name();
            p["restarts"] = restarts;
            p["seed"] = seed;
            p["optimized"] = opt;
            p["closed_form"] = cf;
            p["rel_err"] = std::abs(opt - cf) / std::abs(cf);
        } else if (*c_int) {
            GroupType t = parse_type(type_spec);
            double lhs = macdonald_lhs_quadrature(t, s_param);
            double rhs = macdonald_rhs(t, s_param);
            p["command"] = "integral";
            p["type"] = t.name();
            p["s"] = s_param;
            p["lhs"] = lhs;
            p["rhs"] = rhs;
            p["rel_err"] = std::abs(lhs - rhs) / std::abs(rhs);
        } else if (*c_csum) {
            GroupType t = parse_type(type_spec);
            PrimeField f(prime);
            FiniteVerifier v(t, f);
            MultChar chi(f, chi_index);
            std::complex<double> S = v.char_sum(chi), R = v.rhs(chi);
            double diff = std::abs(S - R);
            bool pass = diff < 1e-6 * (1.0 + std::abs(R));
            p["command"] = "charsum";
            p["schema"] = "1";
            p["type"] = t.name();
            p["p"] = prime;
            p["chi_index"] = chi.index;
            p["S_re"] = S.real();
            p["S_im"] = S.imag();
            p["RHS_re"] = R.real();
            p["RHS_im"] = R.imag();
            p["abs_diff"] = diff;
            p["pass"] = pass;
            if (!pass) exit_code = 1;
        } else if (*c_vf) {
            GroupType t = parse_type(type_spec);
            PrimeField f(prime);
            FiniteVerifier v(t, f);
            CharSumReport rep = v.verify();
            p["command"] = "verify-finite";
            p["schema"] = "1";
            p["type"] = t.name();
            p["p"] = prime;
            p["entries"] = json::array();
            bool all = true;
            for (const CharSumEntry& e : rep.entries) {
                if (chi_index >= 0 && e.chi_index != chi_index) continue;
                json je;
                je["chi_index"] = e.chi_index;
                je["S_re"] = e.S.real();
                je["S_im"] = e.S.imag();
                je["RHS_re"] = e.RHS.real();
                je["RHS_im"] = e.RHS.imag();
                je["abs_diff"] = e.abs_diff;
                je["pass"] = e.pass;
                all &= e.pass;
                p["entries"].push_back(je);
            }
            p["pass"] = all;
            if (!all) exit_code = 1;
            if (json_flag) format = "json";
        } else if (*c_check) {
            CoxeterDiagram d = parse_diagram(diagram_spec);
            GroupType t = classify(d);
            p["command"] = "check";
            p["diagram"] = diagram_spec;
            p["type"] = t.name();
            p["identity"] = identity;
            bool ok = false;
            if (identity == "deg") {
                auto degs = t.degrees();
                long long prod = 1;
                int sum = 0;
                for (int dd : degs) {
                    prod *= dd;
                    sum += dd - 1;
                }
                ok = (prod == t.order()) && (sum == t.num_reflections());
                RootSystemData r = root_system(t);
                if (ok && r.exact && t.rank() <= 4)
                    ok = (molien_degrees(generate_group(r)) == degs);
            } else if (identity == "conn") {
                MonodromyClass lhs;
                for (const auto& verts : connected_subgraphs(d)) {
                    long long sign = (verts.size() % 2) ? -1 : 1;
                    lhs = lhs + phi_twist(local_class_M(d.induced(verts))) * sign;
                }
                MonodromyClass rhs = MonodromyClass::V(1) * d.n;
                for (int dd : t.degrees()) rhs = rhs - MonodromyClass::V(dd);
                ok = (lhs == rhs);
                p["lhs"] = lhs.to_string();
                p["rhs"] = rhs.to_string();
            } else if (identity == "compl") {
                EulerCheckReport rep = coxeter_euler_checks(t);
                ok = rep.chi_ok && rep.quotient_ok && rep.chambers_ok;
            } else if (identity == "otherform") {
                IdentityCheck c = check_otherform(d);
                ok = c.ok;
                p["lhs"] = c.lhs.to_string();
                p["rhs"] = c.rhs.to_string();
            } else if (identity == "ab2") {
                ok = check_ab2(d, parse_rotation(chi_spec));
            }
            p["pass"] = ok;
            if (!ok) exit_code = 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    p["schema"] = "1";
    if (format == "json") out << p.dump(2) << "\n";
    else out << text_render(p);
    return exit_code;
}

}  // namespace coxmono::cli

#endif
