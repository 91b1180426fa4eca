// Command-line front end: exact invariants of the Schur-functor bundles on
// the Fano variety of lines, plus the verification harness.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "schurq/atomic.hpp"
#include "schurq/errors.hpp"
#include "schurq/bwb.hpp"
#include "schurq/chern.hpp"
#include "schurq/kbc.hpp"
#include "schurq/koszul.hpp"
#include "schurq/serialize.hpp"
#include "schurq/tables.hpp"
#include "schurq/verify.hpp"

namespace {

using namespace schurq;

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void print_page(const E1Page& page, bool as_csv) {
    if (as_csv) {
        std::cout << "mu,K,H,weight,dim,mult\n";
        for (const E1Entry& e : page.entries)
            std::cout << csv_quote(e.input.to_string()) << "," << e.p << "," << e.q << ","
                      << csv_quote(e.weight_string()) << "," << e.dim.to_string() << ","
                      << e.mult.to_string() << "\n";
        return;
    }
    std::cout << "lambda " << page.lambda.to_string() << "\n";
    std::cout << "mu              K  H  weight           dim     mult\n";
    for (const E1Entry& e : page.entries) {
        std::string mu = e.input.to_string();
        mu.resize(std::max<std::size_t>(mu.size(), 15), ' ');
        std::string w = e.weight_string();
        w.resize(std::max<std::size_t>(w.size(), 16), ' ');
        std::string d = e.dim.to_string();
        d.resize(std::max<std::size_t>(d.size(), 7), ' ');
        std::cout << mu << " " << e.p << "  " << e.q << "  " << w << " " << d << " "
                  << e.mult.to_string() << "\n";
    }
}

void print_ext(const ExtReport& rep, bool as_json) {
    if (as_json) {
        std::cout << to_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << "lambda " << rep.lambda.to_string() << "   chi = " << rep.chi.to_string() << "\n";
    for (int i = 0; i <= 4; ++i) {
        const ExtValue& v = rep.ext[i];
        std::cout << "ext^" << i << " = ";
        if (v.exact)
            std::cout << v.value.to_string();
        else
            std::cout << "[" << v.lower.to_string() << ", " << v.upper.to_string() << "]";
        std::cout << "   (" << to_string(v.provenance) << ")\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact invariants of Schur-functor bundles on the Fano variety of lines"};
    app.require_subcommand(1);

    bool json = false, csv = false, table = false;
    app.add_flag("--json", json, "emit JSON");
    app.add_flag("--csv", csv, "emit CSV");
    app.add_flag("--table", table, "emit an aligned table");
    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir, "directory for the decomposition cache");
    app.set_config("--config", "", "read the same keys from a config file; flags win");

    std::string arg_lambda, arg_mu, arg_w6;
    int arg_b = 0, arg_c = 0, arg_amax = 8, arg_maxbc = 5, arg_maxl1 = 8;

    CLI::App* cmd_chern = app.add_subcommand("chern", "Chern character and closed-form invariants");
    cmd_chern->add_option("lambda", arg_lambda, "partition a,b,c,d")->required();

    CLI::App* cmd_delta = app.add_subcommand("delta", "discriminant and modularity");
    cmd_delta->add_option("lambda", arg_lambda)->required();

    CLI::App* cmd_chi = app.add_subcommand("chi", "Euler characteristic of the endomorphisms");
    cmd_chi->add_option("lambda", arg_lambda)->required();

    CLI::App* cmd_atomic = app.add_subcommand("atomic", "atomicity test and extended Mukai vector");
    cmd_atomic->add_option("lambda", arg_lambda)->required();

    CLI::App* cmd_endo = app.add_subcommand("endo", "endomorphism bundle decomposition");
    cmd_endo->add_option("lambda", arg_lambda)->required();

    CLI::App* cmd_bwb = app.add_subcommand("bwb", "cohomology of one homogeneous bundle");
    cmd_bwb->add_option("weight", arg_w6, "weight a,b,c,d|e,f")->required();

    CLI::App* cmd_koszul = app.add_subcommand("koszul", "first page of the resolution");
    cmd_koszul->add_option("lambda", arg_lambda)->required();

    CLI::App* cmd_ext = app.add_subcommand("ext", "self-Ext dimensions report");
    cmd_ext->add_option("lambda", arg_lambda)->required();

    CLI::App* cmd_kbc = app.add_subcommand("kbc", "new-summand cardinalities along a family");
    cmd_kbc->add_option("b", arg_b)->required();
    cmd_kbc->add_option("c", arg_c)->required();
    cmd_kbc->add_option("--amax", arg_amax, "largest a to tabulate");

    CLI::App* cmd_kbct = app.add_subcommand("kbc-table", "stabilized cardinalities sweep");
    cmd_kbct->add_option("--max-bc", arg_maxbc, "largest b+c");

    CLI::App* cmd_mixed = app.add_subcommand("mixed", "modularity of a mixed plethysm");
    cmd_mixed->add_option("lambda", arg_lambda)->required();
    cmd_mixed->add_option("mu", arg_mu, "weight e,f")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    cmd_verify->add_option("--max-lambda1", arg_maxl1, "sweep bound for the Chern checks")
        ->check(CLI::Range(4, 16));

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*cmd_chern) {
        Weight4 l = Weight4::parse(arg_lambda);
        CohClass ch = ch_schur_closed(l);
        LambdaPolys lp = lambda_polys(l);
        if (json) {
            Json out = {{"lambda", l.to_string()}, {"ch", to_json(ch)}, {"polys", to_json(lp)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "ch(Sigma_" << l.to_string() << " Q) = " << ch.to_string()
                      << "  in basis (1; c1; c1^2, ch2; ch3; ch4)\n";
            std::cout << "rank " << lp.r.to_string() << ", ell " << lp.ell.to_string() << ", tau "
                      << lp.tau.to_string() << ", delta " << lp.delta.to_string() << ", xi "
                      << lp.xi.to_string() << ", P " << lp.P.to_string() << "\n";
        }
    } else if (*cmd_delta) {
        Weight4 l = Weight4::parse(arg_lambda);
        CohClass d = discriminant(ch_schur_closed(l));
        auto coeff = modular_coefficient(ch_schur_closed(l));
        if (json) {
            Json out = {{"lambda", l.to_string()},
                        {"discriminant", to_json(d)},
                        {"modular", coeff.has_value()},
                        {"c2X_coefficient", coeff ? Json(coeff->to_string()) : Json(nullptr)}};
            std::cout << out.dump(2) << "\n";
        } else if (coeff) {
            std::cout << "Delta = " << coeff->to_string() << " c2X (modular)\n";
        } else {
            std::cout << "Delta = " << d.to_string() << " (not modular)\n";
        }
    } else if (*cmd_chi) {
        Weight4 l = Weight4::parse(arg_lambda);
        BigInt chi = chi_end(l);
        if (json)
            std::cout << Json{{"lambda", l.to_string()}, {"chi", chi.to_int64()}}.dump(2) << "\n";
        else
            std::cout << chi.to_string() << "\n";
    } else if (*cmd_atomic) {
        Weight4 l = Weight4::parse(arg_lambda);
        bool atomic = is_atomic(l);
        Rational test = atomic_numeric_test(l);
        Json out = {{"lambda", l.to_string()},
                    {"atomic", atomic},
                    {"numeric_test", test.to_string()}};
        if (atomic) {
            ExtendedMukaiVector v = extended_mukai(l);
            out["mukai"] = {{"r", v.r.to_int64()}, {"l", v.l_coef.to_string()}, {"s", v.s.to_string()}};
        }
        if (json) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (atomic ? "atomic" : "not atomic") << ", (3 delta - 1)^2 - P = "
                      << test.to_string() << "\n";
            if (atomic) {
                ExtendedMukaiVector v = extended_mukai(l);
                std::cout << "extended Mukai vector (" << v.r.to_string() << ", "
                          << v.l_coef.to_string() << " c1, " << v.s.to_string() << ")\n";
            }
        }
    } else if (*cmd_endo) {
        Weight4 l = Weight4::parse(arg_lambda);
        IrrepSum<Weight6> dec = end_decomposition(l);
        if (json) {
            std::cout << Json{{"lambda", l.to_string()}, {"end", to_json(dec)}}.dump(2) << "\n";
        } else {
            for (const auto& [w, mult] : dec)
                std::cout << w.to_string() << "  x" << mult.to_string() << "  dim "
                          << weyl_dim(w).to_string() << "\n";
            std::cout << "total dim " << total_dimension(dec).to_string() << "\n";
        }
    } else if (*cmd_bwb) {
        Weight6 w = Weight6::parse(arg_w6);
        BwbResult r = bwb(w);
        if (json) {
            Json out = {{"weight", w.to_string()},
                        {"outcome", r.acyclic ? "acyclic" : "cohomology"}};
            if (!r.acyclic) {
                out["degree"] = r.degree;
                out["sl6_weight"] = r.weight_string();
                out["dim"] = r.dim.to_int64();
            }
            std::cout << out.dump(2) << "\n";
        } else if (r.acyclic) {
            std::cout << "acyclic\n";
        } else {
            std::cout << "H^" << r.degree << " = (" << r.weight_string() << "), dim "
                      << r.dim.to_string() << "\n";
        }
    } else if (*cmd_koszul) {
        Weight4 l = Weight4::parse(arg_lambda);
        E1Page page = e1_page_cached(l, cache_dir);
        if (json)
            std::cout << to_json(page).dump(2) << "\n";
        else
            print_page(page, csv && !table);
    } else if (*cmd_ext) {
        Weight4 l = Weight4::parse(arg_lambda);
        if (!cache_dir.empty()) e1_page_cached(l, cache_dir);
        print_ext(ext_report(l), json);
    } else if (*cmd_kbc) {
        KbcRecord rec = verify_stabilization(arg_b, arg_c, arg_amax);
        if (json) {
            Json values = Json::array();
            for (const auto& [a, k] : rec.a_values) values.push_back({{"a", a}, {"k", k.to_int64()}});
            Json out = {{"b", rec.b},
                        {"c", rec.c},
                        {"values", values},
                        {"stabilized", rec.stabilized},
                        {"k", rec.stabilized ? Json(rec.k.to_int64()) : Json(nullptr)},
                        {"f", rec.f_value.to_int64()}};
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& [a, k] : rec.a_values)
                std::cout << "a=" << a << "  " << k.to_string() << "\n";
            if (rec.stabilized)
                std::cout << "stabilized at " << rec.k.to_string() << ", f = "
                          << rec.f_value.to_string() << "\n";
            else
                std::cout << "not stabilized up to a=" << arg_amax << "\n";
        }
    } else if (*cmd_kbct) {
        std::cout << "lambda,b,c,k,f\n";
        for (int b = 0; b <= arg_maxbc; ++b)
            for (int c = 0; b + c <= arg_maxbc; ++c) {
                KbcRecord rec = verify_stabilization(b, c, std::max(b + c + 1, 1));
                std::cout << "\"(m," << b + c << "," << c << ",0)\"," << b << "," << c << ","
                          << (rec.stabilized ? rec.k.to_string() : std::string("?")) << ","
                          << rec.f_value.to_string() << "\n";
            }
    } else if (*cmd_mixed) {
        Weight4 l = Weight4::parse(arg_lambda);
        Weight2 mu = Weight2::parse(arg_mu);
        MixedModular mm = mixed_modular(l, mu);
        if (json) {
            Json out = {{"lambda", l.to_string()},
                        {"mu", mu.to_string()},
                        {"modular", mm.modular},
                        {"discriminant", to_json(mm.value)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << (mm.modular ? "modular" : "not modular") << ", Delta = "
                      << mm.value.to_string() << "\n";
        }
    } else if (*cmd_verify) {
        verify::Options opts;
        opts.max_lambda1 = arg_maxl1;
        bool all_pass = true;
        for (const verify::CheckResult& r : verify::run_all(opts)) {
            all_pass = all_pass && r.pass;
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail << "]\n";
            std::cerr << "# " << r.name << ": " << r.seconds << " s\n";
        }
        return all_pass ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const schurq::internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
