#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qac/cluster.hpp"
#include "qac/monoidal.hpp"
#include "qac/suites.hpp"

using nlohmann::ordered_json;
using namespace qac;

namespace {

ordered_json gfun_json(const GFun& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [a, e] : f.eta())
        arr.push_back({{"param", render_param(a)}, {"exp", e}});
    return arr;
}

ordered_json report_json(const AffineTypeData& T, const std::string& mtext,
                         const std::string& ntext, const InvariantReport& r) {
    ordered_json j;
    j["type"] = T.name;
    j["M"] = mtext;
    j["N"] = ntext;
    j["c"] = gfun_json(r.c);
    j["c_rendered"] = r.c.str();
    j["lambda"] = r.lambda;
    j["lambda_tilde"] = r.lambda_tilde;
    j["lambda_inf"] = r.lambda_inf;
    if (r.de) j["de"] = *r.de;
    else j["de"] = nullptr;
    j["certificate"] = certificate_name(r.certificate);
    return j;
}

void print_report(const InvariantReport& r) {
    std::cout << "c(M,N)       = " << r.c.str() << "\n"
              << "lambda       = " << r.lambda << "\n"
              << "lambda~      = " << r.lambda_tilde << "\n"
              << "lambda^inf   = " << r.lambda_inf << "\n";
    if (r.de) std::cout << "de           = " << *r.de << "\n";
    else std::cout << "de           = (not reported: product-only presentation)\n";
    std::cout << "certificate  = " << certificate_name(r.certificate) << "\n";
}

int run_invariants(const std::string& type, const std::string& mtext, const std::string& ntext,
                   bool json) {
    AffineTypeData T = resolve_type(type);
    StandardModule M = parse_module(T, mtext), N = parse_module(T, ntext);
    InvariantReport r = invariant_report(T, M, N);
    if (json) std::cout << report_json(T, mtext, ntext, r).dump(2) << "\n";
    else print_report(r);
    return 0;
}

int run_de_table(const std::string& type, const std::vector<std::string>& texts, bool json) {
    AffineTypeData T = resolve_type(type);
    std::vector<StandardModule> mods;
    for (const auto& t : texts) mods.push_back(parse_module(T, t));
    size_t n = mods.size();
    std::vector<std::vector<long long>> dmat(n, std::vector<long long>(n)),
        lmat(n, std::vector<long long>(n));
    std::vector<std::string> certs(n);
    for (size_t i = 0; i < n; ++i) {
        certs[i] = commuting_family(T, mods[i]) ? "CertifiedCommutingFamily" : "ProductOnly";
        for (size_t j = 0; j < n; ++j) {
            dmat[i][j] = de(T, mods[i], mods[j]).value;
            lmat[i][j] = lambda(T, mods[i], mods[j]);
        }
    }
    if (json) {
        ordered_json j;
        j["type"] = T.name;
        j["modules"] = texts;
        j["certificates"] = certs;
        j["de"] = dmat;
        j["lambda"] = lmat;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "de matrix (lambda matrix):\n";
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j)
                std::cout << dmat[i][j] << " (" << lmat[i][j] << ")\t";
            std::cout << " : " << texts[i] << " [" << certs[i] << "]\n";
        }
    }
    return 0;
}

int run_commutes(const std::string& type, const std::string& mtext, const std::string& ntext,
                 bool json) {
    AffineTypeData T = resolve_type(type);
    StandardModule M = parse_module(T, mtext), N = parse_module(T, ntext);
    DeValue d = de(T, M, N);
    bool commute = d.value == 0 && d.certificate == Certificate::CertifiedCommutingFamily;
    if (json) {
        ordered_json j;
        j["type"] = T.name;
        j["M"] = mtext;
        j["N"] = ntext;
        j["de"] = d.value;
        j["certificate"] = certificate_name(d.certificate);
        j["strongly_commute"] = commute;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "de = " << d.value << " [" << certificate_name(d.certificate) << "]\n";
        if (commute)
            std::cout << "strongly commute: yes\n";
        else if (d.value == 0)
            std::cout << "strongly commute: de = 0, but a side is product-only; no certificate\n";
        else
            std::cout << "strongly commute: no\n";
    }
    return 0;
}

int run_spectrum(const std::string& type, const std::string& mtext, const std::string& ntext,
                 bool json) {
    AffineTypeData T = resolve_type(type);
    StandardModule M = parse_module(T, mtext), N = parse_module(T, ntext);
    DeSpectrum s = de_spectrum(T, M, N);
    if (json) {
        ordered_json j;
        j["type"] = T.name;
        j["M"] = mtext;
        j["N"] = ntext;
        j["bound"] = s.bound;
        ordered_json vals = ordered_json::object();
        for (const auto& [k, v] : s.values) vals[std::to_string(k)] = v;
        j["values"] = vals;
        j["lambda_via_spectrum"] = lambda_via_spectrum(T, M, N);
        j["lambda_inf_via_spectrum"] = lambda_inf_via_spectrum(T, M, N);
        j["zero_order_c"] = zero_order_c(T, M, N);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "de(M, D^k N) for |k| <= " << s.bound << " (zero outside):\n";
        for (long long k = -s.bound; k <= s.bound; ++k)
            if (s.at(k) != 0) std::cout << "  k = " << k << ": " << s.at(k) << "\n";
        if (s.values.empty()) std::cout << "  all zero\n";
        std::cout << "alternating sums: lambda = " << lambda_via_spectrum(T, M, N)
                  << ", lambda^inf = " << lambda_inf_via_spectrum(T, M, N)
                  << ", zero order of c = " << zero_order_c(T, M, N) << "\n";
    }
    return 0;
}

ordered_json candidate_json(const CandidateReport& r, const std::string& expr) {
    ordered_json j;
    j["direction"] = r.direction;
    j["candidate"] = expr;
    j["candidate_commuting"] = r.candidate_commuting;
    j["de_ok"] = r.de_ok;
    j["exchange_relations_ok"] = r.larel_ok;
    j["weight_ok"] = r.weight_ok;
    j["weight_side"] = r.weight_side;
    j["lmatrix_ok"] = r.lmatrix_ok;
    j["column_admissible"] = r.column_admissible;
    j["pass"] = r.pass();
    j["witnesses"] = r.witnesses;
    return j;
}

int run_seed_check(const std::string& path, const std::vector<std::string>& candidates,
                   const std::vector<Idx>& searches, long long grid, bool json) {
    MonoidalSeed seed = load_monoidal_seed(path);
    AdmissibilityReport rep = check_lambda_admissible(seed);

    ordered_json out;
    out["type"] = seed.type.name;
    out["family_ok"] = rep.family_defects.empty();
    ordered_json fam = ordered_json::array();
    for (const auto& [i, j] : rep.family_defects) fam.push_back({i, j});
    out["family_defects"] = fam;
    ordered_json lam = ordered_json::object();
    for (Idx i : seed.B.ids) {
        ordered_json row = ordered_json::array();
        for (Idx j : seed.B.ids) row.push_back(rep.lambda.at(i, j));
        lam[std::to_string(i)] = row;
    }
    out["lambda_matrix"] = lam;
    ordered_json defects = ordered_json::array();
    for (const auto& [j, k] : rep.defects) defects.push_back({j, k});
    out["defects"] = defects;
    ordered_json cols = ordered_json::object();
    for (const auto& [k, ok] : rep.column_ok) cols[std::to_string(k)] = ok;
    out["column_ok"] = cols;
    out["numerically_admissible"] = rep.compatible() && rep.family_defects.empty();

    ordered_json cand_arr = ordered_json::array();
    for (const auto& entry : candidates) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw SeedError("--candidate wants <direction>=<module expression>");
        Idx k = std::stoi(entry.substr(0, eq));
        StandardModule cand = parse_module(seed.type, entry.substr(eq + 1));
        cand_arr.push_back(candidate_json(verify_candidate(seed, k, cand), entry.substr(eq + 1)));
    }
    out["candidates"] = cand_arr;

    ordered_json search_arr = ordered_json::array();
    for (Idx k : searches) {
        std::string note;
        auto found = search_candidate(seed, k, grid, &note);
        ordered_json sj;
        sj["direction"] = k;
        sj["grid_radius"] = grid;
        if (found) {
            sj["found"] = render_module(*found);
            sj["report"] = candidate_json(verify_candidate(seed, k, *found), render_module(*found));
        } else {
            sj["found"] = nullptr;
            sj["note"] = note.empty() ? "none found in grid" : note;
        }
        search_arr.push_back(sj);
    }
    out["searches"] = search_arr;

    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "type: " << seed.type.name << "\n";
        std::cout << "strongly commuting family: " << (rep.family_defects.empty() ? "yes" : "NO")
                  << "\n";
        for (const auto& [i, j] : rep.family_defects)
            std::cout << "  violating pair (" << i << "," << j << ")\n";
        std::cout << "Lambda^S:\n";
        for (Idx i : seed.B.ids) {
            std::cout << "  ";
            for (Idx j : seed.B.ids) std::cout << rep.lambda.at(i, j) << "\t";
            std::cout << "\n";
        }
        if (rep.defects.empty()) {
            std::cout << "(Lambda^S B)_{jk} = -2 delta_{jk}: holds on all exchangeable columns\n";
            std::cout << "verdict: numerically consistent with Lambda-admissibility\n";
        } else {
            std::cout << "compatibility defects (j,k):";
            for (const auto& [j, k] : rep.defects) std::cout << " (" << j << "," << k << ")";
            std::cout << "\nverdict: not Lambda-admissible\n";
        }
        for (const auto& c : cand_arr)
            std::cout << "candidate " << c["candidate"].get<std::string>() << " in direction "
                      << c["direction"] << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL")
                      << "\n";
        for (const auto& sres : search_arr) {
            std::cout << "search direction " << sres["direction"] << ": ";
            if (sres["found"].is_null())
                std::cout << sres["note"].get<std::string>() << "\n";
            else
                std::cout << sres["found"].get<std::string>() << "\n";
        }
    }
    return 0;
}

int run_mutate(const std::string& path, const std::vector<Idx>& dirs, const std::string& outfile) {
    ClusterSeed seed = load_seed(path);
    for (Idx k : dirs) seed = mutate_seed(seed, k);
    std::string text = render_seed(seed);
    if (outfile.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outfile);
        if (!out) throw SeedError("cannot write '" + outfile + "'");
        out << text;
    }
    return 0;
}

int run_suite_cmd(const std::string& name, long long n, unsigned long long seed, bool json) {
    SuiteResult res = run_suite(name, n, seed);
    if (json) {
        ordered_json j;
        j["suite"] = res.suite;
        j["samples"] = res.samples;
        j["pass"] = res.pass();
        ordered_json props = ordered_json::array();
        for (const auto& p : res.properties) {
            ordered_json pj;
            pj["name"] = p.name;
            pj["checks"] = p.checks;
            pj["failures"] = p.failures;
            if (p.failures > 0) pj["first_failure"] = p.first_failure;
            props.push_back(pj);
        }
        j["properties"] = props;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "suite " << res.suite << ": " << res.samples << " samples\n";
        for (const auto& p : res.properties) {
            if (p.failures == 0) {
                std::cout << "  ok   " << p.name << " (" << p.checks << " checks)\n";
            } else {
                std::cout << "  FAIL " << p.name << " (" << p.failures << "/" << p.checks
                          << "): " << p.first_failure << "\n";
            }
        }
        std::cout << "result: " << (res.pass() ? "PASS" : "FAIL") << "\n";
    }
    return res.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact R-matrix coefficient invariants and Lambda-seed mutation"};
    app.require_subcommand(1);

    std::string type = "A1~1", mtext, ntext, path, outfile;
    std::vector<std::string> exprs, candidates;
    std::vector<Idx> dirs, searches;
    bool json = false;
    long long nsamples = 1000, grid = 6;
    unsigned long long seed = 20230915;
    std::string suite_name;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "structured output"); };

    auto* inv = app.add_subcommand("invariants", "c, lambda, lambda~, lambda^inf, de of a pair");
    inv->add_option("--type", type, "builtin name (A<n>~1) or type data file")->required();
    inv->add_option("M", mtext, "module expression")->required();
    inv->add_option("N", ntext, "module expression")->required();
    add_json(inv);

    auto* det = app.add_subcommand("de-table", "pairwise de and lambda of a module list");
    det->add_option("--type", type)->required();
    det->add_option("modules", exprs, "module expressions")->required()->expected(-1);
    add_json(det);

    auto* com = app.add_subcommand("commutes", "strong commutation test for a pair");
    com->add_option("--type", type)->required();
    com->add_option("M", mtext)->required();
    com->add_option("N", ntext)->required();
    add_json(com);

    auto* spm = app.add_subcommand("spectrum", "de(M, D^k N) across dual shifts");
    spm->add_option("--type", type)->required();
    spm->add_option("M", mtext)->required();
    spm->add_option("N", ntext)->required();
    add_json(spm);

    auto* sc = app.add_subcommand("seed-check", "monoidal seed admissibility checks");
    sc->add_option("file", path, "monoidal seed file")->required();
    sc->add_option("--candidate", candidates, "<direction>=<module expression>, repeatable");
    sc->add_option("--search", searches, "brute-force a candidate in this direction, repeatable");
    sc->add_option("--grid", grid, "search grid radius for (-q)^t parameters");
    add_json(sc);

    auto* mu = app.add_subcommand("mutate", "mutate a cluster seed file");
    mu->add_option("file", path, "seed file")->required();
    mu->add_option("-k,--direction", dirs, "mutation directions, applied in order");
    mu->add_option("-o,--output", outfile, "output file (default stdout)");

    auto* su = app.add_subcommand("suite", "run a randomized property suite");
    su->add_option("name", suite_name, "gfun | invariants | cluster | monoidal")->required();
    su->add_option("--n", nsamples, "sample count");
    su->add_option("--seed", seed, "rng seed");
    add_json(su);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed()) return run_invariants(type, mtext, ntext, json);
        if (det->parsed()) return run_de_table(type, exprs, json);
        if (com->parsed()) return run_commutes(type, mtext, ntext, json);
        if (spm->parsed()) return run_spectrum(type, mtext, ntext, json);
        if (sc->parsed()) return run_seed_check(path, candidates, searches, grid, json);
        if (mu->parsed()) return run_mutate(path, dirs, outfile);
        if (su->parsed()) return run_suite_cmd(suite_name, nsamples, seed, json);
    } catch (const LaurentFault& e) {
        std::cerr << "engine fault: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency fault: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
