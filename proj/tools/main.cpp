// kcrank: exact k-crank tables, residue counts, weighted moments, a product
// expression evaluator, and the inequality/identity verification suites.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kcrank/bivariate.hpp"
#include "kcrank/crank_table.hpp"
#include "kcrank/formats.hpp"
#include "kcrank/moments.hpp"
#include "kcrank/partitions.hpp"
#include "kcrank/qexpr.hpp"
#include "kcrank/verify.hpp"

namespace fs = std::filesystem;
using namespace kcrank;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::string output;
    int jobs = 1;
};

void emit(const GlobalOpts& g, const std::string& payload) {
    if (g.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + g.output + "'");
    out << payload;
}

std::string render_table(const KCrankTable& t, const std::string& format) {
    if (format == "csv") return render_table_csv(t);
    if (format == "json") return render_table_json(t);
    return render_table_text(t);
}

fs::path cache_file(const std::string& cache_dir, int k, int order) {
    fs::path dir = cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("KCRANK_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) dir = fs::path(".") / "kcrank-cache";
    return dir / ("kcrank_k" + std::to_string(k) + "_N" + std::to_string(order) + ".txt");
}

KCrankTable compute_table(int k, int order, int jobs) {
    return k == 1 ? to_table(crank_gf(1, order, jobs), 1) : build(k, order, jobs);
}

KCrankTable table_with_cache(int k, int order, int jobs, bool use_cache,
                             const std::string& cache_dir) {
    if (!use_cache) return compute_table(k, order, jobs);
    fs::path file = cache_file(cache_dir, k, order);
    if (fs::exists(file)) {
        std::ifstream in(file);
        try {
            return read_cache(in, k, order);
        } catch (const CacheFormatError& e) {
            std::cerr << "cache file " << file << " rejected (" << e.what()
                      << "); recomputing\n";
        }
    }
    KCrankTable t = compute_table(k, order, jobs);
    fs::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    if (!out) throw Error("cannot write cache file " + file.string());
    write_cache(t, out);
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-crank distributions, moments, and theorem verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--output,-o", g.output, "write output to a file instead of stdout");
    app.add_option("--jobs,-j", g.jobs, "worker threads for table construction")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int k = 2, order = 20, modulus = 2, jmom = 1, kmax = 5;
    int verify_jmax = 5, rank_budget = 60, oracle_budget = 20;
    std::string expr_text, route = "direct", suite = "all", cache_dir;
    bool use_cache = false;

    CLI::App* cmd_table = app.add_subcommand("table", "compute the M_k(m,n) table");
    cmd_table->add_option("--k", k, "number of colors (k >= 1)")->required();
    cmd_table->add_option("--order", order, "truncation order N")->required();
    cmd_table->add_flag("--cache", use_cache, "store/reuse the table on disk");
    cmd_table->add_option("--cache-dir", cache_dir,
                          "cache directory (default $KCRANK_CACHE_DIR or ./kcrank-cache)");

    CLI::App* cmd_res = app.add_subcommand("residues", "residue counts M_k(r,d,n)");
    cmd_res->add_option("--k", k, "number of colors")->required();
    cmd_res->add_option("--order", order, "truncation order N")->required();
    cmd_res->add_option("--mod", modulus, "modulus d >= 2")->required();

    CLI::App* cmd_mom = app.add_subcommand("moments", "weighted moments mu_{2j,k}(-1,n)");
    cmd_mom->add_option("--k", k, "number of colors")->required();
    cmd_mom->add_option("--j", jmom, "half-order j (computes the 2j-th moment)")->required();
    cmd_mom->add_option("--order", order, "truncation order N")->required();
    cmd_mom->add_option("--route", route, "direct | gf1 | gf2")
        ->check(CLI::IsMember({"direct", "gf1", "gf2"}))
        ->capture_default_str();

    CLI::App* cmd_eval = app.add_subcommand("eval", "expand a product expression");
    cmd_eval->add_option("--order", order, "truncation order N")->required();
    cmd_eval->add_option("expr", expr_text, "expression, e.g. \"1/((-q;q)^2)\"")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run theorem suites");
    cmd_verify->add_option("--suite", suite, "mod2|mod3|mod4|moments|identities|unimodal|all")
        ->check(CLI::IsMember({"mod2", "mod3", "mod4", "moments", "identities", "unimodal",
                               "all"}))
        ->capture_default_str();
    cmd_verify->add_option("--order", order, "truncation order N")->required();
    cmd_verify->add_option("--kmax", kmax, "largest k to check")->capture_default_str();
    cmd_verify->add_option("--jmax", verify_jmax, "largest moment half-order")
        ->capture_default_str();
    cmd_verify->add_option("--budget", rank_budget, "rank enumeration budget (weights)")
        ->capture_default_str();

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "brute-force table for cross-checks");
    cmd_oracle->add_option("--k", k, "number of colors (k >= 2)")->required();
    cmd_oracle->add_option("--order", order, "truncation order N")->required();
    cmd_oracle->add_option("--budget", oracle_budget, "enumeration guard on the order")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_table->parsed()) {
            KCrankTable t = table_with_cache(k, order, g.jobs, use_cache, cache_dir);
            emit(g, render_table(t, g.format));
        } else if (cmd_res->parsed()) {
            KCrankTable t = compute_table(k, order, g.jobs);
            ResidueTable rt = residues(t, modulus);
            emit(g, g.format == "csv"    ? render_residues_csv(rt)
                    : g.format == "json" ? render_residues_json(rt)
                                         : render_residues_text(rt));
        } else if (cmd_mom->parsed()) {
            if (route == "direct") {
                KCrankTable t = compute_table(k, order, g.jobs);
                std::vector<Integer> mu = mu_weighted_direct(jmom, t);
                emit(g, g.format == "csv"    ? render_sequence_csv(mu)
                        : g.format == "json" ? render_sequence_json(mu)
                                             : render_sequence_text(mu));
            } else {
                QSeries s = route == "gf1" ? mu_weighted_gf1(jmom, k, order)
                                           : mu_weighted_gf2(jmom, k, order);
                emit(g, g.format == "csv"    ? render_series_csv(s)
                        : g.format == "json" ? render_series_json(s)
                                             : render_series_text(s));
            }
        } else if (cmd_eval->parsed()) {
            QSeries s = evaluate(parse(expr_text), order);
            emit(g, g.format == "csv"    ? render_series_csv(s)
                    : g.format == "json" ? render_series_json(s)
                                         : render_series_text(s));
        } else if (cmd_oracle->parsed()) {
            KCrankTable t = brute_force_table(k, order, oracle_budget);
            emit(g, render_table(t, g.format));
        } else if (cmd_verify->parsed()) {
            TableCache cache(g.jobs);
            std::vector<Report> reports;
            if (suite == "all") {
                reports = run_all_suites(cache, order, kmax, verify_jmax, rank_budget);
            } else if (suite == "mod2") {
                reports.push_back(suite_mod2(cache, order, kmax));
            } else if (suite == "mod3") {
                reports.push_back(suite_mod3(cache, order, kmax));
            } else if (suite == "mod4") {
                reports.push_back(suite_mod4(cache, order, kmax));
            } else if (suite == "moments") {
                reports.push_back(suite_moments(cache, order, verify_jmax, kmax));
            } else if (suite == "identities") {
                reports.push_back(suite_identities(cache, order, kmax, rank_budget));
            } else {
                reports.push_back(suite_unimodal(cache, order, kmax));
            }
            std::string payload;
            if (g.format == "json") {
                payload = reports.size() == 1 ? render_report_json(reports[0])
                                              : render_reports_json(reports);
            } else if (g.format == "csv") {
                std::ostringstream all;
                for (const auto& rep : reports) all << render_report_csv(rep);
                payload = all.str();
            } else {
                std::ostringstream all;
                for (const auto& rep : reports) all << render_report_text(rep);
                payload = all.str();
            }
            emit(g, payload);
            std::size_t violations = 0;
            for (const auto& rep : reports) violations += rep.violations;
            return violations == 0 ? 0 : 1;
        }
        return 0;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        if (!expr_text.empty() && e.offset <= expr_text.size()) {
            std::cerr << "  " << expr_text << "\n  " << std::string(e.offset, ' ') << "^\n";
        }
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
