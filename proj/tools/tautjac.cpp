#include "taut/checks.hpp"
#include "taut/expr.hpp"
#include "taut/fourier.hpp"
#include "taut/newton.hpp"
#include "taut/relations.hpp"
#include "taut/tautring.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using taut::Alphabet;
using taut::GenusContext;
using taut::Polynomial;

struct CommonOpts {
    int genus = 0;
    std::string format = "text";
    int max_genus = taut::kDefaultMaxGenus;
    bool w_input = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_w) {
    cmd->add_option("-g,--genus", opts.genus, "genus (>= 2)")->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    cmd->add_option("--max-genus", opts.max_genus, "safety bound for the genus")
        ->capture_default_str();
    if (with_w)
        cmd->add_flag("--w-input", opts.w_input,
                      "parse the expression in the w-alphabet and convert");
}

int check_genus(const CommonOpts& opts, int lo) {
    if (opts.genus < lo || opts.genus > opts.max_genus) {
        std::cerr << "E_GENUS_RANGE: genus must lie in [" << lo << ", " << opts.max_genus
                  << "]\n";
        return 2;
    }
    return 0;
}

void emit(const Polynomial& p, const CommonOpts& opts) {
    if (opts.format == "json")
        std::cout << taut::to_json(p, opts.genus).dump() << "\n";
    else if (opts.format == "latex")
        std::cout << taut::to_latex(p) << "\n";
    else
        std::cout << taut::to_text(p) << "\n";
}

Polynomial parse_input(const std::string& expr, const CommonOpts& opts, int cap) {
    if (opts.w_input) {
        Polynomial w = taut::parse_expression(expr, cap, Alphabet::W);
        return taut::newton_w_to_p(w, opts.genus);
    }
    return taut::parse_expression(expr, cap, Alphabet::P);
}

int cmd_reduce(const std::string& expr, const CommonOpts& opts) {
    if (int rc = check_genus(opts, 2)) return rc;
    GenusContext ctx = GenusContext::quotient(opts.genus);
    emit(taut::normal_form(parse_input(expr, opts, ctx.cap), ctx), opts);
    return 0;
}

int cmd_fourier(const std::string& expr, const CommonOpts& opts) {
    if (int rc = check_genus(opts, 2)) return rc;
    GenusContext ctx = GenusContext::quotient(opts.genus);
    emit(taut::fourier_S(parse_input(expr, opts, ctx.cap), ctx), opts);
    return 0;
}

int cmd_relations(const CommonOpts& opts, bool include_top) {
    if (int rc = check_genus(opts, 4)) return rc;
    taut::RelationTable table = taut::relation_table(opts.genus, include_top);
    if (opts.format == "json") {
        nlohmann::json groups = nlohmann::json::array();
        int cur_d = -1;
        for (const auto& row : table.rows) {
            if (groups.empty() || cur_d != row.d) {
                groups.push_back({{"d", row.d}, {"codim", row.codim},
                                  {"relations", nlohmann::json::array()}});
                cur_d = row.d;
            }
            groups.back()["relations"].push_back(taut::to_json(row.poly, opts.genus));
        }
        std::cout << nlohmann::json{{"genus", opts.genus}, {"groups", groups}}.dump() << "\n";
        return 0;
    }
    int cur_d = -1;
    for (const auto& row : table.rows) {
        if (row.d != cur_d) {
            std::cout << "d=" << row.d << " (codim " << row.codim << "):\n";
            cur_d = row.d;
        }
        if (opts.format == "latex")
            std::cout << "  " << taut::to_latex(row.poly) << " = 0\n";
        else
            std::cout << "  " << taut::relation_text(row.poly) << "\n";
    }
    return 0;
}

int cmd_dims(const CommonOpts& opts) {
    if (int rc = check_genus(opts, 2)) return rc;
    auto table = taut::dimension_table(opts.genus);
    if (opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table)
            rows.push_back({{"degree", row.degree},
                            {"dim_ideal", row.dim_ideal},
                            {"dim_ring", row.dim_ring},
                            {"dim_space", row.dim_space}});
        std::cout << nlohmann::json{{"genus", opts.genus}, {"rows", rows}}.dump() << "\n";
        return 0;
    }
    std::cout << "degree  dim(ideal)  dim(ring)  dim(space)\n";
    for (const auto& row : table)
        std::cout << "  " << row.degree << "\t" << row.dim_ideal << "\t    " << row.dim_ring
                  << "\t       " << row.dim_space << "\n";
    return 0;
}

int cmd_check(const std::string& suite, const taut::CheckOptions& opts) {
    std::vector<taut::CheckResult> results = taut::run_suite(suite, opts);
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.ok ? "[ ok ]" : "[FAIL]") << " " << r.suite << "." << r.name << " — "
                  << r.detail << "\n";
        if (!r.ok) ++failures;
    }
    std::cout << results.size() << " identities checked, " << failures << " failed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the formal tautological ring of a Jacobian"};
    app.require_subcommand(1);

    CommonOpts reduce_opts, fourier_opts, relations_opts, dims_opts;
    std::string reduce_expr, fourier_expr;
    bool include_top = false;

    CLI::App* reduce = app.add_subcommand("reduce", "normal form of an expression mod the ideal");
    add_common(reduce, reduce_opts, true);
    reduce->add_option("expr", reduce_expr, "expression, e.g. \"p2^2 + 6*p1*p3\"")->required();

    CLI::App* fourier = app.add_subcommand("fourier", "Fourier transform of an expression");
    add_common(fourier, fourier_opts, true);
    fourier->add_option("expr", fourier_expr, "expression in p (or w with --w-input)")->required();

    CLI::App* relations = app.add_subcommand("relations", "relation table for a genus");
    add_common(relations, relations_opts, false);
    relations->add_flag("--include-top", include_top, "also list the codimension-g rows");

    CLI::App* dims = app.add_subcommand("dims", "per-degree dimensions of ideal and ring");
    add_common(dims, dims_opts, false);

    taut::CheckOptions check_opts;
    std::string suite = "all";
    CLI::App* check = app.add_subcommand("check", "run the verification suites");
    check->add_option("--suite", suite, "operators|fourier|ideal|tables|sl2|hurwitz|all")
        ->capture_default_str();
    check->add_option("--genus-min", check_opts.genus_min)->capture_default_str();
    check->add_option("--genus-max", check_opts.genus_max)->capture_default_str();
    check->add_option("--seed", check_opts.seed)->capture_default_str();
    check->add_option("--max-genus", check_opts.max_genus)->capture_default_str();
    check->add_option("--golden-dir", check_opts.golden_dir,
                      "directory holding the relation table data");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce->parsed()) return cmd_reduce(reduce_expr, reduce_opts);
        if (fourier->parsed()) return cmd_fourier(fourier_expr, fourier_opts);
        if (relations->parsed()) return cmd_relations(relations_opts, include_top);
        if (dims->parsed()) return cmd_dims(dims_opts);
        if (check->parsed()) {
            if (!taut::suite_known(suite)) {
                std::cerr << "E_USAGE: unknown suite '" << suite << "'\n";
                return 2;
            }
            if (check_opts.genus_min < 2 || check_opts.genus_max > check_opts.max_genus ||
                check_opts.genus_min > check_opts.genus_max) {
                std::cerr << "E_GENUS_RANGE: need 2 <= genus-min <= genus-max <= max-genus\n";
                return 2;
            }
            return cmd_check(suite, check_opts);
        }
    } catch (const taut::ParseError& e) {
        std::cerr << "E_PARSE: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "E_RUNTIME: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
