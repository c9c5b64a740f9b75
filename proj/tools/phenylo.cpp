// phenylo: construct tree-like phenylenes, compute their Mostar index by two
// independent methods, evaluate closed forms, enumerate isomorphism classes,
// and verify the extremal ordering results by exhaustive search.
//
// Exit codes: 0 success / all verdicts pass, 1 invariant breach or failed
// verdict, 2 input or range error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "phenylo/closed_forms.hpp"
#include "phenylo/cuts.hpp"
#include "phenylo/embedding.hpp"
#include "phenylo/enumeration.hpp"
#include "phenylo/isomorphism.hpp"
#include "phenylo/json_io.hpp"
#include "phenylo/verify.hpp"

namespace {

using namespace phenylo;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

PhenyleneTree load_tree(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_input(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return tree_from_json(j);
}

int cmd_compute(const std::string& input, const std::string& method) {
    PhenyleneTree t = load_tree(input);
    if (method == "direct") {
        std::cout << mostar_direct(expand(t)) << "\n";
        return 0;
    }
    if (method == "cut") {
        std::cout << mostar_cut(t) << "\n";
        return 0;
    }
    long long direct = mostar_direct(expand(t));
    long long cut = mostar_cut(t);
    std::printf("%-28s %s\n", "cut class (representative)", "o   r_u  r_v  contribution");
    for (const CutClass& c : cut_classes(t)) {
        char rep[32];
        std::snprintf(rep, sizeof rep, "(%d,%d)", c.representative.first, c.representative.second);
        std::printf("%-28s %-3d %-4d %-4d %lld\n", rep, c.size, c.r_u, c.r_v,
                    6LL * c.size * std::abs(static_cast<long long>(c.r_u) - c.r_v));
    }
    std::printf("direct: %lld\ncut:    %lld\n", direct, cut);
    if (direct != cut) {
        std::cerr << "error: methods disagree\n";
        return 1;
    }
    std::printf("agree\n");
    return 0;
}

int cmd_family(const std::string& spec, const std::string& output, const std::string& dot_path) {
    PhenyleneTree t = parse_family_spec(spec);
    write_output(output, tree_to_json(t).dump() + "\n");
    if (!dot_path.empty()) write_output(dot_path, tree_to_dot(t));
    return 0;
}

int cmd_formula(const std::string& name, const std::vector<int>& params) {
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("formula " + name + " takes " + std::to_string(n) +
                                        " parameter(s)");
    };
    FormulaResult r;
    if (name == "linear") {
        need(1);
        r = mo_linear(params[0]);
    } else if (name == "pl") {
        need(3);
        r = mo_pl(params[0], params[1], params[2]);
    } else if (name == "second") {
        need(1);
        r = mo_second(params[0]);
    } else if (name == "third-chain") {
        need(1);
        r = mo_third_chain(params[0]);
    } else {
        throw std::invalid_argument("unknown formula: " + name +
                                    " (expected linear, pl, second, third-chain)");
    }
    std::printf("%lld %s\n", r.value, r.branch.c_str());
    return 0;
}

int cmd_enumerate(int h, bool chains_only, bool planar_only, const std::string& output) {
    EnumerateOptions opts;
    opts.chains_only = chains_only;
    opts.planar_only = planar_only;
    ClassCatalog c = enumerate_phenylenes(h, opts);
    std::string out;
    for (const CatalogEntry& e : c.entries) out += catalog_entry_to_json(e).dump() + "\n";
    out += catalog_summary_to_json(c).dump() + "\n";
    write_output(output, out);
    return 0;
}

int cmd_rank(int h, int top, const std::string& format, bool chains_only, bool planar_only,
             const std::string& output) {
    EnumerateOptions opts;
    opts.chains_only = chains_only;
    opts.planar_only = planar_only;
    RankingReport r = rank(h, opts);
    size_t limit = top > 0 ? static_cast<size_t>(top) : r.groups.size();

    std::string out;
    if (format == "json") {
        nlohmann::json j = ranking_to_json(r);
        if (limit < j["groups"].size())
            j["groups"].erase(j["groups"].begin() + static_cast<long>(limit), j["groups"].end());
        out = j.dump() + "\n";
    } else if (format == "csv") {
        out = "rank,mo_value,class_count,member_specs\n";
        for (size_t i = 0; i < r.groups.size() && i < limit; ++i) {
            const ValueGroup& g = r.groups[i];
            std::string members;
            for (const std::string& l : g.labels) {
                if (!members.empty()) members += ";";
                members += l;
            }
            out += std::to_string(i + 1) + "," + std::to_string(g.value) + "," +
                   std::to_string(g.members.size()) + "," + members + "\n";
        }
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-5s %-9s %-6s %s\n", "rank", "Mo", "count", "members");
        out = buf;
        for (size_t i = 0; i < r.groups.size() && i < limit; ++i) {
            const ValueGroup& g = r.groups[i];
            std::snprintf(buf, sizeof buf, "%-5zu %-9lld %-6zu ", i + 1, g.value,
                          g.members.size());
            out += buf;
            for (size_t k = 0; k < g.labels.size(); ++k)
                out += (k ? " " : "") + g.labels[k];
            out += "\n";
        }
    }
    write_output(output, out);
    return 0;
}

void print_verdict(const Verdict& v, const std::string& format) {
    if (format == "json") {
        std::cout << verdict_to_json(v).dump() << "\n";
        return;
    }
    std::printf("%-20s %s", v.name.c_str(),
                v.asserted ? (v.pass ? "PASS" : "FAIL") : "report-only");
    std::printf("  observed Mo=%lld {", v.observed_value);
    for (size_t i = 0; i < v.observed_members.size(); ++i)
        std::printf("%s%s", i ? ", " : "", v.observed_members[i].c_str());
    std::printf("}");
    if (!v.detail.empty()) std::printf("  (%s)", v.detail.c_str());
    std::printf("\n");
}

int cmd_verify(const std::string& theorem, int h_lo, int h_hi, const std::string& format) {
    bool all_pass = true;
    for (int h = h_lo; h <= h_hi; ++h) {
        RankingReport r = rank(h);
        std::vector<Verdict> verdicts;
        if (theorem.empty() || theorem == "3.5") verdicts.push_back(verify_min(r));
        if (theorem.empty() || theorem == "4.4") verdicts.push_back(verify_second(r));
        if (theorem.empty() || theorem == "5.4") verdicts.push_back(verify_third(r));
        if (verdicts.empty()) throw std::invalid_argument("unknown theorem: " + theorem);
        for (const Verdict& v : verdicts) {
            print_verdict(v, format);
            if (v.asserted && !v.pass) all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_check_lemmas(int trials, std::uint64_t seed, int max_h) {
    bool all_pass = true;
    for (auto fn : {run_lemma_3_1_trials, run_corollary_3_2_trials, run_lemma_3_3_trials}) {
        TrialSummary s = fn(trials, seed, max_h);
        std::printf("lemma %-4s %s  trials=%d failures=%d seed=%llu%s%s\n", s.lemma.c_str(),
                    s.pass ? "PASS" : "FAIL", s.trials, s.failures,
                    static_cast<unsigned long long>(s.seed), s.detail.empty() ? "" : "  ",
                    s.detail.c_str());
        if (!s.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-like phenylene Mostar index toolkit"};
    app.require_subcommand(1);
    // Long-only help: several subcommands use a literal --h option, which the
    // default -h short help flag would shadow.
    app.set_help_flag("--help", "print usage");

    std::string input = "-", output, dot_path, spec, method = "both", format = "table";
    std::string formula_name, theorem, h_range;
    std::vector<int> formula_params;
    int h = 0, top = 0, trials = 500, max_h = 8;
    std::uint64_t seed = 1;
    bool chains_only = false, planar_only = false;

    auto* compute = app.add_subcommand("compute", "Mostar index of a phenylene JSON encoding");
    compute->set_help_flag("--help", "print usage");
    compute->add_option("--input,-i", input, "JSON file ('-' = stdin)");
    compute->add_option("--method,-m", method, "direct | cut | both")
        ->check(CLI::IsMember({"direct", "cut", "both"}));

    auto* family = app.add_subcommand("family", "construct a named family member");
    family->set_help_flag("--help", "print usage");
    family->add_option("spec", spec, "linear:h | chain:WORD | cl:t1,t2,... | pl:j,k,n")
        ->required();
    family->add_option("--output,-o", output, "output path (default stdout)");
    family->add_option("--dot", dot_path, "also write a Graphviz drawing with coordinates");

    auto* formula = app.add_subcommand("formula", "closed-form Mostar value");
    formula->set_help_flag("--help", "print usage");
    formula->add_option("name", formula_name, "linear | pl | second | third-chain")->required();
    formula->add_option("params", formula_params, "formula parameters");

    auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes at a given size");
    enumerate->set_help_flag("--help", "print usage");
    enumerate->add_option("--h", h, "number of hexagons")->required();
    enumerate->add_flag("--chains-only", chains_only, "restrict to chains");
    enumerate->add_flag("--planar-only", planar_only, "drop self-overlapping classes");
    enumerate->add_option("--output,-o", output, "output path (default stdout)");

    auto* rank_cmd = app.add_subcommand("rank", "classes grouped by increasing Mostar value");
    rank_cmd->set_help_flag("--help", "print usage");
    rank_cmd->add_option("--h", h, "number of hexagons")->required();
    rank_cmd->add_option("--top", top, "emit only the first N groups");
    rank_cmd->add_option("--format,-f", format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    rank_cmd->add_flag("--chains-only", chains_only, "restrict to chains");
    rank_cmd->add_flag("--planar-only", planar_only, "drop self-overlapping classes");
    rank_cmd->add_option("--output,-o", output, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "check the extremal ordering results");
    verify->set_help_flag("--help", "print usage");
    verify->add_option("--theorem", theorem, "3.5 | 4.4 | 5.4 (default: all)");
    verify->add_option("--h-range", h_range, "A..B range of hexagon counts");
    verify->add_option("--h", h, "single hexagon count");
    verify->add_option("--format,-f", format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* lemmas = app.add_subcommand("check-lemmas", "seeded random-instance lemma suites");
    lemmas->set_help_flag("--help", "print usage");
    lemmas->add_option("--trials", trials, "trials per lemma (default 500)");
    lemmas->add_option("--seed", seed, "generator seed (default 1)");
    lemmas->add_option("--max-h", max_h, "instance size bound (default 8)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return cmd_compute(input, method);
        if (*family) return cmd_family(spec, output, dot_path);
        if (*formula) return cmd_formula(formula_name, formula_params);
        if (*enumerate) return cmd_enumerate(h, chains_only, planar_only, output);
        if (*rank_cmd) return cmd_rank(h, top, format, chains_only, planar_only, output);
        if (*verify) {
            int lo = h, hi = h;
            if (!h_range.empty()) {
                size_t pos = h_range.find("..");
                if (pos == std::string::npos)
                    throw std::invalid_argument("--h-range must look like A..B");
                lo = std::stoi(h_range.substr(0, pos));
                hi = std::stoi(h_range.substr(pos + 2));
            }
            if (lo < 1 || hi < lo) throw std::invalid_argument("empty or invalid h range");
            return cmd_verify(theorem, lo, hi, format);
        }
        if (*lemmas) return cmd_check_lemmas(trials, seed, max_h);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
