#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zchelp/zchelp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitScope = 2;
constexpr int kExitNontrivial = 3;
constexpr int kExitInternal = 4;

int status_exit(zchelp_status st) {
    switch (st) {
        case ZCHELP_OK: return kExitOk;
        case ZCHELP_USAGE: return kExitUsage;
        case ZCHELP_SCOPE: return kExitScope;
        default: return kExitInternal;
    }
}

int emit(zchelp_status st, char* rendered, int verdict,
         const std::string& output_path) {
    if (st != ZCHELP_OK) {
        std::cerr << "error: " << zchelp_last_error() << "\n";
        return status_exit(st);
    }
    if (output_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << output_path << "\n";
            zchelp_string_free(rendered);
            return kExitInternal;
        }
        out << rendered;
    }
    zchelp_string_free(rendered);
    return verdict == 0 ? kExitOk : kExitNontrivial;
}

// The environment variable overrides the built-in search budget; an
// explicit --node-cap flag wins over both.
int64_t env_node_cap() {
    const char* raw = std::getenv("ZCHELP_NODE_CAP");
    if (!raw || !*raw) return 0;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (!end || *end || v < 0)
        throw CLI::ValidationError("ZCHELP_NODE_CAP must be a non-negative integer");
    return v;
}

// Accepts power data either inline (a JSON object) or as a file path.
// Returns false if a file path was given but could not be read.
bool load_power_data(const std::string& arg, std::string& out) {
    size_t first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') {
        out = arg;
        return true;
    }
    std::ifstream in(arg, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for torsion units over SL(2,q)"};
    app.require_subcommand(1);
    app.fallthrough();  // --format and --output may follow the subcommand

    std::string format = "text";
    std::string output_path;
    app.add_option("--format", format, "output format: json, csv or text")
        ->capture_default_str();
    app.add_option("--output", output_path, "write the report to a file");

    int64_t n = 0, i = 0, q = 0, r = 0, d = 0;
    int64_t max_char = 0, node_cap = -1, trials = 1000, limit = 120;
    uint64_t seed = 1;
    bool no_normalize = false;
    std::string mode = "inductive";
    std::string power_path;
    std::vector<int64_t> q_list;

    CLI::App* basis = app.add_subcommand("basis", "basis of the real subfield");
    basis->add_option("--n", n, "cyclotomic modulus")->required();

    CLI::App* expand = app.add_subcommand("expand", "expand a pair sum over the basis");
    expand->add_option("--n", n, "cyclotomic modulus")->required();
    expand->add_option("--i", i, "pair exponent")->required();

    CLI::App* classes = app.add_subcommand("classes", "conjugacy classes of SL(2,q)");
    classes->add_option("--q", q, "odd prime power")->required();

    CLI::App* solve = app.add_subcommand("solve", "solve one (q, n) instance");
    solve->add_option("--q", q, "odd prime power")->required();
    solve->add_option("--n", n, "unit order")->required();
    solve->add_option("--max-char", max_char, "largest character degree (0 = default)");
    solve->add_option("--mode", mode, "inductive or custom")
        ->check(CLI::IsMember({"inductive", "custom"}));
    solve->add_option("--power-data", power_path,
                      "custom power data, inline JSON or a file path");
    solve->add_flag("--no-normalize", no_normalize, "drop the degree-1 pinning");
    solve->add_option("--node-cap", node_cap, "search node budget");

    CLI::App* scan = app.add_subcommand("zc-scan", "solve every order of one group");
    scan->add_option("--q", q, "odd prime power")->required();
    scan->add_flag("--no-normalize", no_normalize, "drop the degree-1 pinning");
    scan->add_option("--node-cap", node_cap, "search node budget");

    CLI::App* verify = app.add_subcommand("verify", "batch scan over several groups");
    verify->add_option("--q", q_list, "odd prime powers")->required();
    verify->add_flag("--no-normalize", no_normalize, "drop the degree-1 pinning");
    verify->add_option("--node-cap", node_cap, "search node budget");

    CLI::App* prop41 = app.add_subcommand("prop41", "2-power order instance for one tower height");
    prop41->add_option("--r", r, "tower height, order 2^r")->required();
    prop41->add_option("--node-cap", node_cap, "search node budget");

    CLI::App* cases = app.add_subcommand("cases", "coefficient-gap case exclusion");
    cases->add_option("--n", n, "unit order (omit for the uniform degree-2 scan)");
    cases->add_option("--d", d, "disagreement degree")->required();
    cases->add_option("--limit", limit, "order bound for the uniform scan")
        ->capture_default_str();

    CLI::App* identities = app.add_subcommand("identities", "closed-form checks at order 2^r");
    identities->add_option("--r", r, "tower height")->required();
    identities->add_option("--trials", trials, "random vectors per linearity check")
        ->capture_default_str();
    identities->add_option("--seed", seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (node_cap < 0) node_cap = env_node_cap();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    char* rendered = nullptr;
    int verdict = 0;
    zchelp_status st = ZCHELP_OK;

    if (basis->parsed()) {
        st = zchelp_render_basis(n, format.c_str(), &rendered);
    } else if (expand->parsed()) {
        st = zchelp_render_expand(n, i, format.c_str(), &rendered);
    } else if (classes->parsed()) {
        st = zchelp_render_classes(q, format.c_str(), &rendered);
    } else if (solve->parsed()) {
        std::string power_json;
        if (mode == "custom") {
            if (power_path.empty()) {
                std::cerr << "error: custom mode requires --power-data\n";
                return kExitUsage;
            }
            if (!load_power_data(power_path, power_json)) {
                std::cerr << "error: cannot read " << power_path << "\n";
                return kExitUsage;
            }
        } else if (!power_path.empty()) {
            std::cerr << "error: --power-data requires --mode custom\n";
            return kExitUsage;
        }
        zchelp_solve_opts opts{};
        opts.q = q;
        opts.n = n;
        opts.max_char = max_char;
        opts.normalize = no_normalize ? 0 : 1;
        opts.node_cap = node_cap;
        opts.power_json = power_json.empty() ? nullptr : power_json.c_str();
        zchelp_report* report = nullptr;
        st = zchelp_solve(&opts, &report);
        if (st == ZCHELP_OK) {
            st = zchelp_report_render(report, format.c_str(), &rendered);
            verdict = zchelp_report_exit_code(report);
            zchelp_report_free(report);
        }
    } else if (scan->parsed()) {
        st = zchelp_render_scan(q, no_normalize ? 0 : 1, node_cap,
                                format.c_str(), &rendered, &verdict);
    } else if (verify->parsed()) {
        st = zchelp_render_verify(q_list.data(),
                                  static_cast<int64_t>(q_list.size()),
                                  no_normalize ? 0 : 1, node_cap,
                                  format.c_str(), &rendered, &verdict);
    } else if (prop41->parsed()) {
        st = zchelp_render_prop41(r, node_cap, format.c_str(), &rendered, &verdict);
    } else if (cases->parsed()) {
        if (cases->count("--n") > 0) {
            st = zchelp_render_case(n, d, format.c_str(), &rendered, &verdict);
        } else if (d == 2) {
            st = zchelp_render_dual_scan(limit, format.c_str(), &rendered, &verdict);
        } else {
            std::cerr << "error: the uniform scan is only defined for --d 2\n";
            return kExitUsage;
        }
    } else if (identities->parsed()) {
        st = zchelp_render_identities(r, trials, seed, format.c_str(), &rendered,
                                      &verdict);
    }

    return emit(st, rendered, verdict, output_path);
}
