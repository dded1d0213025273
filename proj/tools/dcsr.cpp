#include "dcsr/dcs_solver.hpp"
#include "dcsr/decider.hpp"
#include "dcsr/io.hpp"
#include "dcsr/obstructions.hpp"
#include "dcsr/oracle.hpp"
#include "dcsr/trail.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace dcsr;

namespace {

// exit codes
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance load(const std::string& path) { return parse_instance(slurp(path)); }

int run_decide(const std::string& file, bool trace) {
    const Instance inst = load(file);
    std::vector<TraceEntry> log;
    const Decision d = trace ? decide_with_trace(inst, log) : decide(inst);
    std::cout << serialize_decision(d);
    if (trace) std::cerr << serialize_trace(log);
    return d.yes ? kYes : kNo;
}

int run_verify(const std::string& file, const std::string& moves_file) {
    const Instance inst = load(file);
    const MoveSequence seq = parse_moves(slurp(moves_file));
    const VerifyResult r = verify_move_sequence(inst, seq);
    nlohmann::ordered_json out = {{"valid", r.ok}};
    if (!r.ok) {
        if (r.failed_step) out["step"] = *r.failed_step;
        out["reason"] = r.reason;
    }
    std::cout << out.dump() << "\n";
    return r.ok ? kYes : kNo;
}

int run_oracle(const std::string& file) {
    const Instance inst = load(file);
    const bool reachable = oracle_decide(inst);
    nlohmann::ordered_json out = {{"answer", reachable ? "yes" : "no"}};
    if (auto k = oracle_min_k(inst)) out["min_k"] = *k;
    else out["min_k"] = nullptr;
    std::cout << out.dump() << "\n";
    return reachable ? kYes : kNo;
}

int run_maxdcs(const std::string& file) {
    const Instance inst = load(file);
    const auto s = maximum_dcs(inst.graph, inst.bounds);
    if (!s) {
        std::cout << "{\"feasible\":false}\n";
        return kNo;
    }
    auto edges = s->edge_list();
    std::sort(edges.begin(), edges.end());
    const nlohmann::ordered_json out = {{"feasible", true}, {"size", s->size()}, {"edges", edges}};
    std::cout << out.dump() << "\n";
    return kYes;
}

int run_fixed(const std::string& file) {
    const Instance inst = load(file);
    std::cout << serialize_edges(m_fixed_subgraph(inst.bounds, inst.source));
    return kYes;
}

int run_decompose(const std::string& file) {
    const Instance inst = load(file);
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    if (inst.source != inst.target) {
        const Decomposition d = alternating_trail_decomposition(inst.bounds, inst.source, inst.target);
        for (std::size_t i = 0; i < d.trails.size(); ++i)
            out.push_back({{"class", to_string(classify_trail(d.trails[i], d.states[i], inst.bounds))},
                           {"vertices", d.trails[i].vertices},
                           {"edges", d.trails[i].edges}});
    }
    std::cout << out.dump() << "\n";
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconfiguration of degree-constrained subgraphs"};
    app.require_subcommand(1);
    std::string file, moves_file;
    bool trace = false;

    auto* decide_cmd = app.add_subcommand("decide", "decide reachability; exit 0 yes, 1 no, 2 error");
    decide_cmd->add_option("file", file, "instance file ('-' for stdin)")->required();
    decide_cmd->add_flag("--trace", trace, "per-trail log on stderr");

    auto* verify_cmd = app.add_subcommand("verify", "check a move sequence against an instance");
    verify_cmd->add_option("file", file, "instance file")->required();
    verify_cmd->add_option("moves", moves_file, "decision or move list")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force search (small instances only)");
    oracle_cmd->add_option("file", file, "instance file")->required();

    auto* max_cmd = app.add_subcommand("maxdcs", "a maximum subgraph within the bounds");
    max_cmd->add_option("file", file, "instance file")->required();

    auto* fixed_cmd = app.add_subcommand("fixed", "edges fixed with respect to the source");
    fixed_cmd->add_option("file", file, "instance file")->required();

    auto* dec_cmd = app.add_subcommand("decompose", "alternating trails between source and target");
    dec_cmd->add_option("file", file, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kError;
    }

    try {
        if (*decide_cmd) return run_decide(file, trace);
        if (*verify_cmd) return run_verify(file, moves_file);
        if (*oracle_cmd) return run_oracle(file);
        if (*max_cmd) return run_maxdcs(file);
        if (*fixed_cmd) return run_fixed(file);
        if (*dec_cmd) return run_decompose(file);
    } catch (const ParseError& e) {
        std::cerr << "error [" << to_string(e.code()) << "] " << e.what() << "\n";
        return kError;
    } catch (const OracleCapExceeded& e) {
        std::cerr << "error [edge-cap] " << e.what() << "\n";
        return kError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
