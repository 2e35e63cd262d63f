#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/constructions.hpp"
#include "turan/lemma_search.hpp"
#include "turan/multigraph.hpp"
#include "turan/pattern_search.hpp"
#include "turan/three_graph.hpp"
#include "turan/turan_solver.hpp"

using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kIncomplete = 3 };

struct CommandResult {
    std::string command;
    std::string status = "pass";  // pass | fail | incomplete
    json payload = json::object();
};

int emit(const CommandResult& result, std::chrono::steady_clock::time_point started) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    json out;
    out["schema"] = 1;
    out["command"] = result.command;
    out["status"] = result.status;
    out["payload"] = result.payload;
    out["elapsed_ms"] = elapsed;
    std::cout << out.dump(2) << '\n';

    std::cerr << result.command << ": " << result.status << " (" << elapsed << " ms)\n";
    if (result.status == "pass") return kPass;
    if (result.status == "incomplete") return kIncomplete;
    return kFail;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw turan::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

json edges_to_json(const turan::ThreeGraph& g) {
    json edges = json::array();
    for (const turan::Triple& t : g.edges()) edges.push_back({t.u, t.v, t.w});
    return edges;
}

json multigraph_to_json(const turan::Multigraph& m) {
    json pairs = json::array();
    for (int u = 0; u < m.vertex_count(); ++u)
        for (int v = u + 1; v < m.vertex_count(); ++v)
            if (int w = m.weight(u, v); w != 0) pairs.push_back({u, v, w});
    json out;
    out["n"] = m.vertex_count();
    out["pairs"] = pairs;
    return out;
}

json colored_to_json(const turan::ColoredMultigraph& c) {
    return json::parse(turan::to_link_json_text(c));
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw turan::ParseError("bad vertex list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw turan::ParseError("empty vertex list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    auto started = std::chrono::steady_clock::now();

    CLI::App app{"Exact extremal machinery for the 3-graph F33: constructions, "
                 "freeness checks, link multigraphs, and exhaustive solvers"};
    app.require_subcommand(1);
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    app.add_option("--threads", threads, "worker cap for parallel checks");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named construction");
    std::string kind;
    construct->add_option("kind", kind, "f33|bipartite|complete|m1|m2|m3")->required();
    int construct_n = 6;
    construct->add_option("--n", construct_n, "vertex count (ignored for f33)");
    std::string out_path;
    construct->add_option("--out", out_path, "also write the text format to a file");

    // check f33-free
    auto* check = app.add_subcommand("check", "containment checks");
    auto* f33_free = check->add_subcommand("f33-free", "is the input F33-free?");
    std::string check_input;
    f33_free->add_option("--input", check_input, "edge-list file")->required();

    // link
    auto* link_cmd = app.add_subcommand("link", "colored link multigraph of a vertex set");
    std::string link_input, link_set;
    link_cmd->add_option("--input", link_input, "edge-list file")->required();
    link_cmd->add_option("--set", link_set, "comma-separated apex vertices")->required();

    // lemma-max
    auto* lemma = app.add_subcommand("lemma-max", "exhaustive multigraph bound");
    int lemma_n = 0;
    lemma->add_option("--n", lemma_n, "vertex count")->required();
    int pair_cap = 4, triple_cap = 10;
    lemma->add_option("--pair-cap", pair_cap, "per-pair multiplicity cap");
    lemma->add_option("--triple-cap", triple_cap, "per-triple weight-sum cap");
    std::uint64_t lemma_node_limit = 0;
    lemma->add_option("--node-limit", lemma_node_limit, "abort after this many nodes");
    bool no_symmetry = false;
    lemma->add_flag("--no-symmetry", no_symmetry, "disable canonical-prefix pruning");

    // turan
    auto* turan_cmd = app.add_subcommand("turan", "exact Turan number for F33");
    int turan_n = 0;
    turan_cmd->add_option("--n", turan_n, "vertex count")->required();
    bool enumerate_flag = false;
    turan_cmd->add_flag("--enumerate", enumerate_flag, "also list extremal isomorphism classes");
    std::uint64_t turan_node_limit = 0;
    turan_cmd->add_option("--node-limit", turan_node_limit, "abort after this many nodes");

    // identities
    auto* identities = app.add_subcommand("identities", "counting identity suite");
    long long max_n = 100;
    identities->add_option("--max-n", max_n, "largest n checked")->required();

    // t-triple
    auto* ttriple = app.add_subcommand("t-triple", "find a t-triple in the input");
    std::string ttriple_input;
    ttriple->add_option("--input", ttriple_input, "edge-list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        CommandResult result;

        if (construct->parsed()) {
            result.command = "construct";
            result.payload["kind"] = kind;
            if (kind == "f33") {
                turan::ThreeGraph g = turan::make_F33();
                result.payload["n"] = g.vertex_count();
                result.payload["e"] = g.edge_count();
                result.payload["edges"] = edges_to_json(g);
                if (!out_path.empty()) write_file(out_path, turan::to_edge_list_text(g));
            } else if (kind == "bipartite" || kind == "complete") {
                turan::ThreeGraph g = kind == "bipartite" ? turan::make_bipartite_B(construct_n)
                                                          : turan::make_complete(construct_n);
                result.payload["n"] = g.vertex_count();
                result.payload["e"] = g.edge_count();
                result.payload["edges"] = edges_to_json(g);
                if (!out_path.empty()) write_file(out_path, turan::to_edge_list_text(g));
            } else if (kind == "m1" || kind == "m2" || kind == "m3") {
                turan::Multigraph m = kind == "m1"   ? turan::make_M1(construct_n)
                                      : kind == "m2" ? turan::make_M2(construct_n)
                                                     : turan::make_M3_fourpart(construct_n);
                result.payload["n"] = m.vertex_count();
                result.payload["e"] = m.total_weight();
                result.payload["m_n"] = turan::count_m(construct_n);
                result.payload["multigraph"] = multigraph_to_json(m);
                if (!out_path.empty()) write_file(out_path, turan::to_multigraph_text(m));
            } else {
                std::cerr << "unknown construction kind: " << kind << '\n';
                return kUsage;
            }
            return emit(result, started);
        }

        if (f33_free->parsed()) {
            result.command = "check f33-free";
            turan::ThreeGraph g = turan::parse_edge_list_text(read_file(check_input));
            turan::SearchOptions opts;
            opts.deterministic = true;
            opts.threads = threads;
            auto witness = turan::contains_F33(g, opts);
            result.payload["n"] = g.vertex_count();
            result.payload["e"] = g.edge_count();
            result.payload["free"] = !witness.has_value();
            if (witness) {
                result.payload["witness"] = witness->image;
                result.status = "fail";  // exit status 1 signals containment
            }
            return emit(result, started);
        }

        if (link_cmd->parsed()) {
            result.command = "link";
            turan::ThreeGraph g = turan::parse_edge_list_text(read_file(link_input));
            std::vector<int> apexes = parse_vertex_list(link_set);
            turan::ColoredMultigraph c = turan::build_link(g, apexes);
            result.payload["link"] = colored_to_json(c);
            result.payload["e"] = c.total_multiplicity();
            if (c.vertex_count() >= 3) {
                auto ts = c.to_multigraph().max_triple_sum();
                result.payload["max_triple_sum"] = ts.sum;
                result.payload["argmax_triple"] = {ts.triple.u, ts.triple.v, ts.triple.w};
            }
            return emit(result, started);
        }

        if (lemma->parsed()) {
            result.command = "lemma-max";
            turan::LemmaSearchConfig cfg;
            cfg.n = lemma_n;
            cfg.pair_cap = pair_cap;
            cfg.triple_cap = triple_cap;
            cfg.symmetry_reduction = !no_symmetry;
            if (lemma_node_limit > 0) cfg.node_limit = lemma_node_limit;
            turan::LemmaCertificate cert = turan::max_feasible_edges(cfg);
            long long m_n = turan::count_m(lemma_n);
            result.payload["n"] = lemma_n;
            result.payload["pair_cap"] = pair_cap;
            result.payload["triple_cap"] = triple_cap;
            result.payload["optimum"] = cert.optimum;
            result.payload["m_n"] = m_n;
            result.payload["maximizer"] = multigraph_to_json(cert.maximizer);
            result.payload["nodes_explored"] = cert.nodes_explored;
            result.payload["proven_exhaustive"] = cert.proven_exhaustive;
            if (!cert.proven_exhaustive) result.status = "incomplete";
            else if (cert.optimum != m_n) result.status = "fail";
            return emit(result, started);
        }

        if (turan_cmd->parsed()) {
            result.command = "turan";
            std::optional<std::uint64_t> limit;
            if (turan_node_limit > 0) limit = turan_node_limit;
            turan::TuranCertificate cert = turan::exact_turan(turan_n, limit);
            long long b_n = turan::count_b(turan_n);
            long long expected = turan_n == 5 ? 10 : b_n;
            result.payload["n"] = cert.n;
            result.payload["optimum"] = cert.optimum;
            result.payload["b_n"] = b_n;
            result.payload["matches_theorem"] = cert.proven_exhaustive && cert.optimum == expected;
            result.payload["witness"] = edges_to_json(cert.witness);
            result.payload["proven_exhaustive"] = cert.proven_exhaustive;
            result.payload["nodes_explored"] = cert.nodes_explored;
            turan::AuditResult audit = turan::audit_certificate(cert);
            result.payload["audit_ok"] = audit.ok;
            if (enumerate_flag) {
                auto classes = turan::enumerate_extremal(turan_n);
                json arr = json::array();
                for (const auto& g : classes) arr.push_back(edges_to_json(g));
                result.payload["extremal_classes"] = arr;
            }
            if (!cert.proven_exhaustive) result.status = "incomplete";
            else if (cert.optimum != expected || !audit.ok) result.status = "fail";
            return emit(result, started);
        }

        if (identities->parsed()) {
            result.command = "identities";
            turan::IdentityReport report = turan::check_identities(max_n);
            result.payload["max_n"] = report.max_n;
            json families = json::array();
            for (const auto& f : report.families) {
                json entry;
                entry["family"] = f.family;
                entry["ok"] = f.ok;
                if (!f.ok) {
                    entry["first_failure_n"] = f.first_failure_n;
                    entry["detail"] = f.detail;
                }
                families.push_back(entry);
            }
            result.payload["families"] = families;
            result.payload["all_ok"] = report.all_ok;
            if (!report.all_ok) result.status = "fail";
            return emit(result, started);
        }

        if (ttriple->parsed()) {
            result.command = "t-triple";
            turan::ThreeGraph g = turan::parse_edge_list_text(read_file(ttriple_input));
            auto found = turan::find_t_triple(g);
            result.payload["found"] = found.has_value();
            if (found) {
                result.payload["triple"] = {found->edge.u, found->edge.v, found->edge.w};
                json witnesses = json::array();
                for (const auto& w : found->witnesses) witnesses.push_back({w[0], w[1], w[2]});
                result.payload["witnesses"] = witnesses;
            }
            return emit(result, started);
        }

        std::cerr << "no subcommand selected\n";
        return kUsage;
    } catch (const turan::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
}
