// Command-line front end. Talks to the library only through gcol.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcol/gcol.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kAlert = 1, kError = 2 };

struct GraphDeleter {
    void operator()(gcol_graph* g) const { gcol_graph_free(g); }
};
using GraphPtr = std::unique_ptr<gcol_graph, GraphDeleter>;

struct Failure {
    gcol_status status;
    std::string message;
};

void check(gcol_status s) {
    if (s != GCOL_OK) throw Failure{s, gcol_last_error()};
}

std::string take(char* s) {
    std::string out(s ? s : "");
    gcol_string_free(s);
    return out;
}

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Failure{GCOL_ERR_INVALID, "cannot open '" + path + "'"};
    return {std::istreambuf_iterator<char>(in), {}};
}

struct Globals {
    std::string format = "graph6";
    bool json = false;
    std::uint64_t seed = 1;
    int max_n = 8;
    bool trace = false;
    int jobs = 1;
};

struct GraphInput {
    std::string text;
    std::string file;
    std::string named;

    void attach(CLI::App* sub) {
        sub->add_option("graph", text, "graph in --format (graph6 by default)");
        sub->add_option("--file", file, "read the graph from a file ('-' for stdin)");
        sub->add_option("--named", named, "named fixture: M8, petersen, K<n>, C<n>, E<n>, P<n>, CP<m>");
    }

    GraphPtr load(const Globals& g) const {
        gcol_graph* out = nullptr;
        if (!named.empty()) {
            check(gcol_graph_named(named.c_str(), &out));
        } else if (!file.empty()) {
            const std::string body = slurp(file);
            check(gcol_graph_parse(body.c_str(), g.format.c_str(), &out));
        } else if (!text.empty()) {
            check(gcol_graph_parse(text.c_str(), g.format.c_str(), &out));
        } else {
            throw Failure{GCOL_ERR_INVALID, "no graph given (positional, --file or --named)"};
        }
        return GraphPtr(out);
    }
};

// Blocks separated by ';' or newlines, so "0 1;2 3" works on a command line.
std::string partition_text(const std::string& inline_text, const std::string& file) {
    std::string s = file.empty() ? inline_text : slurp(file);
    for (char& c : s)
        if (c == ';') c = '\n';
    if (s.empty()) throw Failure{GCOL_ERR_INVALID, "no partition given (--partition or --partition-file)"};
    return s;
}

std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print_human(const json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            std::cout << indent << key << ":\n";
            print_human(value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            std::cout << indent << key << ":\n";
            for (const auto& item : value) std::cout << indent << "  " << item.dump() << "\n";
        } else {
            std::cout << indent << key << ": " << scalar(value) << "\n";
        }
    }
}

void emit(const Globals& g, const std::string& raw) {
    if (g.json) {
        std::cout << raw << "\n";
        return;
    }
    print_human(json::parse(raw));
}

std::vector<int> parse_demand(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Failure{GCOL_ERR_PARSE, "bad demand entry '" + tok + "'"};
        }
    }
    return out;
}

void print_report(const json& r) {
    const auto& c = r["counts"];
    std::cout << r["theorem"].get<std::string>() << " [" << r["corpus"].get<std::string>() << "]: checked "
              << c["checked"] << ", vacuous " << c["vacuous"] << ", holds " << c["holds"] << ", skipped "
              << c["skipped"] << ", alerts " << r["alerts"].size() << "\n";
    for (const auto& n : r["notes"]) std::cout << "  note: " << n.get<std::string>() << "\n";
    for (const auto& a : r["alerts"]) std::cout << "  ALERT: " << a.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph colouring toolkit: oracles, list colouring, transversals, recolouring, verification"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "graph input format")
        ->check(CLI::IsMember({"graph6", "dimacs", "edges"}));
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "seed for random corpora and synthesised suites");
    app.add_option("--max-n", g.max_n, "largest order for exhaustive corpora");
    app.add_flag("--trace", g.trace, "include step traces");
    app.add_option("--jobs", g.jobs, "worker threads for verification")->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "invariants of one graph");
    GraphInput oracle_in;
    oracle_in.attach(oracle);

    auto* choosable = app.add_subcommand("choosable", "f- or d_k-choosability verdict");
    GraphInput choose_in;
    choose_in.attach(choosable);
    int choose_k = 0;
    std::string demand;
    choosable->add_option("-k", choose_k, "d_k demand (f(v) = d(v) - k)");
    choosable->add_option("--demand", demand, "explicit demand, comma separated, one entry per vertex");

    auto* transversal = app.add_subcommand("transversal", "independent transversal or a domination certificate");
    GraphInput trans_in;
    trans_in.attach(transversal);
    std::string trans_part, trans_part_file;
    transversal->add_option("--partition", trans_part, "blocks separated by ';', vertices by spaces");
    transversal->add_option("--partition-file", trans_part_file, "one block per line");

    auto* strong = app.add_subcommand("strong-color", "strong colouring for a vertex partition");
    GraphInput strong_in;
    strong_in.attach(strong);
    std::string strong_part, strong_part_file;
    int strong_r = 0;
    strong->add_option("--partition", strong_part, "blocks separated by ';', vertices by spaces");
    strong->add_option("--partition-file", strong_part_file, "one block per line");
    strong->add_option("-r", strong_r, "block size and colour count (default 3 Delta)");

    auto* decompose = app.add_subcommand("decompose", "dense decomposition into clique blocks");
    GraphInput dec_in;
    dec_in.attach(decompose);
    bool general = false;
    int dec_k = 1;
    std::string dec_t;
    decompose->add_flag("--general", general, "general k decomposition (default: k = 1)");
    decompose->add_option("-k", dec_k, "k for --general");
    decompose->add_option("-t", dec_t, "threshold: integer for k = 1, p/q for --general");

    auto* color = app.add_subcommand("color", "constructive (Delta-k)-colouring");
    GraphInput color_in;
    color_in.attach(color);
    std::string method = "delta-1";
    int color_k = -1, gamma = -1;
    color->add_option("--method", method, "delta-1 or delta-k")->check(CLI::IsMember({"delta-1", "delta-k"}));
    color->add_option("-k", color_k, "delta-1: the degree parameter (default Delta); delta-k: k");
    color->add_option("--gamma", gamma, "delta-k: starting Delta bound (default Delta)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string theorem;
    std::string corpus;
    bool checks = false, list = false;
    verify->add_option("theorem", theorem, "suite id or 'all'");
    verify->add_option("--corpus", corpus,
                       "exhaustive:<min>:<max>, random:<count>:<min n>:<max n>:<percent>, "
                       "family:<name>[:<count>], file:<path>");
    verify->add_flag("--checks", checks, "include every check in the JSON report");
    verify->add_flag("--list", list, "list suite ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*oracle) {
            auto graph = oracle_in.load(g);
            char* out = nullptr;
            check(gcol_invariants_json(graph.get(), &out));
            emit(g, take(out));
        } else if (*choosable) {
            auto graph = choose_in.load(g);
            std::vector<int> f;
            if (!demand.empty()) {
                f = parse_demand(demand);
                if (static_cast<int>(f.size()) != gcol_graph_order(graph.get()))
                    throw Failure{GCOL_ERR_INVALID, "demand needs one entry per vertex"};
            }
            char* out = nullptr;
            check(gcol_choosable_json(graph.get(), choose_k, demand.empty() ? nullptr : f.data(), &out));
            emit(g, take(out));
        } else if (*transversal) {
            auto graph = trans_in.load(g);
            const auto p = partition_text(trans_part, trans_part_file);
            char* out = nullptr;
            check(gcol_transversal_json(graph.get(), p.c_str(), &out));
            emit(g, take(out));
        } else if (*strong) {
            auto graph = strong_in.load(g);
            const auto p = partition_text(strong_part, strong_part_file);
            char* out = nullptr;
            check(gcol_strong_color_json(graph.get(), p.c_str(), strong_r, g.trace, &out));
            emit(g, take(out));
        } else if (*decompose) {
            auto graph = dec_in.load(g);
            char* out = nullptr;
            check(gcol_decompose_json(graph.get(), general, dec_k, dec_t.empty() ? nullptr : dec_t.c_str(), &out));
            emit(g, take(out));
        } else if (*color) {
            auto graph = color_in.load(g);
            char* out = nullptr;
            const int m = method == "delta-1" ? GCOL_COLOR_DELTA_MINUS_1 : GCOL_COLOR_DELTA_MINUS_K;
            check(gcol_color_json(graph.get(), m, color_k, gamma, g.trace, &out));
            emit(g, take(out));
        } else if (*verify) {
            if (list) {
                for (int i = 0; i < gcol_theorem_count(); ++i) std::cout << gcol_theorem_id(i) << "\n";
                return kOk;
            }
            if (theorem.empty()) throw Failure{GCOL_ERR_INVALID, "verify needs a suite id or 'all'"};
            std::vector<std::string> ids;
            if (theorem == "all")
                for (int i = 0; i < gcol_theorem_count(); ++i) ids.emplace_back(gcol_theorem_id(i));
            else
                ids.push_back(theorem);
            gcol_verify_options o;
            gcol_verify_options_init(&o);
            o.jobs = g.jobs;
            o.max_n = g.max_n;
            o.seed = g.seed;
            o.include_checks = checks;
            int total_alerts = 0;
            json reports = json::array();
            for (const auto& id : ids) {
                char* out = nullptr;
                int alerts = 0;
                check(gcol_verify_json(id.c_str(), corpus.empty() ? nullptr : corpus.c_str(), &o, &out, &alerts));
                total_alerts += alerts;
                auto r = json::parse(take(out));
                if (!g.json) print_report(r);
                reports.push_back(std::move(r));
            }
            if (g.json) std::cout << (reports.size() == 1 ? reports.front() : reports).dump() << "\n";
            return total_alerts ? kAlert : kOk;
        }
    } catch (const Failure& f) {
        std::cerr << "gcol: " << gcol_status_name(f.status) << ": " << f.message << "\n";
        return f.status == GCOL_ERR_FALSIFIED ? kAlert : kError;
    } catch (const std::exception& e) {
        std::cerr << "gcol: " << e.what() << "\n";
        return kError;
    }
    return kOk;
}
