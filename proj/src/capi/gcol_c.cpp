#include "gcol/gcol.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "gcol/choosability.hpp"
#include "gcol/corpus.hpp"
#include "gcol/decomposition.hpp"
#include "gcol/error.hpp"
#include "gcol/graph.hpp"
#include "gcol/graph_io.hpp"
#include "gcol/harness.hpp"
#include "gcol/oracles.hpp"
#include "gcol/recolorer.hpp"
#include "gcol/strong_coloring.hpp"
#include "gcol/transversal.hpp"

struct gcol_graph {
    gcol::Graph g;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string last_error;

gcol_status fail(gcol_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

// Maps library exceptions onto status codes.
template <class F>
gcol_status wrap(F&& body) {
    try {
        last_error.clear();
        body();
        return GCOL_OK;
    } catch (const gcol::ParseError& e) {
        return fail(GCOL_ERR_PARSE, e.what());
    } catch (const gcol::InvalidArgument& e) {
        return fail(GCOL_ERR_INVALID, e.what());
    } catch (const gcol::BoundExceeded& e) {
        return fail(GCOL_ERR_BOUND, e.what());
    } catch (const gcol::HypothesisError& e) {
        return fail(GCOL_ERR_HYPOTHESIS, e.what());
    } catch (const gcol::FalsificationError& e) {
        return fail(GCOL_ERR_FALSIFIED, e.what());
    } catch (const std::exception& e) {
        return fail(GCOL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(GCOL_ERR_INTERNAL, "unknown exception");
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) throw gcol::InvalidArgument(std::string(what) + " is null");
}

json vec(const std::vector<int>& v) { return json(v); }

json coloring_json(const gcol::Coloring& c) { return vec(c.color); }

gcol::CorpusSpec parse_corpus(const std::string& text, std::uint64_t seed) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    const std::string kind = text.substr(0, text.find(':'));
    if (kind == "file") {
        gcol::CorpusSpec c;
        c.source = gcol::CorpusSpec::Source::File;
        c.path = text.size() > 5 ? text.substr(5) : "";
        return c;
    }
    while (true) {
        const auto pos = text.find(':', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    auto num = [&](std::size_t i, int fallback) {
        if (i >= parts.size() || parts[i].empty()) return fallback;
        try {
            return std::stoi(parts[i]);
        } catch (const std::exception&) {
            throw gcol::ParseError("corpus: bad number '" + parts[i] + "'");
        }
    };
    gcol::CorpusSpec c;
    c.seed = seed;
    if (kind == "exhaustive") {
        c.source = gcol::CorpusSpec::Source::Exhaustive;
        c.min_n = num(1, 1);
        c.max_n = num(2, 6);
        if (c.max_n > 10) throw gcol::InvalidArgument("exhaustive corpus: n > 10 not supported");
    } else if (kind == "random") {
        c.source = gcol::CorpusSpec::Source::Random;
        c.count = num(1, 100);
        c.min_n = num(2, 1);
        c.max_n = num(3, 8);
        c.percent = num(4, 50);
    } else if (kind == "family") {
        c.source = gcol::CorpusSpec::Source::Family;
        // family names carry their own colons (clique-union:2:8:9:1); a trailing
        // count is only read for the drawn families
        std::string rest = text.substr(7);
        const bool drawn = rest.rfind("clique-union", 0) == 0 || rest == "overlap" || rest.rfind("overlap:", 0) == 0;
        if (drawn) {
            const auto colons = std::count(rest.begin(), rest.end(), ':');
            const bool has_count = rest.rfind("overlap", 0) == 0 ? colons == 1 : colons == 5;
            if (has_count) {
                const auto pos = rest.rfind(':');
                c.count = std::stoi(rest.substr(pos + 1));
                rest = rest.substr(0, pos);
            }
        }
        c.family = rest;
    } else {
        throw gcol::ParseError("corpus: unknown source '" + kind + "'");
    }
    return c;
}

}  // namespace

extern "C" {

const char* gcol_last_error(void) { return last_error.c_str(); }

const char* gcol_status_name(gcol_status s) {
    switch (s) {
        case GCOL_OK: return "ok";
        case GCOL_ERR_PARSE: return "parse error";
        case GCOL_ERR_INVALID: return "invalid argument";
        case GCOL_ERR_BOUND: return "bound exceeded";
        case GCOL_ERR_HYPOTHESIS: return "hypothesis not met";
        case GCOL_ERR_FALSIFIED: return "falsification";
        case GCOL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void gcol_string_free(char* s) { std::free(s); }

gcol_status gcol_graph_new(int order, gcol_graph** out) {
    return wrap([&] {
        need(out, "out");
        *out = nullptr;
        if (order < 0 || order > gcol::Graph::kMaxOrder) throw gcol::InvalidArgument("order out of range");
        *out = new gcol_graph{gcol::Graph(order)};
    });
}

gcol_status gcol_graph_parse(const char* text, const char* format, gcol_graph** out) {
    return wrap([&] {
        need(text, "text");
        need(out, "out");
        *out = nullptr;
        const auto f = gcol::parse_format_name(format ? format : "graph6");
        *out = new gcol_graph{gcol::parse_graph(text, f)};
    });
}

gcol_status gcol_graph_add_edge(gcol_graph* g, int u, int v) {
    return wrap([&] {
        need(g, "graph");
        g->g.add_edge(u, v);
    });
}

void gcol_graph_free(gcol_graph* g) { delete g; }

int gcol_graph_order(const gcol_graph* g) { return g ? g->g.order() : 0; }

int gcol_graph_size(const gcol_graph* g) { return g ? g->g.size() : 0; }

gcol_status gcol_graph_to_graph6(const gcol_graph* g, char** out) {
    return wrap([&] {
        need(g, "graph");
        need(out, "out");
        *out = dup(gcol::serialize_graph6(g->g));
    });
}

gcol_status gcol_graph_named(const char* name, gcol_graph** out) {
    return wrap([&] {
        need(name, "name");
        need(out, "out");
        *out = nullptr;
        *out = new gcol_graph{gcol::named_graph(name)};
    });
}

gcol_status gcol_chromatic_number(const gcol_graph* g, int* chi, int* coloring) {
    return wrap([&] {
        need(g, "graph");
        need(chi, "chi");
        const auto r = gcol::chromatic_number(g->g);
        *chi = r.chi;
        if (coloring)
            for (int v = 0; v < g->g.order(); ++v) coloring[v] = r.certificate.color[v];
    });
}

gcol_status gcol_invariants_json(const gcol_graph* gp, char** out) {
    return wrap([&] {
        need(gp, "graph");
        need(out, "out");
        const gcol::Graph& g = gp->g;
        json j;
        j["graph6"] = gcol::serialize_graph6(g);
        j["n"] = g.order();
        j["m"] = g.size();
        j["Delta"] = g.order() ? g.max_degree() : 0;
        j["delta"] = g.order() ? g.min_degree() : 0;
        j["omega"] = gcol::clique_number(g);
        j["alpha"] = gcol::independence_number(g);
        const auto chi = gcol::chromatic_number(g);
        j["chi"] = chi.chi;
        j["coloring"] = coloring_json(chi.certificate);
        j["rho"] = g.order() ? gcol::rho(g) : 0;
        j["average_degree"] = g.order() ? gcol::to_string(gcol::average_degree(g)) : "0";
        j["vertex_critical"] = g.order() ? gcol::is_vertex_critical(g) : false;
        *out = dup(j.dump());
    });
}

gcol_status gcol_choosable_json(const gcol_graph* gp, int k, const int* demand, char** out) {
    return wrap([&] {
        need(gp, "graph");
        need(out, "out");
        const gcol::Graph& g = gp->g;
        gcol::DemandFunction f =
            demand ? gcol::DemandFunction(demand, demand + g.order()) : gcol::dk_demand(g, k);
        const auto v = gcol::is_f_choosable(g, f);
        json j;
        j["graph"] = gcol::serialize_graph6(g);
        j["lists"] = v.witness ? json(*v.witness) : json(nullptr);
        j["verdict"] = v.choosable;
        j["demand"] = f;
        if (!demand) j["k"] = k;
        j["states"] = v.states;
        j["pot_searched"] = v.pot_searched;
        *out = dup(j.dump());
    });
}

gcol_status gcol_transversal_json(const gcol_graph* gp, const char* partition, char** out) {
    return wrap([&] {
        need(gp, "graph");
        need(partition, "partition");
        need(out, "out");
        const gcol::Graph& g = gp->g;
        const auto p = gcol::parse_partition(partition, g.order());
        const auto r = gcol::find_independent_transversal(g, p);
        json j;
        j["transversal"] = r.transversal ? json(*r.transversal) : json(nullptr);
        if (r.certificate) {
            json c;
            c["blocks"] = r.certificate->blocks;
            json m = json::array();
            for (const auto& e : r.certificate->matching) m.push_back({e.u, e.v});
            c["matching"] = m;
            c["root"] = {r.certificate->root.u, r.certificate->root.v};
            c["verified"] = gcol::verify_certificate(g, p, *r.certificate);
            j["certificate"] = c;
        } else {
            j["certificate"] = nullptr;
        }
        if (r.transversal) j["verified"] = gcol::verify_transversal(g, p, *r.transversal);
        *out = dup(j.dump());
    });
}

gcol_status gcol_strong_color_json(const gcol_graph* gp, const char* partition, int r, int trace, char** out) {
    return wrap([&] {
        need(gp, "graph");
        need(partition, "partition");
        need(out, "out");
        const gcol::Graph& g = gp->g;
        const auto p = gcol::parse_partition(partition, g.order());
        if (r <= 0) r = 3 * (g.order() ? g.max_degree() : 0);
        const auto res = gcol::strong_color(g, p, r, trace != 0);
        json j;
        j["r"] = r;
        j["coloring"] = coloring_json(res.coloring);
        j["repairs"] = res.repairs;
        j["verified"] = gcol::verify_strong_coloring(g, p, r, res.coloring);
        if (trace) {
            json t = json::array();
            for (const auto& line : res.trace) t.push_back(json::parse(line));
            j["trace"] = t;
        }
        *out = dup(j.dump());
    });
}

gcol_status gcol_decompose_json(const gcol_graph* gp, int general, int k, const char* t, char** out) {
    return wrap([&] {
        need(gp, "graph");
        need(out, "out");
        const gcol::Graph& g = gp->g;
        const int delta = g.order() ? g.max_degree() : 0;
        gcol::CliqueDecomposition d;
        if (!general) {
            int ti = t ? std::atoi(t) : 0;
            if (ti <= 0) ti = static_cast<int>(gcol::ceil_of(gcol::Rational(2 * delta, 3))) + 1;
            d = gcol::decompose_k1(g, ti);
        } else {
            gcol::Rational tr;
            if (t) {
                const std::string s(t);
                const auto slash = s.find('/');
                tr = slash == std::string::npos ? gcol::Rational(std::stoll(s))
                                                : gcol::Rational(std::stoll(s.substr(0, slash)),
                                                                 std::stoll(s.substr(slash + 1)));
            } else {
                tr = gcol::threshold_U_prime(k, gcol::clique_number(g), delta);
            }
            gcol::DecompositionOptions o;
            o.assume_no_dk_choosable = true;
            d = gcol::decompose_general(g, k, tr, o);
        }
        json j = json::parse(gcol::decomposition_to_json(d));
        j["hypotheses_verified"] = d.hypotheses_verified;
        j["flags"] = d.flags;
        *out = dup(j.dump());
    });
}

gcol_status gcol_color_json(const gcol_graph* gp, int method, int k, int gamma, int trace, char** out) {
    return wrap([&] {
        need(gp, "graph");
        need(out, "out");
        const gcol::Graph& g = gp->g;
        gcol::RecolorOutcome r;
        if (method == GCOL_COLOR_DELTA_MINUS_1)
            r = gcol::color_delta_minus_1(g, k);
        else if (method == GCOL_COLOR_DELTA_MINUS_K)
            r = gcol::color_delta_minus_k(g, k < 1 ? 1 : k, gamma);
        else
            throw gcol::InvalidArgument("unknown colouring method");
        json j;
        j["colors"] = r.colors;
        j["coloring"] = r.coloring ? coloring_json(*r.coloring) : json(nullptr);
        j["hypotheses_hold"] = r.hypotheses_hold;
        j["flags"] = r.flags;
        j["fallback"] = r.fallback;
        j["stage"] = r.stage;
        if (trace) {
            json t = json::array();
            for (const auto& line : r.trace) t.push_back(json::parse(line));
            j["trace"] = t;
        }
        *out = dup(j.dump());
    });
}

void gcol_verify_options_init(gcol_verify_options* o) {
    if (!o) return;
    o->jobs = 1;
    o->max_n = 8;
    o->seed = 1;
    o->include_checks = 0;
}

int gcol_theorem_count(void) { return static_cast<int>(gcol::theorem_ids().size()); }

const char* gcol_theorem_id(int i) {
    static const std::vector<std::string> ids = gcol::theorem_ids();
    if (i < 0 || i >= static_cast<int>(ids.size())) return nullptr;
    return ids[i].c_str();
}

gcol_status gcol_verify_json(const char* theorem, const char* corpus, const gcol_verify_options* options, char** out,
                             int* alerts) {
    return wrap([&] {
        need(theorem, "theorem");
        need(out, "out");
        gcol_verify_options defaults;
        gcol_verify_options_init(&defaults);
        const gcol_verify_options& o = options ? *options : defaults;
        gcol::VerifyOptions vo;
        vo.jobs = o.jobs;
        vo.max_n = o.max_n;
        vo.seed = o.seed;
        vo.keep_checks = o.include_checks != 0;
        std::optional<gcol::CorpusSpec> spec;
        if (corpus) spec = parse_corpus(corpus, o.seed);
        const auto report = gcol::verify_theorem(theorem, spec, vo);
        if (alerts) *alerts = static_cast<int>(report.alerts.size());
        *out = dup(json::parse(gcol::report_to_json(report, vo.keep_checks)).dump());
    });
}

}  // extern "C"
