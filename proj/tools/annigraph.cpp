#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "annigraph/ag.hpp"
#include "annigraph/catalog.hpp"
#include "annigraph/genus.hpp"
#include "annigraph/ideal.hpp"
#include "annigraph/ring.hpp"
#include "annigraph/verify.hpp"

namespace {

using namespace annigraph;

int64_t default_budget_ms() {
    if (const char* env = std::getenv("ANNIGRAPH_BUDGET_MS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed ANNIGRAPH_BUDGET_MS\n";
    }
    return 60000;
}

struct Realized {
    FiniteRing R;
    IdealLattice L;
};

Realized load_ring(const std::string& spec) {
    Realized r;
    r.R = realize(parse_ring_spec(spec));
    r.L = all_ideals(r.R);
    return r;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

int cmd_ring(const std::string& spec) {
    Realized r = load_ring(spec);
    LocalStructure S = local_structure(r.R, r.L);
    std::cout << "ring: " << spec << "\n";
    std::cout << "order: " << r.R.order << "\n";
    std::cout << "ideals: " << r.L.count() << "\n";
    std::cout << "local: " << (S.is_local ? "yes" : "no") << "\n";
    std::cout << "maximal ideals (" << S.maximal_count << "):";
    for (int mi : maximal_ideals(r.L)) std::cout << " " << ideal_label(r.R, r.L, mi);
    std::cout << "\n";
    if (S.is_local && !S.is_field) {
        std::cout << "residue field size: " << S.q << "\n";
        std::cout << "nilpotency t (m^t != 0 = m^(t+1)): " << S.t << "\n";
        std::cout << "gorenstein: " << (S.gorenstein ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_ideals(const std::string& spec, bool json) {
    Realized r = load_ring(spec);
    if (json) {
        std::cout << lattice_to_json(r.R, r.L) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < r.L.count(); ++i)
        std::cout << i << ": " << ideal_label(r.R, r.L, int(i)) << " (size "
                  << r.L.ideals[i].size() << ")\n";
    return 0;
}

int cmd_graph(const std::string& spec, const std::string& kind,
              const std::string& format, const std::string& out_path) {
    Realized r = load_ring(spec);
    Graph g = kind == "zdg" ? build_zdg(r.R) : build_ag(r.R, r.L).graph;
    emit(format == "json" ? graph_to_json(g) : graph_to_dot(g), out_path);
    return 0;
}

int cmd_genus(const std::string& spec, const std::string& graph_path,
              int64_t budget_ms) {
    Graph g;
    std::vector<LowerBoundHint> hints;
    if (!graph_path.empty()) {
        std::ifstream f(graph_path);
        if (!f) throw std::runtime_error("cannot open graph file: " + graph_path);
        std::stringstream buf;
        buf << f.rdbuf();
        g = graph_from_json(buf.str());
    } else {
        Realized r = load_ring(spec);
        AGGraph ag = build_ag(r.R, r.L);
        g = ag.graph;
        auto push = [&](const SubgraphWitness& w) {
            int lb = w.shape == SubgraphWitness::Shape::Complete
                         ? genus_complete(w.m())
                         : genus_complete_bipartite(w.m(), w.n());
            if (lb <= 0) return;
            LowerBoundHint h;
            h.vertices = w.part_a;
            h.vertices.insert(h.vertices.end(), w.part_b.begin(), w.part_b.end());
            h.genus = lb;
            h.description = describe_witness(w);
            hints.push_back(std::move(h));
        };
        for (const auto& w : square_zero_clique_witnesses(r.R, r.L, ag)) push(w);
        for (const auto& w : zero_product_bipartite_witnesses(r.R, r.L, ag)) push(w);
    }
    GenusResult res = genus_exact(g, std::chrono::milliseconds(budget_ms), hints);
    std::cout << genus_result_to_json(res) << "\n";
    return res.exact() ? 0 : 1;
}

int cmd_verify(const std::string& suite, uint32_t max_order, int64_t budget_ms,
               bool json) {
    auto catalog = builtin_catalog(max_order);
    VerifyReport rep = run_suite(suite, catalog, std::chrono::milliseconds(budget_ms));
    std::cout << (json ? verify_report_to_json(rep) : verify_report_to_text(rep));
    return rep.ok() ? 0 : 1;
}

int cmd_enumerate(int genus, uint32_t q_max, uint32_t max_order, int64_t budget_ms,
                  bool json) {
    EnumerationReport rep = enumerate_by_genus(genus, q_max, max_order,
                                               std::chrono::milliseconds(budget_ms));
    std::cout << (json ? enumeration_report_to_json(rep)
                       : enumeration_report_to_text(rep));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite commutative rings, ideal lattices, annihilating-ideal "
                 "graphs, and graph genus"};
    app.require_subcommand(1);

    std::string spec, kind = "ag", format = "dot", out_path, graph_path, suite;
    bool json = false;
    int64_t budget_ms = default_budget_ms();
    uint32_t max_order = 64, q_max = 2;
    int target_genus = 0;

    auto* ring = app.add_subcommand("ring", "ring overview: order, locality, maximal ideals");
    ring->add_option("spec", spec, "ring spec, e.g. Z12 or GF(2)[x,y]/(x^2,x*y,y^2)")
        ->required();

    auto* ideals = app.add_subcommand("ideals", "list the ideal lattice");
    ideals->add_option("spec", spec)->required();
    ideals->add_flag("--json", json, "machine-readable lattice");

    auto* graph = app.add_subcommand("graph", "export the AG or zero-divisor graph");
    graph->add_option("spec", spec)->required();
    graph->add_option("--kind", kind)->check(CLI::IsMember({"ag", "zdg"}));
    graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--out", out_path, "write to file instead of stdout");

    auto* genus = app.add_subcommand("genus", "genus of AG(spec) or of a JSON graph");
    genus->add_option("spec", spec);
    genus->add_option("--graph", graph_path, "graph JSON file instead of a ring spec");
    genus->add_option("--budget-ms", budget_ms);

    auto* verify = app.add_subcommand("verify", "run a verification suite over the catalog");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"lemma21", "lemma23", "lemma28", "lemma29", "prop33",
                               "square-zero-complete", "toroidal-z2-4", "all"}));
    verify->add_option("--max-order", max_order);
    verify->add_option("--budget-ms", budget_ms);
    verify->add_flag("--json", json);

    auto* enumerate = app.add_subcommand("enumerate", "catalog rings with a given AG genus");
    enumerate->add_option("--genus", target_genus)->required();
    enumerate->add_option("--qmax", q_max);
    enumerate->add_option("--max-order", max_order);
    enumerate->add_option("--budget-ms", budget_ms);
    enumerate->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(ring)) return cmd_ring(spec);
        if (app.got_subcommand(ideals)) return cmd_ideals(spec, json);
        if (app.got_subcommand(graph)) return cmd_graph(spec, kind, format, out_path);
        if (app.got_subcommand(genus)) {
            if (spec.empty() == graph_path.empty()) {
                std::cerr << "genus needs exactly one of <spec> or --graph\n";
                return 2;
            }
            return cmd_genus(spec, graph_path, budget_ms);
        }
        if (app.got_subcommand(verify))
            return cmd_verify(suite, max_order, budget_ms, json);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(target_genus, q_max, max_order, budget_ms, json);
    } catch (const SpecParseError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
