#include "annigraph/graph.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace annigraph {

Graph Graph::complete(uint32_t n) {
    Graph g = Graph::empty(n);
    for (uint32_t u = 0; u < n; ++u) {
        g.labels[u] = std::to_string(u);
        for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph Graph::complete_bipartite(uint32_t m, uint32_t n) {
    Graph g = Graph::empty(m + n);
    for (uint32_t u = 0; u < m + n; ++u) g.labels[u] = std::to_string(u);
    for (uint32_t u = 0; u < m; ++u)
        for (uint32_t v = m; v < m + n; ++v) g.add_edge(u, v);
    return g;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (uint32_t u = 0; u < g.n; ++u) {
        out << "  v" << u << " [label=\""
            << (g.labels[u].empty() ? std::to_string(u) : g.labels[u]) << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json doc;
    doc["schema"] = 1;
    nlohmann::json verts = nlohmann::json::array();
    for (uint32_t u = 0; u < g.n; ++u) {
        nlohmann::json v;
        v["id"] = u;
        v["label"] = g.labels[u];
        verts.push_back(std::move(v));
    }
    doc["vertices"] = std::move(verts);
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc.dump(2);
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    uint32_t n = 0;
    std::vector<std::string> labels;
    const nlohmann::json& verts = doc.at("vertices");
    if (verts.is_number_unsigned()) {
        n = verts.get<uint32_t>();
        labels.resize(n);
    } else {
        n = uint32_t(verts.size());
        for (const auto& v : verts) {
            if (v.is_object())
                labels.push_back(v.value("label", std::string()));
            else
                labels.push_back(v.dump());
        }
    }
    Graph g = Graph::empty(n);
    g.labels = std::move(labels);
    for (const auto& e : doc.at("edges")) {
        uint32_t u = e.at(0).get<uint32_t>();
        uint32_t v = e.at(1).get<uint32_t>();
        if (u >= n || v >= n) throw std::runtime_error("edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

} // namespace annigraph
