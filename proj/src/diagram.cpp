#include "gabdyn/diagram.hpp"

#include <algorithm>

#include <json.hpp>

namespace gabdyn {

DynkinGraph to_graph(const BilinearSpace& space, const std::vector<BasisLabel>& drop) {
    DynkinGraph g;
    g.name = space.name();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < space.dim(); ++i) {
        if (std::find(drop.begin(), drop.end(), space.label(i)) != drop.end()) continue;
        keep.push_back(i);
        const std::string id = space.label_text(i);
        g.vertices.push_back({id, id, space.entry(i, i)});
    }
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            const Rat& w = space.entry(keep[a], keep[b]);
            if (w == 0) continue;
            g.edges.push_back({space.label_text(keep[a]), space.label_text(keep[b]), w});
        }
    return g;
}

std::string emit_dot(const DynkinGraph& g) {
    std::string out = "graph \"" + g.name + "\" {\n";
    for (const DynkinGraph::Vertex& v : g.vertices)
        out += "  \"" + v.id + "\" [label=\"" + v.label + " (" + v.self_intersection.get_str() + ")\"];\n";
    for (const DynkinGraph::Edge& e : g.edges) {
        out += "  \"" + e.source + "\" -- \"" + e.target + "\" [label=\"" + e.weight.get_str() + "\"";
        if (e.weight < 0) out += ", style=dashed";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

std::string emit_json(const DynkinGraph& g) {
    nlohmann::ordered_json j;
    j["name"] = g.name;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const DynkinGraph::Vertex& v : g.vertices)
        j["vertices"].push_back({{"id", v.id}, {"label", v.label}, {"self_intersection", v.self_intersection.get_str()}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const DynkinGraph::Edge& e : g.edges)
        j["edges"].push_back({{"source", e.source}, {"target", e.target}, {"weight", e.weight.get_str()}});
    return j.dump(2) + "\n";
}

}  // namespace gabdyn
