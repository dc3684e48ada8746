#pragma once

#include <string>
#include <vector>

#include "gabdyn/bilinear_space.hpp"

namespace gabdyn {

/// A Coxeter-Dynkin diagram: vertices carry self-intersections, edges
/// carry the nonzero off-diagonal intersection numbers.
struct DynkinGraph {
    struct Vertex {
        std::string id;
        std::string label;
        Rat self_intersection;
    };
    struct Edge {
        std::string source;
        std::string target;
        Rat weight;
    };

    std::string name;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

/// One vertex per retained basis element, one edge per nonzero
/// off-diagonal Gram entry; vertex and edge order follow the basis.
DynkinGraph to_graph(const BilinearSpace& space, const std::vector<BasisLabel>& drop = {});

/// Undirected DOT. Node label "<name> (<self>)"; edge label is the
/// weight, dashed exactly when the weight is negative. Byte-identical
/// across runs for identical input.
std::string emit_dot(const DynkinGraph& g);

/// JSON with keys "vertices" and "edges" in stable order; rationals are
/// rendered as exact strings.
std::string emit_json(const DynkinGraph& g);

}  // namespace gabdyn
