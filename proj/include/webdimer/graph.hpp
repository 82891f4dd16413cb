#pragma once

#include <string>
#include <vector>

#include "webdimer/multipoly.hpp"

namespace webdimer {

struct Vertex {
    std::string id;
    bool black = true;
    int boundary = 0;  // 0 = interior, else boundary index in 1..n
};

struct Edge {
    std::string id;
    int u = -1, v = -1;  // vertex indices
};

// Planar bipartite graph in the disk. Planarity is combinatorial: each vertex
// carries the counterclockwise cyclic order of its incident edges, and the
// boundary vertices are numbered 1..n counterclockwise around the disk.
struct PlanarBipartiteGraph {
    int n = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;  // per vertex, ccw incident edge indices

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    int other_end(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
    bool interior(int v) const { return vertices[v].boundary == 0; }
    int boundary_vertex(int i) const;  // vertex index carrying boundary index i
    std::vector<std::vector<int>> incidence() const;

    std::vector<std::string> validate() const;
    int excedance() const;
    // V - E + F per connected component via the rotation system; all must be 2.
    bool euler_consistent() const;
};

struct Network {
    PlanarBipartiteGraph g;
    std::vector<MultiPoly> weights;  // per edge, nonzero

    std::vector<std::string> validate() const;
};

struct Degree {
    std::vector<int> lambda;
    // 0 <= lambda_i <= r and sum = k*r
    static bool valid(const std::vector<int>& lambda, int r, int k);
};

// Assembles a graph from vertices placed at explicit coordinates; rotations
// are computed from the angles of incident edges.
struct GraphBuilder {
    struct V {
        std::string id;
        bool black;
        int boundary;
        double x, y;
    };
    std::vector<V> vs;
    std::vector<Edge> es;
    std::vector<std::string> edge_ids;
    std::vector<std::pair<std::string, std::string>> edge_ends;
    std::vector<MultiPoly> ws;

    void vertex(const std::string& id, bool black, int boundary, double x, double y);
    void edge(const std::string& id, const std::string& u, const std::string& v,
              MultiPoly w = MultiPoly::constant(1));
    PlanarBipartiteGraph graph(int n) const;
    Network network(int n) const;
};

Network parse_network(const std::string& text);
std::string serialize_network(const Network& nw);

}  // namespace webdimer
