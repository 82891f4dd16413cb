#include "webdimer/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace webdimer {

int PlanarBipartiteGraph::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex id: " + id);
}

int PlanarBipartiteGraph::edge_index(const std::string& id) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return static_cast<int>(i);
    throw std::invalid_argument("unknown edge id: " + id);
}

int PlanarBipartiteGraph::boundary_vertex(int i) const {
    for (size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].boundary == i) return static_cast<int>(v);
    throw std::invalid_argument("no vertex with boundary index " + std::to_string(i));
}

std::vector<std::vector<int>> PlanarBipartiteGraph::incidence() const {
    std::vector<std::vector<int>> inc(vertices.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        inc[edges[e].u].push_back(static_cast<int>(e));
        inc[edges[e].v].push_back(static_cast<int>(e));
    }
    return inc;
}

std::vector<std::string> PlanarBipartiteGraph::validate() const {
    std::vector<std::string> bad;
    auto inc = incidence();
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= static_cast<int>(vertices.size()) ||
            e.v >= static_cast<int>(vertices.size())) {
            bad.push_back("edge " + e.id + ": endpoint out of range");
            continue;
        }
        if (vertices[e.u].black == vertices[e.v].black)
            bad.push_back("edge " + e.id + ": joins two " +
                          (vertices[e.u].black ? std::string("black") : std::string("white")) +
                          " vertices (non-bipartite)");
    }
    std::vector<int> seen(n + 1, 0);
    for (size_t v = 0; v < vertices.size(); ++v) {
        int b = vertices[v].boundary;
        if (b < 0 || b > n) {
            bad.push_back("vertex " + vertices[v].id + ": boundary index " + std::to_string(b) +
                          " out of 1.." + std::to_string(n));
            continue;
        }
        if (b > 0) {
            if (seen[b]++) bad.push_back("boundary index " + std::to_string(b) + " repeated");
            if (!vertices[v].black)
                bad.push_back("vertex " + vertices[v].id + ": boundary vertex is white");
            if (inc[v].size() > 1)
                bad.push_back("vertex " + vertices[v].id + ": boundary vertex has " +
                              std::to_string(inc[v].size()) + " incident edges");
        }
    }
    for (int i = 1; i <= n; ++i)
        if (!seen[i]) bad.push_back("boundary index " + std::to_string(i) + " missing");
    if (rotation.size() != vertices.size()) {
        bad.push_back("rotation table size mismatch");
        return bad;
    }
    for (size_t v = 0; v < vertices.size(); ++v) {
        std::multiset<int> a(rotation[v].begin(), rotation[v].end());
        std::multiset<int> b(inc[v].begin(), inc[v].end());
        if (a != b)
            bad.push_back("vertex " + vertices[v].id +
                          ": rotation does not list incident edges exactly once");
    }
    return bad;
}

int PlanarBipartiteGraph::excedance() const {
    int white = 0, black = 0;
    for (const auto& v : vertices) {
        if (v.boundary != 0) continue;
        (v.black ? black : white)++;
    }
    return white - black;
}

bool PlanarBipartiteGraph::euler_consistent() const {
    // darts: 2*e + 0 is u->v, 2*e + 1 is v->u
    size_t E = edges.size();
    if (E == 0) return true;
    auto dart_head = [&](size_t d) { return d % 2 == 0 ? edges[d / 2].v : edges[d / 2].u; };
    // position of each edge in its endpoint's rotation
    std::map<std::pair<int, int>, int> pos;  // (vertex, edge) -> index in rotation
    for (size_t v = 0; v < rotation.size(); ++v)
        for (size_t k = 0; k < rotation[v].size(); ++k) pos[{static_cast<int>(v), rotation[v][k]}] = static_cast<int>(k);
    auto phi = [&](size_t d) -> size_t {
        int e = static_cast<int>(d / 2);
        int w = dart_head(d);
        const auto& rot = rotation[w];
        int k = pos.at({w, e});
        int e2 = rot[(k + 1) % rot.size()];
        return 2 * static_cast<size_t>(e2) + (edges[e2].u == w ? 0 : 1);
    };
    std::vector<char> used(2 * E, 0);
    long F = 0;
    for (size_t d = 0; d < 2 * E; ++d) {
        if (used[d]) continue;
        ++F;
        size_t cur = d;
        while (!used[cur]) {
            used[cur] = 1;
            cur = phi(cur);
        }
    }
    // connected components over vertices touched by edges, plus isolated vertices
    std::vector<int> comp(vertices.size(), -1);
    auto inc = incidence();
    int ncomp = 0;
    for (size_t v = 0; v < vertices.size(); ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{static_cast<int>(v)};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int e : inc[x]) {
                int y = other_end(e, x);
                if (comp[y] == -1) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
            }
        }
        ++ncomp;
    }
    // For a disjoint union on the sphere: V - E + F = 1 + ncomp
    long V = static_cast<long>(vertices.size());
    return V - static_cast<long>(E) + F == 1 + ncomp;
}

std::vector<std::string> Network::validate() const {
    auto bad = g.validate();
    if (weights.size() != g.edges.size()) {
        bad.push_back("weight count != edge count");
        return bad;
    }
    for (size_t e = 0; e < weights.size(); ++e)
        if (weights[e].is_zero()) bad.push_back("edge " + g.edges[e].id + ": zero weight");
    return bad;
}

bool Degree::valid(const std::vector<int>& lambda, int r, int k) {
    long sum = 0;
    for (int x : lambda) {
        if (x < 0 || x > r) return false;
        sum += x;
    }
    return sum == static_cast<long>(k) * r;
}

void GraphBuilder::vertex(const std::string& id, bool black, int boundary, double x, double y) {
    vs.push_back({id, black, boundary, x, y});
}

void GraphBuilder::edge(const std::string& id, const std::string& u, const std::string& v,
                        MultiPoly w) {
    edge_ids.push_back(id);
    edge_ends.push_back({u, v});
    ws.push_back(std::move(w));
}

PlanarBipartiteGraph GraphBuilder::graph(int n) const {
    PlanarBipartiteGraph g;
    g.n = n;
    std::map<std::string, int> index;
    for (const auto& v : vs) {
        if (index.count(v.id)) throw std::invalid_argument("duplicate vertex id " + v.id);
        index[v.id] = static_cast<int>(g.vertices.size());
        g.vertices.push_back({v.id, v.black, v.boundary});
    }
    for (size_t e = 0; e < edge_ids.size(); ++e) {
        auto iu = index.find(edge_ends[e].first);
        auto iv = index.find(edge_ends[e].second);
        if (iu == index.end() || iv == index.end())
            throw std::invalid_argument("edge " + edge_ids[e] + " references unknown vertex");
        g.edges.push_back({edge_ids[e], iu->second, iv->second});
    }
    g.rotation.assign(g.vertices.size(), {});
    for (size_t e = 0; e < g.edges.size(); ++e) {
        g.rotation[g.edges[e].u].push_back(static_cast<int>(e));
        g.rotation[g.edges[e].v].push_back(static_cast<int>(e));
    }
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        auto angle = [&](int e) {
            int w = g.other_end(e, static_cast<int>(v));
            double dx = vs[w].x - vs[v].x, dy = vs[w].y - vs[v].y;
            return std::atan2(dy, dx);
        };
        std::stable_sort(g.rotation[v].begin(), g.rotation[v].end(),
                         [&](int a, int b) { return angle(a) < angle(b); });
    }
    return g;
}

Network GraphBuilder::network(int n) const { return Network{graph(n), ws}; }

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& why) {
    throw std::invalid_argument("network schema violation at " + path + ": " + why);
}

}  // namespace

Network parse_network(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("network JSON parse failure: ") + e.what());
    }
    if (!j.is_object()) schema_error("$", "expected object");
    if (!j.contains("n") || !j["n"].is_number_integer()) schema_error("n", "expected integer");
    Network nw;
    nw.g.n = j["n"].get<int>();
    if (!j.contains("vertices") || !j["vertices"].is_array()) schema_error("vertices", "expected array");
    std::map<std::string, int> vidx;
    for (size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& jv = j["vertices"][i];
        std::string path = "vertices[" + std::to_string(i) + "]";
        if (!jv.is_object()) schema_error(path, "expected object");
        if (!jv.contains("id") || !jv["id"].is_string()) schema_error(path + ".id", "expected string");
        if (!jv.contains("color") || !jv["color"].is_string() ||
            (jv["color"] != "black" && jv["color"] != "white"))
            schema_error(path + ".color", "expected \"black\" or \"white\"");
        int b = 0;
        if (jv.contains("boundary") && !jv["boundary"].is_null()) {
            if (!jv["boundary"].is_number_integer())
                schema_error(path + ".boundary", "expected integer or null");
            b = jv["boundary"].get<int>();
        }
        std::string id = jv["id"].get<std::string>();
        if (vidx.count(id)) schema_error(path + ".id", "duplicate vertex id " + id);
        vidx[id] = static_cast<int>(nw.g.vertices.size());
        nw.g.vertices.push_back({id, jv["color"] == "black", b});
    }
    if (!j.contains("edges") || !j["edges"].is_array()) schema_error("edges", "expected array");
    std::map<std::string, int> eidx;
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& je = j["edges"][i];
        std::string path = "edges[" + std::to_string(i) + "]";
        if (!je.is_object()) schema_error(path, "expected object");
        for (const char* f : {"id", "u", "v", "weight"})
            if (!je.contains(f) || !je[f].is_string())
                schema_error(path + "." + f, "expected string");
        std::string id = je["id"].get<std::string>();
        if (eidx.count(id)) schema_error(path + ".id", "duplicate edge id " + id);
        auto u = vidx.find(je["u"].get<std::string>());
        auto v = vidx.find(je["v"].get<std::string>());
        if (u == vidx.end()) schema_error(path + ".u", "unknown vertex");
        if (v == vidx.end()) schema_error(path + ".v", "unknown vertex");
        eidx[id] = static_cast<int>(nw.g.edges.size());
        nw.g.edges.push_back({id, u->second, v->second});
        try {
            nw.weights.push_back(MultiPoly::parse(je["weight"].get<std::string>()));
        } catch (const std::exception& e) {
            schema_error(path + ".weight", e.what());
        }
    }
    if (!j.contains("rotation") || !j["rotation"].is_object())
        schema_error("rotation", "expected object");
    nw.g.rotation.assign(nw.g.vertices.size(), {});
    for (auto it = j["rotation"].begin(); it != j["rotation"].end(); ++it) {
        auto v = vidx.find(it.key());
        if (v == vidx.end()) schema_error("rotation." + it.key(), "unknown vertex");
        if (!it.value().is_array()) schema_error("rotation." + it.key(), "expected array");
        for (const auto& je : it.value()) {
            if (!je.is_string()) schema_error("rotation." + it.key(), "expected edge id strings");
            auto e = eidx.find(je.get<std::string>());
            if (e == eidx.end())
                schema_error("rotation." + it.key(), "unknown edge " + je.get<std::string>());
            nw.g.rotation[v->second].push_back(e->second);
        }
    }
    return nw;
}

std::string serialize_network(const Network& nw) {
    json j;
    j["n"] = nw.g.n;
    // boundary vertices first, in counterclockwise (index) order
    std::vector<int> order;
    for (int b = 1; b <= nw.g.n; ++b)
        for (size_t v = 0; v < nw.g.vertices.size(); ++v)
            if (nw.g.vertices[v].boundary == b) order.push_back(static_cast<int>(v));
    for (size_t v = 0; v < nw.g.vertices.size(); ++v)
        if (nw.g.vertices[v].boundary == 0) order.push_back(static_cast<int>(v));
    j["vertices"] = json::array();
    for (int v : order) {
        json jv;
        jv["id"] = nw.g.vertices[v].id;
        jv["color"] = nw.g.vertices[v].black ? "black" : "white";
        if (nw.g.vertices[v].boundary > 0)
            jv["boundary"] = nw.g.vertices[v].boundary;
        else
            jv["boundary"] = nullptr;
        j["vertices"].push_back(jv);
    }
    j["edges"] = json::array();
    for (size_t e = 0; e < nw.g.edges.size(); ++e) {
        json je;
        je["id"] = nw.g.edges[e].id;
        je["u"] = nw.g.vertices[nw.g.edges[e].u].id;
        je["v"] = nw.g.vertices[nw.g.edges[e].v].id;
        je["weight"] = nw.weights[e].str();
        j["edges"].push_back(je);
    }
    j["rotation"] = json::object();
    for (size_t v = 0; v < nw.g.vertices.size(); ++v) {
        json arr = json::array();
        for (int e : nw.g.rotation[v]) arr.push_back(nw.g.edges[e].id);
        j["rotation"][nw.g.vertices[v].id] = arr;
    }
    return j.dump(2);
}

}  // namespace webdimer
