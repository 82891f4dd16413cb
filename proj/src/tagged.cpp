#include "webdimer/tagged.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace webdimer {

int TaggedWeb::add_node(TagNodeKind kind, const std::string& id, int boundary) {
    nodes.push_back({kind, id, boundary, {}, {}});
    return static_cast<int>(nodes.size()) - 1;
}

int TaggedWeb::arc_between(int from, int to, int grade) {
    arcs.push_back({from, to, grade});
    int a = static_cast<int>(arcs.size()) - 1;
    nodes[from].out_arcs.push_back(a);
    nodes[to].in_arcs.push_back(a);
    return a;
}

std::vector<std::string> TaggedWeb::validate() const {
    std::vector<std::string> bad;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const auto& nd = nodes[i];
        auto in_sum = [&] {
            int s = 0;
            for (int a : nd.in_arcs) s += arcs[a].grade;
            return s;
        };
        auto out_sum = [&] {
            int s = 0;
            for (int a : nd.out_arcs) s += arcs[a].grade;
            return s;
        };
        switch (nd.kind) {
            case TagNodeKind::Boundary:
                if (!nd.in_arcs.empty() || nd.out_arcs.size() > 1)
                    bad.push_back("boundary node " + nd.id + " is not a source");
                break;
            case TagNodeKind::Wedge:
                if (nd.out_arcs.size() != 1)
                    bad.push_back("wedge " + nd.id + " must have one output");
                else if (in_sum() != arcs[nd.out_arcs[0]].grade)
                    bad.push_back("wedge " + nd.id + " grade mismatch");
                break;
            case TagNodeKind::Shuffle:
                if (nd.in_arcs.size() != 1)
                    bad.push_back("shuffle " + nd.id + " must have one input");
                else if (out_sum() != arcs[nd.in_arcs[0]].grade)
                    bad.push_back("shuffle " + nd.id + " grade mismatch");
                break;
            case TagNodeKind::Pair:
                if (nd.in_arcs.size() != 2 || !nd.out_arcs.empty() || in_sum() != r)
                    bad.push_back("pair tag " + nd.id + " must consume complementary grades");
                break;
            case TagNodeKind::Source:
                if (nd.out_arcs.size() != 2 || !nd.in_arcs.empty() || out_sum() != r)
                    bad.push_back("source tag " + nd.id + " must emit complementary grades");
                break;
        }
    }
    return bad;
}

std::vector<int> TaggedWeb::topo_order() const {
    std::vector<int> indeg(nodes.size(), 0);
    for (const auto& a : arcs) indeg[a.to]++;
    std::vector<int> order;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (indeg[i] == 0) order.push_back(static_cast<int>(i));
    for (size_t h = 0; h < order.size(); ++h)
        for (int a : nodes[order[h]].out_arcs)
            if (--indeg[arcs[a].to] == 0) order.push_back(arcs[a].to);
    if (order.size() != nodes.size())
        throw std::domain_error("tagged web has an oriented cycle");
    return order;
}

namespace {

// tail endpoint of edge e under the tagging
int tail_of(const OrientedTagging& t, int e) {
    return t.toward_v[e] ? t.graph->edges[e].u : t.graph->edges[e].v;
}
int head_of(const OrientedTagging& t, int e) {
    return t.toward_v[e] ? t.graph->edges[e].v : t.graph->edges[e].u;
}
// directed label: black->white carries m(e), white->black carries r-m(e)
int dlabel_of(const OrientedTagging& t, int e) {
    bool tail_black = t.graph->vertices[tail_of(t, e)].black;
    return tail_black ? t.mult[e] : t.r - t.mult[e];
}

}  // namespace

TaggedWeb build_tagged_web(const OrientedTagging& t) {
    const auto& g = *t.graph;
    TaggedWeb web;
    web.r = t.r;
    web.n = g.n;
    // lambda from boundary edge multiplicities
    web.lambda.assign(g.n, 0);
    auto inc = g.incidence();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        int b = g.vertices[v].boundary;
        if (b == 0) continue;
        for (int e : inc[v]) web.lambda[b - 1] += t.mult[e];
    }

    std::map<int, OrientedTagging::Tag> pair_tag, source_tag;
    for (const auto& tag : t.tags) {
        if (t.mult[tag.edge] == 0) throw std::invalid_argument("tag on an absent edge");
        (tag.pair_kind ? pair_tag : source_tag)[tag.edge] = tag;
    }

    // vertex nodes
    std::vector<int> node_of(g.vertices.size(), -1);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        bool touched = false;
        for (int e : inc[v])
            if (t.mult[e] > 0) touched = true;
        if (!touched) continue;
        if (g.vertices[v].boundary > 0)
            node_of[v] = web.add_node(TagNodeKind::Boundary, g.vertices[v].id,
                                      g.vertices[v].boundary);
        else
            node_of[v] = web.add_node(g.vertices[v].black ? TagNodeKind::Shuffle
                                                          : TagNodeKind::Wedge,
                                      g.vertices[v].id);
    }

    // arcs per edge; remember, per (vertex, edge), which arc represents the
    // edge half at that vertex, and whether it leaves the vertex
    std::map<std::pair<int, int>, std::pair<int, bool>> half;  // (v,e) -> (arc, outgoing)
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (t.mult[e] == 0) continue;
        int ei = static_cast<int>(e);
        int tl = tail_of(t, ei), hd = head_of(t, ei);
        int a = dlabel_of(t, ei);
        bool has_pair = pair_tag.count(ei), has_source = source_tag.count(ei);
        if (!has_pair && !has_source) {
            int arc = web.arcs.size();
            web.arcs.push_back({node_of[tl], node_of[hd], a});
            half[{tl, ei}] = {arc, true};
            half[{hd, ei}] = {arc, false};
        } else if (has_pair && !has_source) {
            // both halves flow into the pair; head side carries r-a
            int P = web.add_node(TagNodeKind::Pair, "pair@" + g.edges[e].id);
            int arc_t = web.arcs.size();
            web.arcs.push_back({node_of[tl], P, a});
            int arc_h = web.arcs.size();
            web.arcs.push_back({node_of[hd], P, t.r - a});
            half[{tl, ei}] = {arc_t, true};
            half[{hd, ei}] = {arc_h, true};
            bool left = pair_tag[ei].left;
            web.nodes[P].in_arcs = left ? std::vector<int>{arc_t, arc_h}
                                        : std::vector<int>{arc_h, arc_t};
        } else if (has_pair && has_source) {
            // cap-cup cut: tail -> pair <- source -> head
            int P = web.add_node(TagNodeKind::Pair, "pair@" + g.edges[e].id);
            int Sc = web.add_node(TagNodeKind::Source, "source@" + g.edges[e].id);
            int arc_t = web.arcs.size();
            web.arcs.push_back({node_of[tl], P, a});
            int arc_m = web.arcs.size();
            web.arcs.push_back({Sc, P, t.r - a});
            int arc_h = web.arcs.size();
            web.arcs.push_back({Sc, node_of[hd], a});
            half[{tl, ei}] = {arc_t, true};
            half[{hd, ei}] = {arc_h, false};
            web.nodes[P].in_arcs = pair_tag[ei].left ? std::vector<int>{arc_t, arc_m}
                                                     : std::vector<int>{arc_m, arc_t};
            web.nodes[Sc].out_arcs = source_tag[ei].left ? std::vector<int>{arc_m, arc_h}
                                                         : std::vector<int>{arc_h, arc_m};
        } else {
            throw std::invalid_argument("source tag without a pair tag is not supported");
        }
    }

    // port lists for vertex nodes, counterclockwise after the distinguished edge
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (node_of[v] == -1) continue;
        auto& nd = web.nodes[node_of[v]];
        std::vector<int> support;
        for (int e : g.rotation[v])
            if (t.mult[e] > 0) support.push_back(e);
        if (nd.kind == TagNodeKind::Boundary) {
            if (support.size() > 1)
                throw std::invalid_argument("boundary vertex with several web edges");
            for (int e : support) {
                auto [arc, outgoing] = half.at({static_cast<int>(v), e});
                if (!outgoing)
                    throw std::invalid_argument(
                        "boundary edge directed into the boundary without a pair tag");
                nd.out_arcs = {arc};
                web.arcs[arc].from = node_of[v];
            }
            continue;
        }
        // distinguished edge: unique outgoing half for a wedge, incoming for a shuffle
        int distinguished = -1;
        for (int e : support) {
            auto [arc, outgoing] = half.at({static_cast<int>(v), e});
            (void)arc;
            bool is_dist = (nd.kind == TagNodeKind::Wedge) ? outgoing : !outgoing;
            if (is_dist) {
                if (distinguished != -1)
                    throw std::invalid_argument("vertex " + g.vertices[v].id +
                                                " mixes wedge and shuffle roles");
                distinguished = e;
            }
        }
        if (distinguished == -1)
            throw std::invalid_argument("vertex " + g.vertices[v].id +
                                        " lacks a distinguished edge");
        auto it = std::find(support.begin(), support.end(), distinguished);
        std::rotate(support.begin(), it, support.end());
        nd.in_arcs.clear();
        nd.out_arcs.clear();
        for (size_t s = 0; s < support.size(); ++s) {
            auto [arc, outgoing] = half.at({static_cast<int>(v), support[s]});
            if (outgoing)
                nd.out_arcs.push_back(arc);
            else
                nd.in_arcs.push_back(arc);
        }
    }

    auto bad = web.validate();
    if (!bad.empty()) throw std::invalid_argument("tagged web invalid: " + bad.front());
    return web;
}

OrientedTagging tag_from_matching(const WeblikeSubgraph& w, const Matching& pi) {
    const auto& g = *w.graph;
    OrientedTagging t;
    t.graph = w.graph;
    t.r = w.r;
    t.mult = w.mult;
    t.toward_v.assign(g.edges.size(), 0);
    std::vector<char> in_pi(g.edges.size(), 0);
    for (int e : pi.edges) {
        if (w.mult[e] <= 0)
            throw std::invalid_argument("matching edge not supported on the weblike subgraph");
        in_pi[e] = 1;
    }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        bool u_black = g.vertices[g.edges[e].u].black;
        // white -> black when in the matching, black -> white otherwise
        bool tail_is_u = in_pi[e] ? !u_black : u_black;
        t.toward_v[e] = tail_is_u;
    }
    // pair tags at boundary sinks
    auto inc = g.incidence();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v].boundary == 0) continue;
        for (int e : inc[v])
            if (w.mult[e] > 0 && in_pi[e]) t.tags.push_back({e, true, true});
    }
    // cut oriented cycles among untagged edges
    while (true) {
        std::vector<char> tagged(g.edges.size(), 0);
        for (const auto& tag : t.tags) tagged[tag.edge] = 1;
        // DFS cycle detection over vertices along untagged directed support edges
        std::vector<int> state(g.vertices.size(), 0);  // 0 new, 1 active, 2 done
        std::vector<std::pair<int, int>> stack;        // (vertex, incoming edge)
        int cycle_edge = -1;
        std::function<void(int)> dfs = [&](int v) {
            state[v] = 1;
            for (int e : inc[v]) {
                if (cycle_edge != -1) return;
                if (w.mult[e] == 0 || tagged[e]) continue;
                if (tail_of(t, e) != v) continue;
                int u = head_of(t, e);
                if (state[u] == 1) {
                    cycle_edge = e;
                    return;
                }
                if (state[u] == 0) dfs(u);
            }
            state[v] = 2;
        };
        for (size_t v = 0; v < g.vertices.size() && cycle_edge == -1; ++v)
            if (state[v] == 0) dfs(static_cast<int>(v));
        if (cycle_edge == -1) break;
        t.tags.push_back({cycle_edge, true, true});
        t.tags.push_back({cycle_edge, false, true});
    }
    return t;
}

Rational evaluate_tagged(const TaggedWeb& web, const Label& S) {
    if (static_cast<int>(S.size()) != web.n)
        throw std::invalid_argument("evaluate_tagged: label length != n");
    for (int i = 0; i < web.n; ++i)
        if (popcount(S[i]) != web.lambda[i])
            throw std::invalid_argument("evaluate_tagged: degree mismatch at vertex " +
                                        std::to_string(i + 1));
    auto order = web.topo_order();

    constexpr std::uint32_t UNSET = 0xffffffffu;
    std::map<std::vector<std::uint32_t>, Rational> frontier;
    frontier[std::vector<std::uint32_t>(web.arcs.size(), UNSET)] = 1;

    auto fold_wedge = [&](const std::vector<std::uint32_t>& masks) -> std::pair<bool, int> {
        std::uint32_t acc = 0;
        int sign = 1;
        for (std::uint32_t m : masks) {
            if (acc & m) return {false, 0};
            sign *= merge_sign(acc, m);
            acc |= m;
        }
        return {true, sign};
    };

    for (int ni : order) {
        const auto& nd = web.nodes[ni];
        std::map<std::vector<std::uint32_t>, Rational> next;
        for (const auto& [key, coeff] : frontier) {
            std::vector<std::uint32_t> state = key;
            switch (nd.kind) {
                case TagNodeKind::Boundary: {
                    if (!nd.out_arcs.empty()) state[nd.out_arcs[0]] = S[nd.boundary - 1];
                    auto it = next.find(state);
                    if (it == next.end())
                        next.emplace(std::move(state), coeff);
                    else
                        it->second += coeff;
                    break;
                }
                case TagNodeKind::Wedge: {
                    std::vector<std::uint32_t> ins;
                    for (int a : nd.in_arcs) {
                        ins.push_back(state[a]);
                        state[a] = UNSET;
                    }
                    auto [ok, sgn] = fold_wedge(ins);
                    if (!ok) break;
                    std::uint32_t total = 0;
                    for (std::uint32_t m : ins) total |= m;
                    state[nd.out_arcs[0]] = total;
                    auto it = next.find(state);
                    if (it == next.end())
                        next.emplace(std::move(state), coeff * sgn);
                    else {
                        it->second += coeff * sgn;
                        if (it->second == 0) next.erase(it);
                    }
                    break;
                }
                case TagNodeKind::Shuffle: {
                    std::uint32_t in = state[nd.in_arcs[0]];
                    state[nd.in_arcs[0]] = UNSET;
                    std::vector<int> grades;
                    for (int a : nd.out_arcs) grades.push_back(web.arcs[a].grade);
                    ExteriorElement x;
                    x.grade = popcount(in);
                    x.coeff[in] = 1;
                    TensorSum expansion = shuffle(x, grades);
                    for (const auto& [parts, c] : expansion.terms) {
                        std::vector<std::uint32_t> st = state;
                        for (size_t s = 0; s < parts.size(); ++s) st[nd.out_arcs[s]] = parts[s];
                        auto it = next.find(st);
                        if (it == next.end())
                            next.emplace(std::move(st), coeff * c);
                        else {
                            it->second += coeff * c;
                            if (it->second == 0) next.erase(it);
                        }
                    }
                    break;
                }
                case TagNodeKind::Pair: {
                    std::uint32_t x = state[nd.in_arcs[0]], y = state[nd.in_arcs[1]];
                    state[nd.in_arcs[0]] = UNSET;
                    state[nd.in_arcs[1]] = UNSET;
                    std::uint32_t full = (1u << web.r) - 1;
                    if ((x & y) || (x | y) != full) break;
                    int sgn = merge_sign(x, y);
                    auto it = next.find(state);
                    if (it == next.end())
                        next.emplace(std::move(state), coeff * sgn);
                    else {
                        it->second += coeff * sgn;
                        if (it->second == 0) next.erase(it);
                    }
                    break;
                }
                case TagNodeKind::Source: {
                    int g1 = web.arcs[nd.out_arcs[0]].grade;
                    int g2 = web.arcs[nd.out_arcs[1]].grade;
                    TensorSum expansion = source_tag_expand(g1, g2, web.r);
                    for (const auto& [parts, c] : expansion.terms) {
                        std::vector<std::uint32_t> st = state;
                        st[nd.out_arcs[0]] = parts[0];
                        st[nd.out_arcs[1]] = parts[1];
                        auto it = next.find(st);
                        if (it == next.end())
                            next.emplace(std::move(st), coeff * c);
                        else {
                            it->second += coeff * c;
                            if (it->second == 0) next.erase(it);
                        }
                    }
                    break;
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) return Rational(0);
    }
    Rational total(0);
    for (const auto& [key, coeff] : frontier) total += coeff;
    return total;
}

int extract_sign(const WeblikeSubgraph& w, const OrientedTagging& t) {
    auto space = LabelSpace::make(w.r, w.graph->excedance(), w.degree());
    TaggedWeb web = build_tagged_web(t);
    for (const auto& S : space->labels) {
        long long a = count_consistent_labelings(w, S);
        if (a == 0) continue;
        Rational ev = evaluate_tagged(web, S);
        Rational ratio = ev * Rational(sign_of_boundary(S)) / from_ll(a);
        if (ratio != 1 && ratio != -1)
            throw std::logic_error("extract_sign: evaluation / count is not +-1 (got " +
                                   to_string(ratio) + "); sign coherence is broken");
        return ratio == 1 ? 1 : -1;
    }
    throw std::domain_error("extract_sign: the subgraph has no consistent labelings");
}

Report coherence_check(const WeblikeSubgraph& w, const OrientedTagging& t) {
    Report rep;
    auto space = LabelSpace::make(w.r, w.graph->excedance(), w.degree());
    TaggedWeb web = build_tagged_web(t);
    int sigma = 0;
    auto counts = labeling_counts(w, *space);
    for (size_t i = 0; i < space->size(); ++i) {
        if (counts[i] == 0) continue;
        Rational ev = evaluate_tagged(web, space->labels[i]);
        Rational ratio = ev * Rational(sign_of_boundary(space->labels[i])) / from_ll(counts[i]);
        if (ratio == 1 || ratio == -1) {
            sigma = (ratio == 1) ? 1 : -1;
            break;
        }
        rep.add("coherence", false, "non-unit ratio at label " + std::to_string(i));
        return rep;
    }
    if (sigma == 0) {
        rep.add("coherence", true, "zero invariant (no consistent labelings); warning");
        return rep;
    }
    int failures = 0;
    for (size_t i = 0; i < space->size(); ++i) {
        Rational expect = from_ll(sign_of_boundary(space->labels[i]) * sigma * counts[i]);
        Rational ev = evaluate_tagged(web, space->labels[i]);
        if (ev != expect) {
            ++failures;
            if (failures <= 3)
                rep.add("coherence", false,
                        "label " + std::to_string(i) + ": eval " + to_string(ev) + " expected " +
                            to_string(expect));
        }
    }
    if (failures == 0)
        rep.add("coherence", true,
                std::to_string(space->size()) + " labels, sign(W,O) = " + std::to_string(sigma));
    else if (failures > 3)
        rep.add("coherence", false, std::to_string(failures) + " labels failed");
    return rep;
}

std::string serialize_tagged_web(const OrientedTagging& t) {
    nlohmann::json j;
    const auto& g = *t.graph;
    j["r"] = t.r;
    j["n"] = g.n;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json jv;
        jv["id"] = v.id;
        jv["color"] = v.black ? "black" : "white";
        if (v.boundary > 0)
            jv["boundary"] = v.boundary;
        else
            jv["boundary"] = nullptr;
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::json::array();
    for (size_t e = 0; e < g.edges.size(); ++e) {
        nlohmann::json je;
        je["id"] = g.edges[e].id;
        je["u"] = g.vertices[g.edges[e].u].id;
        je["v"] = g.vertices[g.edges[e].v].id;
        je["multiplicity"] = t.mult[e];
        je["direction"] = t.toward_v[e] ? "u->v" : "v->u";
        j["edges"].push_back(je);
    }
    j["rotation"] = nlohmann::json::object();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        nlohmann::json arr = nlohmann::json::array();
        for (int e : g.rotation[v]) arr.push_back(g.edges[e].id);
        j["rotation"][g.vertices[v].id] = arr;
    }
    j["tags"] = nlohmann::json::array();
    for (const auto& tag : t.tags) {
        nlohmann::json jt;
        jt["edge"] = g.edges[tag.edge].id;
        jt["kind"] = tag.pair_kind ? "pair" : "source";
        jt["side"] = tag.left ? "left" : "right";
        j["tags"].push_back(jt);
    }
    return j.dump(2);
}

OrientedTagging parse_tagged_web(const std::string& text, PlanarBipartiteGraph& storage) {
    auto j = nlohmann::json::parse(text);
    storage = PlanarBipartiteGraph{};
    storage.n = j.at("n").get<int>();
    std::map<std::string, int> vidx, eidx;
    for (const auto& jv : j.at("vertices")) {
        int b = jv.at("boundary").is_null() ? 0 : jv.at("boundary").get<int>();
        vidx[jv.at("id").get<std::string>()] = static_cast<int>(storage.vertices.size());
        storage.vertices.push_back({jv.at("id").get<std::string>(), jv.at("color") == "black", b});
    }
    OrientedTagging t;
    t.graph = &storage;
    t.r = j.at("r").get<int>();
    for (const auto& je : j.at("edges")) {
        eidx[je.at("id").get<std::string>()] = static_cast<int>(storage.edges.size());
        storage.edges.push_back({je.at("id").get<std::string>(),
                                 vidx.at(je.at("u").get<std::string>()),
                                 vidx.at(je.at("v").get<std::string>())});
        t.mult.push_back(je.at("multiplicity").get<int>());
        t.toward_v.push_back(je.at("direction") == "u->v");
    }
    storage.rotation.assign(storage.vertices.size(), {});
    for (auto it = j.at("rotation").begin(); it != j.at("rotation").end(); ++it)
        for (const auto& je : it.value())
            storage.rotation[vidx.at(it.key())].push_back(eidx.at(je.get<std::string>()));
    for (const auto& jt : j.at("tags"))
        t.tags.push_back({eidx.at(jt.at("edge").get<std::string>()), jt.at("kind") == "pair",
                          jt.at("side") == "left"});
    return t;
}

}  // namespace webdimer
