#include "webdimer/moves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace webdimer {

namespace {

// Editable network representation keyed by ids; rebuilt into a Network at
// the end so indices stay consistent.
struct Assembler {
    struct V {
        std::string id;
        bool black;
        int boundary;
        std::vector<std::string> rot;  // ccw edge ids
    };
    struct E {
        std::string id;
        std::string u, v;
        MultiPoly w;
    };
    int n;
    std::vector<V> vs;
    std::vector<E> es;

    explicit Assembler(const Network& nw) : n(nw.g.n) {
        for (size_t v = 0; v < nw.g.vertices.size(); ++v) {
            V a{nw.g.vertices[v].id, nw.g.vertices[v].black, nw.g.vertices[v].boundary, {}};
            for (int e : nw.g.rotation[v]) a.rot.push_back(nw.g.edges[e].id);
            vs.push_back(std::move(a));
        }
        for (size_t e = 0; e < nw.g.edges.size(); ++e)
            es.push_back({nw.g.edges[e].id, nw.g.vertices[nw.g.edges[e].u].id,
                          nw.g.vertices[nw.g.edges[e].v].id, nw.weights[e]});
    }

    V& vertex(const std::string& id) {
        for (auto& v : vs)
            if (v.id == id) return v;
        throw std::invalid_argument("unknown vertex id: " + id);
    }
    E& edge(const std::string& id) {
        for (auto& e : es)
            if (e.id == id) return e;
        throw std::invalid_argument("unknown edge id: " + id);
    }
    bool has_edge(const std::string& id) const {
        for (const auto& e : es)
            if (e.id == id) return true;
        return false;
    }
    std::string fresh_edge_id(std::string base) {
        while (has_edge(base)) base += "~";
        return base;
    }

    void drop_edge(const std::string& id) {
        for (auto& v : vs) v.rot.erase(std::remove(v.rot.begin(), v.rot.end(), id), v.rot.end());
        es.erase(std::remove_if(es.begin(), es.end(), [&](const E& e) { return e.id == id; }),
                 es.end());
    }
    void drop_vertex(const std::string& id) {
        vs.erase(std::remove_if(vs.begin(), vs.end(), [&](const V& v) { return v.id == id; }),
                 vs.end());
    }

    Network build() const {
        Network nw;
        nw.g.n = n;
        std::map<std::string, int> vidx, eidx;
        for (const auto& v : vs) {
            vidx[v.id] = static_cast<int>(nw.g.vertices.size());
            nw.g.vertices.push_back({v.id, v.black, v.boundary});
        }
        for (const auto& e : es) {
            eidx[e.id] = static_cast<int>(nw.g.edges.size());
            nw.g.edges.push_back({e.id, vidx.at(e.u), vidx.at(e.v)});
            nw.weights.push_back(e.w);
        }
        nw.g.rotation.assign(vs.size(), {});
        for (size_t v = 0; v < vs.size(); ++v)
            for (const auto& eid : vs[v].rot) nw.g.rotation[v].push_back(eidx.at(eid));
        return nw;
    }
};

std::vector<std::string> incident_ids(const Assembler& a, const std::string& vid) {
    std::vector<std::string> out;
    for (const auto& e : a.es)
        if (e.u == vid || e.v == vid) out.push_back(e.id);
    return out;
}

Rational constant_weight(const MultiPoly& w, const std::string& where) {
    if (!w.is_constant())
        throw std::invalid_argument(where + ": symbolic weight; specialize to rationals first");
    return w.constant_value();
}

// rotate `rot` so that it starts right after `pivot`, excluding pivot itself
std::vector<std::string> after(const std::vector<std::string>& rot, const std::string& pivot) {
    auto it = std::find(rot.begin(), rot.end(), pivot);
    if (it == rot.end()) throw std::logic_error("rotation pivot missing");
    std::vector<std::string> out;
    size_t start = static_cast<size_t>(it - rot.begin());
    for (size_t i = 1; i < rot.size(); ++i) out.push_back(rot[(start + i) % rot.size()]);
    return out;
}

void gauge_at(Assembler& a, const std::string& vid, const Rational& alpha, MultiPoly& scalar) {
    for (const auto& eid : incident_ids(a, vid)) a.edge(eid).w *= MultiPoly(alpha);
    scalar *= MultiPoly(1 / alpha);
}

}  // namespace

MoveResult gauge(const Network& nw, const std::string& vertex, const Rational& alpha) {
    if (alpha == 0) throw std::invalid_argument("gauge: alpha must be nonzero");
    int v = nw.g.vertex_index(vertex);
    if (!nw.g.interior(v)) throw std::invalid_argument("gauge: vertex must be interior");
    Assembler a(nw);
    MultiPoly scalar = MultiPoly::constant(1);
    gauge_at(a, vertex, alpha, scalar);
    return {a.build(), scalar};
}

MoveResult spider_move(const Network& nw, const std::vector<std::string>& face) {
    if (face.size() != 4) throw std::invalid_argument("spider: face must list 4 vertices");
    Assembler a(nw);
    // colors around the face must alternate; rotate input so blacks sit at 0, 2
    std::vector<std::string> f = face;
    if (!a.vertex(f[0]).black) std::rotate(f.begin(), f.begin() + 1, f.end());
    for (int i = 0; i < 4; ++i) {
        const auto& v = a.vertex(f[i]);
        if (v.black != (i % 2 == 0))
            throw std::invalid_argument("spider: face colors do not alternate");
        if (v.boundary != 0) throw std::invalid_argument("spider: face vertex on the boundary");
    }
    const std::string B1 = f[0], W1 = f[1], B2 = f[2], W2 = f[3];

    auto edge_between = [&](const std::string& x, const std::string& y) -> std::string {
        std::string found;
        for (const auto& e : a.es)
            if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) {
                if (!found.empty())
                    throw std::invalid_argument("spider: parallel edges on the face; merge first");
                found = e.id;
            }
        if (found.empty())
            throw std::invalid_argument("spider: no edge between " + x + " and " + y);
        return found;
    };
    // square edges: side s1 = B1-W1, s2 = W1-B2, s3 = B2-W2, s4 = W2-B1
    std::string s1 = edge_between(B1, W1), s2 = edge_between(W1, B2);
    std::string s3 = edge_between(B2, W2), s4 = edge_between(W2, B1);

    auto leaf_of = [&](const std::string& b) -> std::string {
        auto inc = incident_ids(a, b);
        if (inc.size() != 3)
            throw std::invalid_argument("spider: black corner " + b + " must be trivalent");
        for (const auto& eid : inc)
            if (eid != s1 && eid != s2 && eid != s3 && eid != s4) return eid;
        throw std::invalid_argument("spider: black corner " + b + " has no leaf edge");
    };
    std::string leaf1 = leaf_of(B1), leaf2 = leaf_of(B2);
    auto other_of = [&](const std::string& eid, const std::string& vid) {
        const auto& e = a.edge(eid);
        return e.u == vid ? e.v : e.u;
    };
    std::string LW1 = other_of(leaf1, B1), LW2 = other_of(leaf2, B2);
    for (const auto& lw : {LW1, LW2}) {
        if (lw == W1 || lw == W2 || lw == B1 || lw == B2 || a.vertex(lw).boundary != 0)
            throw std::invalid_argument("spider: leaf neighbor unusable (on face or boundary)");
    }
    if (LW1 == LW2) throw std::invalid_argument("spider: the two leaf whites coincide");
    // the square must be a face: its two edges adjacent in each corner's rotation
    auto adjacent_in_rotation = [&](const std::string& vid, const std::string& e1,
                                    const std::string& e2) {
        const auto& rot = a.vertex(vid).rot;
        size_t m = rot.size();
        for (size_t i = 0; i < m; ++i) {
            if (rot[i] == e1 && rot[(i + 1) % m] == e2) return true;
            if (rot[i] == e2 && rot[(i + 1) % m] == e1) return true;
        }
        return false;
    };
    for (auto [vid, ea, eb] :
         {std::tuple{B1, s1, s4}, {W1, s1, s2}, {B2, s2, s3}, {W2, s3, s4}})
        if (!adjacent_in_rotation(vid, ea, eb))
            throw std::invalid_argument("spider: quadrilateral is not a face at " + vid);

    MultiPoly scalar = MultiPoly::constant(1);
    // gauge both leaf edges to weight 1
    for (auto [b, leaf] : {std::pair{B1, leaf1}, {B2, leaf2}}) {
        Rational g = constant_weight(a.edge(leaf).w, "spider leaf");
        if (g != 1) gauge_at(a, b, 1 / g, scalar);
    }
    Rational wa = constant_weight(a.edge(s1).w, "spider");  // W1-B1
    Rational wb = constant_weight(a.edge(s4).w, "spider");  // W2-B1
    Rational wc = constant_weight(a.edge(s3).w, "spider");  // W2-B2
    Rational wd = constant_weight(a.edge(s2).w, "spider");  // W1-B2
    Rational delta = wa * wc + wb * wd;
    if (delta == 0) throw std::invalid_argument("spider: ac+bd vanishes");
    scalar *= MultiPoly(delta);

    // new black vertices replacing the white corners; old whites move out
    // along fresh unit leaf edges
    std::string nb1 = "sp_" + W1, nb2 = "sp_" + W2;
    std::string nleaf1 = a.fresh_edge_id("spl_" + W1), nleaf2 = a.fresh_edge_id("spl_" + W2);
    // each old square edge moves to the antipodal position of the new square:
    // s1 = (W1,B1) -> q1 = (LW2, nb2); s2 = (W1,B2) -> q2 = (LW1, nb2)
    // s3 = (W2,B2) -> q3 = (LW1, nb1); s4 = (W2,B1) -> q4 = (LW2, nb1)
    std::string q1 = a.fresh_edge_id(s1 + "~"), q2 = a.fresh_edge_id(s2 + "~");
    std::string q3 = a.fresh_edge_id(s3 + "~"), q4 = a.fresh_edge_id(s4 + "~");

    // ccw orders captured before surgery
    auto b1_after_leaf = after(a.vertex(B1).rot, leaf1);  // B1's square edges, ccw
    auto b2_after_leaf = after(a.vertex(B2).rot, leaf2);
    auto pair_order = [&](const std::string& w, const std::string& ea, const std::string& eb) {
        const auto& rot = a.vertex(w).rot;
        size_t m = rot.size();
        for (size_t i = 0; i < m; ++i) {
            if (rot[i] == ea && rot[(i + 1) % m] == eb) return std::pair{ea, eb};
            if (rot[i] == eb && rot[(i + 1) % m] == ea) return std::pair{eb, ea};
        }
        throw std::logic_error("spider: square pair not adjacent");
    };
    auto w1_pair = pair_order(W1, s1, s2);  // W1's square edges in ccw order
    auto w2_pair = pair_order(W2, s3, s4);

    // white corners: the consecutive square pair becomes the new leaf edge
    for (auto [w, nleaf] : {std::pair{W1, nleaf1}, {W2, nleaf2}}) {
        auto& rot = a.vertex(w).rot;
        std::vector<std::string> nrot;
        bool placed = false;
        for (const auto& eid : rot) {
            if (eid == s1 || eid == s2 || eid == s3 || eid == s4) {
                if (!placed) {
                    nrot.push_back(nleaf);
                    placed = true;
                }
            } else {
                nrot.push_back(eid);
            }
        }
        rot = nrot;
    }
    // leaf whites: the old leaf slot becomes the two new square edges. Their
    // ccw order follows the old black corner's ccw square order, an old edge
    // with white corner W_x mapping to the new edge toward nb_x.
    // LW1's new edges: toward nb1 is q3, toward nb2 is q2.
    // LW2's new edges: toward nb1 is q4, toward nb2 is q1.
    auto corner_of = [&](const std::string& sq) { return (sq == s1 || sq == s2) ? W1 : W2; };
    for (auto [lw, leaf, order, to_nb1, to_nb2] :
         {std::tuple{LW1, leaf1, b1_after_leaf, q3, q2},
          std::tuple{LW2, leaf2, b2_after_leaf, q4, q1}}) {
        auto& rot = a.vertex(lw).rot;
        std::vector<std::string> nrot;
        for (const auto& eid : rot) {
            if (eid == leaf) {
                for (const auto& sq : order)
                    nrot.push_back(corner_of(sq) == W1 ? to_nb1 : to_nb2);
            } else {
                nrot.push_back(eid);
            }
        }
        rot = nrot;
    }

    // drop old structure
    for (const auto& eid : {s1, s2, s3, s4, leaf1, leaf2}) a.drop_edge(eid);
    a.drop_vertex(B1);
    a.drop_vertex(B2);

    // new edges at antipodal positions, weight w/(ac+bd)
    a.es.push_back({q1, LW2, nb2, MultiPoly(wa / delta)});
    a.es.push_back({q2, LW1, nb2, MultiPoly(wd / delta)});
    a.es.push_back({q3, LW1, nb1, MultiPoly(wc / delta)});
    a.es.push_back({q4, LW2, nb1, MultiPoly(wb / delta)});
    a.es.push_back({nleaf1, W1, nb1, MultiPoly::constant(1)});
    a.es.push_back({nleaf2, W2, nb2, MultiPoly::constant(1)});

    // new black rotations: leaf first, then the ccw order inherited from the
    // old white corner's square pair, an old edge toward B_x mapping to the
    // new edge toward LW_x. nb1: toward LW1 is q3, toward LW2 is q4;
    // nb2: toward LW1 is q2, toward LW2 is q1.
    auto black_of = [&](const std::string& sq) { return (sq == s1 || sq == s4) ? B1 : B2; };
    Assembler::V v1{nb1, true, 0, {nleaf1}};
    for (const auto& sq : {w1_pair.first, w1_pair.second})
        v1.rot.push_back(black_of(sq) == B1 ? q3 : q4);
    Assembler::V v2{nb2, true, 0, {nleaf2}};
    for (const auto& sq : {w2_pair.first, w2_pair.second})
        v2.rot.push_back(black_of(sq) == B1 ? q2 : q1);
    a.vs.push_back(std::move(v1));
    a.vs.push_back(std::move(v2));

    return {a.build(), scalar};
}

MoveResult remove_bivalent(const Network& nw, const std::string& vertex) {
    Assembler a(nw);
    int vi = nw.g.vertex_index(vertex);
    if (!nw.g.interior(vi)) throw std::invalid_argument("bivalent removal: vertex not interior");
    auto inc = incident_ids(a, vertex);
    if (inc.size() != 2) throw std::invalid_argument("bivalent removal: degree != 2");
    std::string e1 = inc[0], e2 = inc[1];
    auto other = [&](const std::string& eid) {
        const auto& e = a.edge(eid);
        return e.u == vertex ? e.v : e.u;
    };
    std::string u = other(e1), u2 = other(e2);
    if (u == u2)
        throw std::invalid_argument("bivalent removal: parallel edges; merge them first");
    bool ub = a.vertex(u).boundary != 0, u2b = a.vertex(u2).boundary != 0;
    if (ub && u2b) throw std::invalid_argument("bivalent removal: both neighbors on the boundary");
    if (u2b) {
        std::swap(u, u2);
        std::swap(e1, e2);
        std::swap(ub, u2b);
    }
    // now u2 is interior; u may be boundary
    MultiPoly scalar = MultiPoly::constant(1);
    if (ub) {
        // the contraction would hand the boundary vertex extra edges otherwise
        if (incident_ids(a, u2).size() > 2)
            throw std::invalid_argument(
                "bivalent removal: boundary-adjacent case needs far vertex of degree <= 2");
        Rational w1 = constant_weight(a.edge(e1).w, "bivalent removal");  // at boundary side
        Rational w2 = constant_weight(a.edge(e2).w, "bivalent removal");
        if (w1 != 1) gauge_at(a, vertex, 1 / w1, scalar);
        Rational rem = constant_weight(a.edge(e2).w, "bivalent removal");
        if (rem != 1) gauge_at(a, u2, 1 / rem, scalar);
    } else {
        Rational w1 = constant_weight(a.edge(e1).w, "bivalent removal");
        Rational w2 = constant_weight(a.edge(e2).w, "bivalent removal");
        if (w1 != 1) gauge_at(a, u, 1 / w1, scalar);
        if (w2 != 1) gauge_at(a, u2, 1 / w2, scalar);
    }
    // contract: merge u2 into u (u keeps id and boundary status)
    auto rot_u = after(a.vertex(u).rot, e1);
    auto rot_u2 = after(a.vertex(u2).rot, e2);
    for (auto& e : a.es) {
        if (e.u == u2) e.u = u;
        if (e.v == u2) e.v = u;
    }
    auto& mu = a.vertex(u);
    mu.rot = rot_u;
    mu.rot.insert(mu.rot.end(), rot_u2.begin(), rot_u2.end());
    a.drop_vertex(u2);
    a.drop_edge(e1);
    a.drop_edge(e2);
    a.drop_vertex(vertex);
    return {a.build(), scalar};
}

MoveResult merge_parallel(const Network& nw, const std::string& u, const std::string& v) {
    Assembler a(nw);
    std::vector<std::string> par;
    for (const auto& e : a.es)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) par.push_back(e.id);
    if (par.size() < 2) throw std::invalid_argument("merge: fewer than two parallel edges");
    auto consecutive = [&](const std::string& vid) {
        const auto& rot = a.vertex(vid).rot;
        size_t m = rot.size();
        // the parallel edges must form one cyclic block
        int runs = 0;
        for (size_t i = 0; i < m; ++i) {
            bool cur = std::count(par.begin(), par.end(), rot[i]) > 0;
            bool nxt = std::count(par.begin(), par.end(), rot[(i + 1) % m]) > 0;
            if (cur && !nxt) ++runs;
        }
        return runs <= 1;
    };
    if (!consecutive(u) || !consecutive(v))
        throw std::invalid_argument("merge: parallel edges do not bound empty bigons");
    MultiPoly sum;
    for (const auto& eid : par) sum += a.edge(eid).w;
    if (sum.is_zero()) throw std::invalid_argument("merge: weights sum to zero");
    // keep the first edge in u's rotation order
    std::string keep;
    for (const auto& eid : a.vertex(u).rot)
        if (std::count(par.begin(), par.end(), eid)) {
            keep = eid;
            break;
        }
    a.edge(keep).w = sum;
    for (const auto& eid : par)
        if (eid != keep) a.drop_edge(eid);
    return {a.build(), MultiPoly::constant(1)};
}

MoveResult remove_leaf(const Network& nw, const std::string& vertex) {
    Assembler a(nw);
    int vi = nw.g.vertex_index(vertex);
    if (!nw.g.interior(vi)) throw std::invalid_argument("leaf removal: vertex not interior");
    auto inc = incident_ids(a, vertex);
    if (inc.size() != 1) throw std::invalid_argument("leaf removal: vertex is not a leaf");
    const auto& e = a.edge(inc[0]);
    std::string u = (e.u == vertex) ? e.v : e.u;
    if (a.vertex(u).boundary != 0)
        throw std::invalid_argument("leaf removal: the leaf edge is a boundary edge");
    MultiPoly scalar = a.edge(inc[0]).w;
    std::string leaf_edge = inc[0];
    a.drop_edge(leaf_edge);
    for (const auto& eid : incident_ids(a, u)) a.drop_edge(eid);
    a.drop_vertex(u);
    a.drop_vertex(vertex);
    return {a.build(), scalar};
}

MoveResult remove_dipole(const Network& nw, const std::string& edge) {
    Assembler a(nw);
    const auto e = a.edge(edge);
    for (const auto& vid : {e.u, e.v}) {
        if (a.vertex(vid).boundary != 0)
            throw std::invalid_argument("dipole removal: endpoint on the boundary");
        if (incident_ids(a, vid).size() != 1)
            throw std::invalid_argument("dipole removal: endpoint has degree > 1");
    }
    MultiPoly scalar = e.w;
    a.drop_edge(edge);
    a.drop_vertex(e.u);
    a.drop_vertex(e.v);
    return {a.build(), scalar};
}

Report verify_move_invariance(const Network& before, const MoveResult& result) {
    Report rep;
    PluckerVector p = plucker_vector(before);
    PluckerVector q = plucker_vector(result.network);
    if (p.k != q.k || p.n != q.n) {
        rep.add("move invariance", false, "excedance or n changed");
        return rep;
    }
    int failures = 0;
    for (const auto& [I, val] : p.values) {
        MultiPoly rhs = result.scalar * q.at(I);
        if (val != rhs) {
            ++failures;
            if (failures <= 3) {
                std::string name;
                for (int x : I) name += std::to_string(x) + " ";
                rep.add("move invariance", false, "subset { " + name + "}");
            }
        }
    }
    if (failures == 0)
        rep.add("move invariance", true,
                std::to_string(p.values.size()) + " Plucker coordinates match");
    else if (failures > 3)
        rep.add("move invariance", false, std::to_string(failures) + " subsets failed");
    return rep;
}

}  // namespace webdimer
