#pragma once

#include "webdimer/exterior.hpp"
#include "webdimer/report.hpp"
#include "webdimer/weblike.hpp"

namespace webdimer {

enum class TagNodeKind { Boundary, Wedge, Shuffle, Pair, Source };

// Evaluation DAG of a tagged web. Port order is the sign-bearing data:
// wedge inputs and shuffle outputs are listed counterclockwise starting
// after the vertex's distinguished edge; pair inputs and source outputs are
// ordered first/second by the tag side.
struct TaggedWeb {
    int r = 0, n = 0;
    std::vector<int> lambda;
    struct Node {
        TagNodeKind kind;
        std::string id;
        int boundary = 0;
        std::vector<int> in_arcs, out_arcs;  // ordered
    };
    struct Arc {
        int from = -1, to = -1;
        int grade = 0;
    };
    std::vector<Node> nodes;
    std::vector<Arc> arcs;

    int add_node(TagNodeKind kind, const std::string& id, int boundary = 0);
    int arc_between(int from, int to, int grade);  // appends to both port lists
    std::vector<std::string> validate() const;
    std::vector<int> topo_order() const;  // throws on an oriented cycle
};

// A tagging of a weblike subgraph: directions plus tag records on edges.
// Edge direction black->white carries label m(e); white->black carries r-m(e).
struct OrientedTagging {
    const PlanarBipartiteGraph* graph = nullptr;
    int r = 0;
    std::vector<int> mult;       // weblike multiplicities
    std::vector<char> toward_v;  // per edge: directed from .u to .v?
    struct Tag {
        int edge;
        bool pair_kind;  // false = source
        bool left;       // side relative to the edge direction
    };
    std::vector<Tag> tags;
};

TaggedWeb build_tagged_web(const OrientedTagging& t);

// Perfect-orientation tagging: edges in the matching run white->black, pair
// tags sit at the boundary sinks, and any remaining oriented cycle is cut by
// a pair/source tag pair on one of its edges.
OrientedTagging tag_from_matching(const WeblikeSubgraph& w, const Matching& pi);

Rational evaluate_tagged(const TaggedWeb& web, const Label& S);

// sign(W,O): the constant with eval = sign(S) sign(W,O) a(S;W); found from
// the first label with a(S;W) > 0 and required to be +-1.
int extract_sign(const WeblikeSubgraph& w, const OrientedTagging& t);

// Verifies eval = sign(S) sign(W,O) a(S;W) over every label.
Report coherence_check(const WeblikeSubgraph& w, const OrientedTagging& t);

std::string serialize_tagged_web(const OrientedTagging& t);
// Parses into storage supplied by the caller (the graph must outlive the tagging).
OrientedTagging parse_tagged_web(const std::string& text, PlanarBipartiteGraph& storage);

}  // namespace webdimer
