#ifndef GWALK_GRAPH_HPP
#define GWALK_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gwalk {

/// Finite simple graph stored as a symmetric arc set. Every edge e yields
/// the arc pair (2e, 2e+1), so the arc involution is id XOR 1 and arc ids
/// are dense in [0, 2|E|).
class Graph {
public:
    /// Builds from an undirected edge list. Rejects self-loops, parallel
    /// edges and out-of-range endpoints.
    static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(origin_.size() / 2); }
    int arc_count() const { return static_cast<int>(origin_.size()); }

    int origin(int arc) const { return origin_[arc]; }
    int terminus(int arc) const { return origin_[arc ^ 1]; }
    static int inverse(int arc) { return arc ^ 1; }

    int degree(int vertex) const { return static_cast<int>(out_arcs_[vertex].size()); }
    /// Arcs a with origin(a) == vertex.
    const std::vector<int>& out_arcs(int vertex) const { return out_arcs_[vertex]; }

    bool has_edge(int u, int v) const;
    /// Canonical undirected edge list (u < v), sorted; used by encoders
    /// and for structural equality in tests.
    std::vector<std::pair<int, int>> edge_list() const;

private:
    Graph() = default;
    int vertex_count_ = 0;
    std::vector<int> origin_;                 // origin_[arc]; terminus via arc^1
    std::vector<std::vector<int>> out_arcs_;  // per-vertex outgoing arcs
};

/// Degree, girth and diameter summary. girth/diameter are empty when
/// infinite (forest resp. disconnected graph).
struct GraphReport {
    int degree_min = 0;
    int degree_max = 0;
    bool is_regular = false;
    std::optional<int> regularity_k;
    std::optional<int> girth;
    std::optional<int> diameter;

    bool operator==(const GraphReport&) const = default;
};

/// Exact girth (all-roots BFS), regularity and diameter.
GraphReport analyze(const Graph& g);

/// "u: v1 v2 ..." lines, 0-based ids; symmetric closure is applied, so an
/// edge may be listed from either or both endpoints.
Graph parse_adjlist(const std::string& text);

/// Standard graph6 ASCII encoding (header N(n), then the upper triangle,
/// 6 bits per byte, offset 63).
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

/// LCF notation "[j1,...,jm]^r": Hamiltonian cycle on m*r vertices plus
/// the chord i -> i + j(i mod m). Yields a cubic graph or a parse error.
Graph parse_lcf(const std::string& spec);

/// Named fixtures: K4, C{n}, complete{m}, petersen, heawood, mcgee,
/// tutte_coxeter. Each is validated against its known report at
/// construction time.
Graph builtin(const std::string& name);

} // namespace gwalk

#endif
