#include "gwalk/graph.hpp"
#include "gwalk/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace gwalk {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0)
        throw ParseError("negative vertex count");
    std::set<std::pair<int, int>> seen;
    Graph g;
    g.vertex_count_ = vertex_count;
    g.out_arcs_.resize(vertex_count);
    g.origin_.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw ParseError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u));
        const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw ParseError("parallel edge (" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + ")");
        const int a = static_cast<int>(g.origin_.size());
        g.origin_.push_back(u);  // arc a: u -> v
        g.origin_.push_back(v);  // arc a^1: v -> u
        g.out_arcs_[u].push_back(a);
        g.out_arcs_[v].push_back(a + 1);
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    for (int a : out_arcs_[u])
        if (terminus(a) == v)
            return true;
    return false;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count());
    for (int a = 0; a < arc_count(); a += 2)
        edges.emplace_back(std::min(origin(a), terminus(a)),
                           std::max(origin(a), terminus(a)));
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

constexpr int kInfinite = std::numeric_limits<int>::max();

// Single-source BFS; returns eccentricity (kInfinite when some vertex is
// unreachable) and the best cycle-length candidate through this root.
struct BfsResult {
    int eccentricity;
    int cycle_candidate;
};

BfsResult bfs_root(const Graph& g, int root, std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(g.vertex_count(), -1);
    parent.assign(g.vertex_count(), -1);
    std::queue<int> queue;
    dist[root] = 0;
    queue.push(root);
    int ecc = 0;
    int best_cycle = kInfinite;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop();
        for (int a : g.out_arcs(u)) {
            const int v = g.terminus(a);
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                ecc = std::max(ecc, dist[v]);
                queue.push(v);
            } else if (parent[u] != v) {
                // Non-tree edge: closes a walk through the root of length
                // dist[u] + dist[v] + 1, an upper bound on the girth that
                // is tight for roots lying on a shortest cycle.
                best_cycle = std::min(best_cycle, dist[u] + dist[v] + 1);
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] < 0)
            return {kInfinite, best_cycle};
    return {ecc, best_cycle};
}

} // namespace

GraphReport analyze(const Graph& g) {
    GraphReport report;
    const int n = g.vertex_count();
    if (n == 0)
        return report;

    report.degree_min = std::numeric_limits<int>::max();
    report.degree_max = 0;
    for (int v = 0; v < n; ++v) {
        report.degree_min = std::min(report.degree_min, g.degree(v));
        report.degree_max = std::max(report.degree_max, g.degree(v));
    }
    report.is_regular = report.degree_min == report.degree_max;
    if (report.is_regular)
        report.regularity_k = report.degree_min;

    int girth = kInfinite;
    int diameter = 0;
    std::vector<int> dist, parent;
    for (int root = 0; root < n; ++root) {
        const BfsResult r = bfs_root(g, root, dist, parent);
        girth = std::min(girth, r.cycle_candidate);
        diameter = std::max(diameter, r.eccentricity);
    }
    if (girth != kInfinite)
        report.girth = girth;
    if (diameter != kInfinite)
        report.diameter = diameter;
    return report;
}

namespace {

int parse_vertex_id(const std::string& token, int line_no) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
    return value;
}

} // namespace

Graph parse_adjlist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::set<int> headers;
    std::set<std::pair<int, int>> mentions;  // directed, to catch duplicates
    std::set<std::pair<int, int>> edges;
    std::set<int> referenced;
    int max_id = -1;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u: v1 v2 ...'");
        std::string head = line.substr(first, colon - first);
        while (!head.empty() && (head.back() == ' ' || head.back() == '\t'))
            head.pop_back();
        const int u = parse_vertex_id(head, line_no);
        if (!headers.insert(u).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate header for vertex " +
                             std::to_string(u));
        max_id = std::max(max_id, u);
        std::istringstream rest(line.substr(colon + 1));
        std::string token;
        while (rest >> token) {
            const int v = parse_vertex_id(token, line_no);
            if (v == u)
                throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                                 std::to_string(u));
            if (!mentions.insert({u, v}).second)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                                 std::to_string(u) + "-" + std::to_string(v));
            referenced.insert(v);
            max_id = std::max(max_id, v);
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    }
    if (max_id < 0)
        throw ParseError("empty adjacency list");
    for (int v : referenced)
        if (!headers.count(v))
            throw ParseError("dangling vertex id " + std::to_string(v) + " (no header line)");
    for (int v = 0; v <= max_id; ++v)
        if (!headers.count(v))
            throw ParseError("missing header line for vertex " + std::to_string(v));
    return Graph::from_edges(max_id + 1,
                             std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

namespace {

constexpr int kGraph6Offset = 63;

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    if (s.empty())
        throw ParseError("empty graph6 string");
    if (s.rfind(">>graph6<<", 0) == 0)
        s = s.substr(10);

    std::size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= s.size())
            throw ParseError("truncated graph6 header");
        const unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte out of range at position " + std::to_string(pos - 1));
        return c - kGraph6Offset;
    };

    long long n = 0;
    const int first = next_byte();
    if (first < 63) {
        n = first;
    } else {
        // 126 flags the 3-byte form; a second 126 the 6-byte form.
        if (pos < s.size() && s[pos] == '~') {
            throw ParseError("graph6 graphs with >= 2^18 vertices are not supported");
        }
        n = 0;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | next_byte();
    }
    if (n > 100000)
        throw ParseError("graph6 vertex count implausibly large");

    const long long bits_needed = n * (n - 1) / 2;
    const long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size() - pos) < bytes_needed)
        throw ParseError("truncated graph6 bitstream");
    if (static_cast<long long>(s.size() - pos) > bytes_needed)
        throw ParseError("trailing bytes after graph6 bitstream");

    std::vector<std::pair<int, int>> edges;
    long long bit_index = 0;
    int current = 0;
    int bits_left = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bits_left == 0) {
                current = next_byte();
                bits_left = 6;
            }
            const int bit = (current >> (bits_left - 1)) & 1;
            --bits_left;
            ++bit_index;
            if (bit)
                edges.emplace_back(row, col);
        }
    }
    (void)bit_index;
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kGraph6Offset));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Offset));
        out.push_back(static_cast<char>((n & 63) + kGraph6Offset));
    }
    int current = 0;
    int bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            current = (current << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(current + kGraph6Offset));
                current = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>((current << (6 - bits)) + kGraph6Offset));
    return out;
}

Graph parse_lcf(const std::string& spec) {
    const auto open = spec.find('[');
    const auto close = spec.find(']');
    const auto caret = spec.find('^');
    if (open == std::string::npos || close == std::string::npos || caret == std::string::npos ||
        open > close || close > caret)
        throw ParseError("LCF spec must look like [j1,j2,...]^r");

    std::vector<long long> jumps;
    {
        std::string body = spec.substr(open + 1, close - open - 1);
        std::istringstream in(body);
        std::string token;
        while (std::getline(in, token, ',')) {
            try {
                jumps.push_back(std::stoll(token));
            } catch (const std::exception&) {
                throw ParseError("bad LCF offset '" + token + "'");
            }
        }
    }
    if (jumps.empty())
        throw ParseError("LCF spec has no offsets");
    long long repeat = 0;
    try {
        repeat = std::stoll(spec.substr(caret + 1));
    } catch (const std::exception&) {
        throw ParseError("bad LCF exponent");
    }
    if (repeat < 1)
        throw ParseError("LCF exponent must be >= 1");

    const long long n = static_cast<long long>(jumps.size()) * repeat;
    if (n < 4 || n > 1000000)
        throw ParseError("LCF vertex count out of range");
    if (n % 2 != 0)
        throw ParseError("odd vertex count gives odd total degree");

    std::set<std::pair<int, int>> edges;
    for (long long i = 0; i < n; ++i) {
        const int u = static_cast<int>(i);
        const int v = static_cast<int>((i + 1) % n);
        edges.insert({std::min(u, v), std::max(u, v)});
    }

    std::vector<int> chord_count(n, 0);
    for (long long i = 0; i < n; ++i) {
        long long j = jumps[i % jumps.size()] % n;
        if (j < 0)
            j += n;
        if (j == 0 || j == 1 || j == n - 1)
            throw ParseError("LCF offset " + std::to_string(jumps[i % jumps.size()]) +
                             " collides with the Hamiltonian cycle");
        const int u = static_cast<int>(i);
        const int v = static_cast<int>((i + j) % n);
        const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (edges.insert(key).second) {
            ++chord_count[key.first];
            ++chord_count[key.second];
        }
    }
    for (long long v = 0; v < n; ++v)
        if (chord_count[v] != 1)
            throw ParseError("LCF chord collision at vertex " + std::to_string(v) +
                             " (offsets do not pair up)");
    Graph g = Graph::from_edges(static_cast<int>(n),
                                std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
    return g;
}

namespace {

Graph make_complete(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(m, edges);
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph make_petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, edges);
}

void assert_report(const std::string& name, const Graph& g, const GraphReport& expected) {
    const GraphReport actual = analyze(g);
    if (!(actual == expected))
        throw InvariantViolation("builtin fixture '" + name + "' failed its self-check");
}

GraphReport regular_report(int k, std::optional<int> girth, std::optional<int> diameter) {
    GraphReport r;
    r.degree_min = r.degree_max = k;
    r.is_regular = true;
    r.regularity_k = k;
    r.girth = girth;
    r.diameter = diameter;
    return r;
}

} // namespace

Graph builtin(const std::string& name) {
    if (name == "K4" || name == "k4" || name == "complete4") {
        Graph g = make_complete(4);
        assert_report(name, g, regular_report(3, 3, 1));
        return g;
    }
    if (name == "petersen") {
        Graph g = make_petersen();
        assert_report(name, g, regular_report(3, 5, 2));
        return g;
    }
    if (name == "heawood") {
        Graph g = parse_lcf("[5,-5]^7");
        assert_report(name, g, regular_report(3, 6, 3));
        return g;
    }
    if (name == "mcgee") {
        Graph g = parse_lcf("[12,7,-7]^8");
        assert_report(name, g, regular_report(3, 7, 4));
        return g;
    }
    if (name == "tutte_coxeter") {
        Graph g = parse_lcf("[-13,-9,7,-7,9,13]^5");
        assert_report(name, g, regular_report(3, 8, 4));
        return g;
    }
    if (name.rfind("C", 0) == 0 && name.size() > 1) {
        try {
            const int n = std::stoi(name.substr(1));
            if (n >= 3) {
                Graph g = make_cycle(n);
                assert_report(name, g, regular_report(2, n, n / 2));
                return g;
            }
        } catch (const std::exception&) {
        }
    }
    if (name.rfind("complete", 0) == 0 && name.size() > 8) {
        try {
            const int m = std::stoi(name.substr(8));
            if (m >= 3) {
                Graph g = make_complete(m);
                assert_report(name, g, regular_report(m - 1, 3, 1));
                return g;
            }
        } catch (const std::exception&) {
        }
    }
    throw ParseError("unknown builtin graph '" + name + "'");
}

} // namespace gwalk
