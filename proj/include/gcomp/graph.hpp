#pragma once

// Simple undirected graphs, the named families, graph gluing operations and
// the subset predicates that define compositions and bad components.

#include "gcomp/union_find.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gcomp {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// out-of-range endpoints.
    Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges))
    {
        if (n_ < 0) {
            throw std::invalid_argument("Graph: negative vertex count");
        }
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v >= n_) {
                throw std::invalid_argument("Graph: edge endpoint out of range (" + std::to_string(e.u) +
                                            "," + std::to_string(e.v) + ")");
            }
            if (e.u == e.v) {
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
            }
        }
        std::sort(edges_.begin(), edges_.end());
        if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(dup->u) + "," +
                                        std::to_string(dup->v) + ")");
        }
        neighbours_.resize(n_);
        adjacent_.assign(static_cast<std::size_t>(n_) * n_, false);
        for (const Edge& e : edges_) {
            neighbours_[e.u].push_back(e.v);
            neighbours_[e.v].push_back(e.u);
            adjacent_[index(e.u, e.v)] = true;
            adjacent_[index(e.v, e.u)] = true;
        }
        for (auto& list : neighbours_) {
            std::sort(list.begin(), list.end());
        }
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const { return neighbours_.at(v); }

    bool adjacent(Vertex a, Vertex b) const
    {
        return a >= 0 && b >= 0 && a < n_ && b < n_ && adjacent_[index(a, b)];
    }

    Graph complement() const
    {
        std::vector<Edge> edges;
        for (Vertex a = 0; a < n_; ++a) {
            for (Vertex b = a + 1; b < n_; ++b) {
                if (!adjacent(a, b)) {
                    edges.emplace_back(a, b);
                }
            }
        }
        return Graph(n_, std::move(edges));
    }

    bool is_connected() const
    {
        if (n_ <= 1) {
            return true;
        }
        UnionFind uf(n_);
        for (const Edge& e : edges_) {
            uf.unite(e.u, e.v);
        }
        return uf.components() == 1;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    std::size_t index(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> neighbours_;
    std::vector<bool> adjacent_;
};

enum class FamilyKind { path, cycle, star, complete, matching, tree, edge_list };

inline std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::star: return "star";
    case FamilyKind::complete: return "complete";
    case FamilyKind::matching: return "matching";
    case FamilyKind::tree: return "tree";
    case FamilyKind::edge_list: return "edge_list";
    }
    return "unknown";
}

inline std::optional<FamilyKind> parse_family_kind(std::string_view name)
{
    for (auto kind : {FamilyKind::path, FamilyKind::cycle, FamilyKind::star, FamilyKind::complete,
                      FamilyKind::matching, FamilyKind::tree, FamilyKind::edge_list}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

/// Declarative family instance. `n` is the vertex count for every kind except
/// matching, where it is the number of disjoint edges (2n vertices). The
/// payload holds the edges for tree and edge_list.
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 1;
    std::vector<Edge> payload;
};

/// Canonical labelings: path 0-1-..-(n-1); cycle closes (n-1)-0; star has
/// center 0; matching pairs (2i, 2i+1); complete has every pair.
inline Graph build_family(const FamilySpec& spec)
{
    const int n = spec.n;
    const auto require = [&](bool ok, const char* what) {
        if (!ok) {
            throw std::invalid_argument(std::string("build_family(") + std::string(to_string(spec.kind)) +
                                        ", " + std::to_string(n) + "): " + what);
        }
    };
    std::vector<Edge> edges;
    switch (spec.kind) {
    case FamilyKind::path:
        require(n >= 1, "path needs n >= 1");
        for (Vertex v = 0; v + 1 < n; ++v) {
            edges.emplace_back(v, v + 1);
        }
        return Graph(n, std::move(edges));
    case FamilyKind::cycle:
        require(n >= 3, "cycle needs n >= 3");
        for (Vertex v = 0; v + 1 < n; ++v) {
            edges.emplace_back(v, v + 1);
        }
        edges.emplace_back(n - 1, 0);
        return Graph(n, std::move(edges));
    case FamilyKind::star:
        require(n >= 2, "star needs n >= 2");
        for (Vertex v = 1; v < n; ++v) {
            edges.emplace_back(0, v);
        }
        return Graph(n, std::move(edges));
    case FamilyKind::complete:
        require(n >= 1, "complete needs n >= 1");
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                edges.emplace_back(a, b);
            }
        }
        return Graph(n, std::move(edges));
    case FamilyKind::matching:
        require(n >= 0, "matching needs n >= 0");
        for (Vertex i = 0; i < n; ++i) {
            edges.emplace_back(2 * i, 2 * i + 1);
        }
        return Graph(2 * n, std::move(edges));
    case FamilyKind::tree: {
        require(n >= 1, "tree needs n >= 1");
        require(spec.payload.size() == static_cast<std::size_t>(n - 1), "tree needs exactly n-1 edges");
        Graph g(n, spec.payload);
        require(g.is_connected(), "tree payload is disconnected or cyclic");
        return g;
    }
    case FamilyKind::edge_list:
        require(n >= 0, "edge_list needs n >= 0");
        return Graph(n, spec.payload);
    }
    throw std::invalid_argument("build_family: unknown family kind");
}

enum class ComposeKind { disjoint, wedge, bridge };

/// Glues two graphs. g1 keeps its labels. For disjoint and bridge, g2 is
/// shifted by |V(g1)| and bridge adds the edge a1-(n1+a2). For wedge, a2 is
/// identified with a1 and the other g2 vertices follow in order after n1.
inline Graph compose_graphs(ComposeKind kind, const Graph& g1, const Graph& g2, Vertex a1 = 0, Vertex a2 = 0)
{
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    if (kind != ComposeKind::disjoint) {
        if (a1 < 0 || a1 >= n1 || a2 < 0 || a2 >= n2) {
            throw std::invalid_argument("compose_graphs: anchor vertex out of range");
        }
    }
    std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
    if (kind == ComposeKind::wedge) {
        const auto relabel = [&](Vertex v) {
            if (v == a2) {
                return a1;
            }
            return n1 + (v < a2 ? v : v - 1);
        };
        for (const Edge& e : g2.edges()) {
            edges.emplace_back(relabel(e.u), relabel(e.v));
        }
        return Graph(n1 + n2 - 1, std::move(edges));
    }
    for (const Edge& e : g2.edges()) {
        edges.emplace_back(e.u + n1, e.v + n1);
    }
    if (kind == ComposeKind::bridge) {
        edges.emplace_back(a1, n1 + a2);
    }
    return Graph(n1 + n2, std::move(edges));
}

/// K_N with the edges of g removed; g occupies labels 0..|V(g)|-1.
inline Graph delete_from_complete(int big_n, const Graph& g)
{
    if (big_n < g.vertex_count()) {
        throw std::invalid_argument("delete_from_complete: N = " + std::to_string(big_n) +
                                    " is smaller than |V(G)| = " + std::to_string(g.vertex_count()));
    }
    std::vector<Edge> edges;
    for (Vertex a = 0; a < big_n; ++a) {
        for (Vertex b = a + 1; b < big_n; ++b) {
            if (!g.adjacent(a, b)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph(big_n, std::move(edges));
}

namespace detail {

inline void check_subset(const Graph& g, std::span<const Vertex> s, const char* who)
{
    if (s.empty()) {
        throw std::invalid_argument(std::string(who) + ": empty vertex set");
    }
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : s) {
        if (v < 0 || v >= g.vertex_count()) {
            throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) + " out of range");
        }
        if (seen[v]) {
            throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) + " repeated");
        }
        seen[v] = true;
    }
}

// Connectivity of s in g (complemented = false) or in the complement of g.
inline bool subset_connected(const Graph& g, std::span<const Vertex> s, bool complemented)
{
    UnionFind uf(static_cast<int>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            if (g.adjacent(s[a], s[b]) != complemented) {
                uf.unite(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return uf.components() == 1;
}

}  // namespace detail

/// True iff s induces a connected subgraph of g. Singletons are connected.
inline bool is_connected_subset(const Graph& g, std::span<const Vertex> s)
{
    detail::check_subset(g, s, "is_connected_subset");
    return detail::subset_connected(g, s, false);
}

/// True iff the complement of g restricted to s is disconnected, i.e. s can
/// never be a block of a composition of K_N^{-g}.
inline bool is_bad_subset(const Graph& g, std::span<const Vertex> s)
{
    detail::check_subset(g, s, "is_bad_subset");
    return !detail::subset_connected(g, s, true);
}

/// Reads the `n m` header followed by m `u v` lines. Blank lines and `#`
/// comments are skipped.
inline Graph parse_edge_list(std::istream& in)
{
    std::vector<std::vector<long long>> rows;
    std::vector<int> line_numbers;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<long long> values;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) {
                throw std::invalid_argument("edge list line " + std::to_string(line_number) +
                                            ": not an integer: '" + token + "'");
            }
            values.push_back(value);
        }
        if (values.empty()) {
            continue;
        }
        if (values.size() != 2) {
            throw std::invalid_argument("edge list line " + std::to_string(line_number) +
                                        ": expected two integers");
        }
        rows.push_back(std::move(values));
        line_numbers.push_back(line_number);
    }
    if (rows.empty()) {
        throw std::invalid_argument("edge list: missing 'n m' header");
    }
    const long long n = rows[0][0];
    const long long m = rows[0][1];
    if (n < 0 || m < 0 || n > 1 << 20) {
        throw std::invalid_argument("edge list: invalid header");
    }
    if (static_cast<long long>(rows.size()) - 1 != m) {
        throw std::invalid_argument("edge list: header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(rows.size() - 1));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const long long u = rows[i][0];
        const long long v = rows[i][1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("edge list line " + std::to_string(line_numbers[i]) +
                                        ": vertex label out of range");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open edge list file '" + path + "'");
    }
    return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

}  // namespace gcomp
