#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stardecomp {

// Canonical edge: (min endpoint, max endpoint).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct MalformedGraph6 : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedSize : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VertexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct InvalidOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ScaleExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Values are immutable after construction and safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    int m = 0;

    // Rejects loops, parallel edges and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph empty(int n);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj[v]; }

    // All edges as canonical pairs, ascending.
    std::vector<Edge> edges() const;

    void check_vertex(int v) const;
};

enum class ComponentKind { IsolatedVertex, Path, Cycle, Tree, Other };

struct ComponentInfo {
    std::vector<int> vertices;
    ComponentKind kind;
    int count3 = 0;  // vertices of induced degree 3 in the component
};

struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;
};

struct Bipartition {
    std::vector<int> a;
    std::vector<int> b;
};

Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

bool is_r_regular(const Graph& g, int r);
// Degree if the graph is regular, nullopt otherwise (empty graph: 0).
std::optional<int> regularity(const Graph& g);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& s);
DeletionResult induced_subgraph(const Graph& g, const std::vector<int>& keep);

std::vector<ComponentInfo> classify_components(const Graph& g);

// True iff some cycle of length exactly k (k in {3,5,7}) passes through v.
// Simple paths only, no repeated vertices.
bool in_short_odd_cycle(const Graph& g, int v, int k);

// Deterministic 2-coloring: the smallest vertex of each component goes in a.
std::optional<Bipartition> bipartition(const Graph& g);

int vertex_connectivity(const Graph& g);

bool is_independent(const Graph& g, const std::vector<int>& xs);

// N(X) = union of open neighborhoods, sorted, duplicates removed.
std::vector<int> neighborhood(const Graph& g, const std::vector<int>& xs);

// Pairing model with rejection of loops and parallel edges; deterministic
// for fixed (n, r, seed).
Graph random_regular(int n, int r, std::uint64_t seed);
Graph random_cubic(int n, std::uint64_t seed);

}  // namespace stardecomp
