#include "stardecomp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace stardecomp {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw InvalidOrder("negative order");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge endpoint out of range");
        if (u == v) throw InvalidOrder("loop rejected");
        if (!seen.insert(make_edge(u, v)).second)
            throw InvalidOrder("parallel edge rejected");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    g.m = static_cast<int>(seen.size());
    return g;
}

Graph Graph::empty(int n) { return from_edges(n, {}); }

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n) throw VertexOutOfRange("vertex out of range");
}

bool is_r_regular(const Graph& g, int r) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != r) return false;
    return true;
}

std::optional<int> regularity(const Graph& g) {
    if (g.n == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& s) {
    std::vector<char> del(g.n, 0);
    for (int v : s) {
        g.check_vertex(v);
        del[v] = 1;
    }
    DeletionResult res;
    res.old_to_new.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (del[v]) continue;
        res.old_to_new[v] = static_cast<int>(res.new_to_old.size());
        res.new_to_old.push_back(v);
    }
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges())
        if (!del[u] && !del[v])
            kept.emplace_back(res.old_to_new[u], res.old_to_new[v]);
    res.graph = Graph::from_edges(static_cast<int>(res.new_to_old.size()), kept);
    return res;
}

DeletionResult induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<char> in(g.n, 0);
    for (int v : keep) {
        g.check_vertex(v);
        in[v] = 1;
    }
    std::vector<int> drop;
    for (int v = 0; v < g.n; ++v)
        if (!in[v]) drop.push_back(v);
    return delete_vertices(g, drop);
}

std::vector<ComponentInfo> classify_components(const Graph& g) {
    std::vector<ComponentInfo> out;
    for (auto& comp : connected_components(g)) {
        ComponentInfo info;
        info.vertices = comp;
        int edges = 0, leaves = 0, deg2 = 0;
        for (int v : comp) {
            int d = g.degree(v);
            edges += d;
            if (d == 1) ++leaves;
            if (d == 2) ++deg2;
            if (d == 3) ++info.count3;
        }
        edges /= 2;
        int size = static_cast<int>(comp.size());
        if (size == 1)
            info.kind = ComponentKind::IsolatedVertex;
        else if (edges == size - 1)
            info.kind = leaves == 2 ? ComponentKind::Path : ComponentKind::Tree;
        else if (deg2 == size)
            info.kind = ComponentKind::Cycle;
        else
            info.kind = ComponentKind::Other;
        out.push_back(std::move(info));
    }
    return out;
}

namespace {

bool odd_cycle_dfs(const Graph& g, int target, int cur, int depth, int k,
                   std::vector<char>& used) {
    if (depth == k - 1)
        return std::binary_search(g.adj[cur].begin(), g.adj[cur].end(), target);
    for (int w : g.adj[cur]) {
        if (used[w] || w == target) continue;
        used[w] = 1;
        bool hit = odd_cycle_dfs(g, target, w, depth + 1, k, used);
        used[w] = 0;
        if (hit) return true;
    }
    return false;
}

}  // namespace

bool in_short_odd_cycle(const Graph& g, int v, int k) {
    g.check_vertex(v);
    if (k != 3 && k != 5 && k != 7)
        throw std::invalid_argument("cycle length must be 3, 5 or 7");
    std::vector<char> used(g.n, 0);
    used[v] = 1;
    return odd_cycle_dfs(g, v, v, 0, k, used);
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (int v = 0; v < g.n; ++v)
        (color[v] == 0 ? out.a : out.b).push_back(v);
    return out;
}

namespace {

// Max s-t flow in the vertex-split network, stopping once the value reaches
// cutoff (callers only need the minimum over many pairs).
int local_connectivity(const Graph& g, int s, int t, int cutoff) {
    int big = g.n;
    int nn = 2 * g.n;  // v_in = 2v, v_out = 2v+1
    std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
    for (int v = 0; v < g.n; ++v)
        cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = big;
        cap[2 * v + 1][2 * u] = big;
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (flow < cutoff) {
        std::vector<int> prev(nn, -1);
        std::queue<int> q;
        q.push(source);
        prev[source] = source;
        while (!q.empty() && prev[sink] == -1) {
            int u = q.front();
            q.pop();
            for (int w = 0; w < nn; ++w)
                if (prev[w] == -1 && cap[u][w] > 0) {
                    prev[w] = u;
                    q.push(w);
                }
        }
        if (prev[sink] == -1) break;
        for (int w = sink; w != source; w = prev[w]) {
            cap[prev[w]][w] -= 1;
            cap[w][prev[w]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    if (g.n <= 1) return 0;
    bool complete = true;
    for (int v = 0; v < g.n && complete; ++v)
        if (g.degree(v) != g.n - 1) complete = false;
    if (complete) return g.n - 1;
    int best = g.n - 1;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.has_edge(u, v)) continue;
            best = std::min(best, local_connectivity(g, u, v, best));
            if (best == 0) return 0;
        }
    return best;
}

bool is_independent(const Graph& g, const std::vector<int>& xs) {
    for (size_t i = 0; i < xs.size(); ++i) {
        g.check_vertex(xs[i]);
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (g.has_edge(xs[i], xs[j])) return false;
    }
    return true;
}

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& xs) {
    std::vector<char> mark(g.n, 0);
    for (int x : xs) {
        g.check_vertex(x);
        for (int w : g.adj[x]) mark[w] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

Graph random_regular(int n, int r, std::uint64_t seed) {
    if (r < 1 || n <= r || (static_cast<long long>(n) * r) % 2 != 0)
        throw InvalidOrder("no simple r-regular graph with these parameters");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<size_t>(n) * r);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < r; ++i) stubs[static_cast<size_t>(v) * r + i] = v;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        // Hand-rolled Fisher-Yates so results do not depend on the stdlib's
        // std::shuffle implementation.
        for (size_t i = stubs.size() - 1; i > 0; --i) {
            size_t j = static_cast<size_t>(rng() % (i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        std::set<Edge> edges;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !edges.insert(make_edge(u, v)).second) ok = false;
        }
        if (ok) return Graph::from_edges(n, {edges.begin(), edges.end()});
    }
    throw std::runtime_error("pairing model failed to produce a simple graph");
}

Graph random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw InvalidOrder("cubic graphs need even order >= 4");
    return random_regular(n, 3, seed);
}

}  // namespace stardecomp
