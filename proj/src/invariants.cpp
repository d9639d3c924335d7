#include "stardecomp/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

#include "stardecomp/star_decomp.hpp"

namespace stardecomp {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

void require_desk_scale(const Graph& g) {
    if (g.n > 64) throw ScaleExceeded("exact solvers support n <= 64");
}

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> nbr(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) nbr[v] |= bit(w);
    return nbr;
}

struct MisSearch {
    const std::vector<Mask>& nbr;
    std::vector<int> order;  // degree descending, index ascending
    std::vector<int> current;
    std::vector<int> best;

    // Greedy clique cover of the candidate set: an independent set meets each
    // clique at most once, so the cover size bounds what is still reachable.
    int cover_bound(Mask cand) const {
        std::vector<Mask> cliques;
        for (int v : order) {
            if (!(cand & bit(v))) continue;
            bool placed = false;
            for (Mask& c : cliques)
                if ((c & ~nbr[v]) == 0) {  // v adjacent to every member
                    c |= bit(v);
                    placed = true;
                    break;
                }
            if (!placed) cliques.push_back(bit(v));
        }
        return static_cast<int>(cliques.size());
    }

    void run(Mask cand) {
        if (cand == 0) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (static_cast<int>(current.size()) + cover_bound(cand) <=
            static_cast<int>(best.size()))
            return;
        int v = -1;
        for (int u : order)
            if (cand & bit(u)) {
                v = u;
                break;
            }
        current.push_back(v);
        run(cand & ~nbr[v] & ~bit(v));
        current.pop_back();
        run(cand & ~bit(v));
    }
};

}  // namespace

IndependenceWitness independence_number(const Graph& g) {
    require_desk_scale(g);
    if (g.n == 0) return {0, {}};
    auto nbr = neighbor_masks(g);
    MisSearch search{nbr, {}, {}, {}};
    search.order.resize(g.n);
    for (int v = 0; v < g.n; ++v) search.order[v] = v;
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    Mask full = g.n == 64 ? ~Mask{0} : bit(g.n) - 1;
    search.run(full);
    IndependenceWitness w;
    w.set = search.best;
    std::sort(w.set.begin(), w.set.end());
    w.size = static_cast<int>(w.set.size());
    return w;
}

namespace {

bool enumerate_rec(const Graph& g, const std::vector<Mask>& nbr, int k, int from,
                   Mask blocked, std::vector<int>& current,
                   const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<int>(current.size()) == k) return visit(current);
    if (g.n - from < k - static_cast<int>(current.size())) return true;
    for (int v = from; v < g.n; ++v) {
        if (g.n - v < k - static_cast<int>(current.size())) break;
        if (blocked & bit(v)) continue;
        current.push_back(v);
        bool keep = enumerate_rec(g, nbr, k, v + 1, blocked | nbr[v], current, visit);
        current.pop_back();
        if (!keep) return false;
    }
    return true;
}

}  // namespace

void enumerate_independent_sets(const Graph& g, int k,
                                const std::function<bool(const std::vector<int>&)>& visit) {
    require_desk_scale(g);
    if (k < 0) throw std::invalid_argument("negative set size");
    if (k > g.n) return;
    std::vector<int> current;
    if (k == 0) {
        visit(current);
        return;
    }
    auto nbr = neighbor_masks(g);
    enumerate_rec(g, nbr, k, 0, 0, current, visit);
}

std::vector<std::vector<int>> independent_sets_of_size(const Graph& g, int k) {
    std::vector<std::vector<int>> out;
    enumerate_independent_sets(g, k, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

namespace {

struct DomSearch {
    int n;
    Mask full;
    const std::vector<Mask>& closed;
    std::vector<int> current;
    std::vector<int> best;

    void run(Mask dominated) {
        if (dominated == full) {
            if (current.size() < best.size()) {
                best = current;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        int undom = std::popcount(full & ~dominated);
        int maxcov = 0;
        for (int v = 0; v < n; ++v)
            maxcov = std::max(maxcov, std::popcount(closed[v] & ~dominated));
        int lower = (undom + maxcov - 1) / maxcov;
        if (static_cast<int>(current.size()) + lower >= static_cast<int>(best.size()))
            return;
        int u = -1, fewest = n + 2;
        for (int v = 0; v < n; ++v) {
            if (dominated & bit(v)) continue;
            int options = std::popcount(closed[v]);
            if (options < fewest) {
                fewest = options;
                u = v;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!(closed[u] & bit(v))) continue;
            current.push_back(v);
            run(dominated | closed[v]);
            current.pop_back();
        }
    }
};

}  // namespace

DominatingWitness domination_number(const Graph& g) {
    require_desk_scale(g);
    if (g.n == 0) return {0, {}};
    auto nbr = neighbor_masks(g);
    std::vector<Mask> closed(g.n);
    for (int v = 0; v < g.n; ++v) closed[v] = nbr[v] | bit(v);
    Mask full = g.n == 64 ? ~Mask{0} : bit(g.n) - 1;

    // Greedy cover seeds the incumbent.
    std::vector<int> greedy;
    Mask dominated = 0;
    while (dominated != full) {
        int pick = -1, gain = -1;
        for (int v = 0; v < g.n; ++v) {
            int cov = std::popcount(closed[v] & ~dominated);
            if (cov > gain) {
                gain = cov;
                pick = v;
            }
        }
        greedy.push_back(pick);
        dominated |= closed[pick];
    }
    std::sort(greedy.begin(), greedy.end());

    DomSearch search{g.n, full, closed, {}, greedy};
    search.run(0);
    DominatingWitness w;
    w.set = search.best;
    w.size = static_cast<int>(w.set.size());
    if (is_r_regular(g, 3) && w.size * 4 < g.n)
        throw std::logic_error("cubic domination number below n/4");
    return w;
}

namespace {

// Standard blossom contraction; O(V^3) overall, plenty for n <= 64.
struct BlossomMatcher {
    const Graph& g;
    int n;
    std::vector<int> match, p, base;
    std::vector<char> used, blossom;

    explicit BlossomMatcher(const Graph& graph)
        : g(graph), n(graph.n), match(n, -1), p(n, -1), base(n, 0), used(n, 0),
          blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int v = 0; v < n; ++v) base[v] = v;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void solve() {
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_path(v);
            while (u != -1) {
                int pv = p[u], ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

}  // namespace

std::vector<Edge> max_matching_general(const Graph& g) {
    require_desk_scale(g);
    BlossomMatcher matcher(g);
    matcher.solve();
    std::vector<Edge> out;
    for (int v = 0; v < g.n; ++v)
        if (matcher.match[v] > v) out.push_back(make_edge(v, matcher.match[v]));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Right-side neighborhoods as bit blocks; the right side of an auxiliary
// graph can exceed 64 entries.
struct HallSearch {
    int left_n;
    int blocks;
    const std::vector<std::vector<std::uint64_t>>& nbr;
    std::vector<int> chosen;
    std::vector<std::vector<std::uint64_t>> unions;  // one per depth

    std::optional<std::vector<int>> combos(int size, int from, int depth) {
        if (depth == size) {
            int covered = 0;
            for (std::uint64_t w : unions[depth]) covered += std::popcount(w);
            if (covered < size) return chosen;
            return std::nullopt;
        }
        for (int v = from; v < left_n; ++v) {
            if (left_n - v < size - depth) break;
            chosen.push_back(v);
            for (int b = 0; b < blocks; ++b)
                unions[depth + 1][b] = unions[depth][b] | nbr[v][b];
            auto hit = combos(size, v + 1, depth + 1);
            chosen.pop_back();
            if (hit) return hit;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<int>> hall_violator(const AuxBipartite& h) {
    int left_n = static_cast<int>(h.left.size());
    if (left_n > 24) throw ScaleExceeded("hall_violator supports |left| <= 24");
    int right_n = static_cast<int>(h.right.size());
    int blocks = std::max(1, (right_n + 63) / 64);
    std::vector<std::vector<std::uint64_t>> nbr(left_n,
                                                std::vector<std::uint64_t>(blocks, 0));
    for (int i = 0; i < left_n; ++i)
        for (int e : h.adj[i]) nbr[i][e / 64] |= std::uint64_t{1} << (e % 64);

    HallSearch search{left_n, blocks, nbr, {},
                      std::vector<std::vector<std::uint64_t>>(
                          left_n + 1, std::vector<std::uint64_t>(blocks, 0))};
    for (int size = 1; size <= left_n; ++size)
        if (auto hit = search.combos(size, 0, 0)) {
            std::vector<int> values;
            for (int idx : *hit) values.push_back(h.left[idx]);
            return values;
        }
    return std::nullopt;
}

}  // namespace stardecomp
