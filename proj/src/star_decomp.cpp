#include "stardecomp/star_decomp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>

#include "json.hpp"
#include "stardecomp/invariants.hpp"

namespace stardecomp {

namespace {

// Sorted, duplicate-free copy with range checking.
std::vector<int> canon_set(const Graph& g, const std::vector<int>& xs) {
    std::vector<int> out = xs;
    for (int v : out) g.check_vertex(v);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("duplicate vertex in set");
    return out;
}

// Visit all k-subsets of pool in lexicographic order; fn returns false to stop.
bool combinations(const std::vector<int>& pool, int k, std::vector<int>& chosen,
                  size_t from, const std::function<bool(const std::vector<int>&)>& fn) {
    if (static_cast<int>(chosen.size()) == k) return fn(chosen);
    for (size_t i = from; i < pool.size(); ++i) {
        if (pool.size() - i < static_cast<size_t>(k) - chosen.size()) break;
        chosen.push_back(pool[i]);
        if (!combinations(pool, k, chosen, i + 1, fn)) return false;
        chosen.pop_back();
    }
    return true;
}

void for_each_combination(const std::vector<int>& pool, int k,
                          const std::function<bool(const std::vector<int>&)>& fn) {
    if (k < 0 || static_cast<size_t>(k) > pool.size()) return;
    std::vector<int> chosen;
    combinations(pool, k, chosen, 0, fn);
}

std::vector<std::pair<int, int>> hk_core(int left_n, int right_n,
                                         const std::vector<std::vector<int>>& adj) {
    constexpr int kInf = 1 << 29;
    std::vector<int> pair_l(left_n, -1), pair_r(right_n, -1), dist(left_n, 0);

    auto bfs = [&]() {
        std::vector<int> queue;
        for (int u = 0; u < left_n; ++u) {
            dist[u] = pair_l[u] == -1 ? 0 : kInf;
            if (dist[u] == 0) queue.push_back(u);
        }
        bool reachable = false;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int e : adj[u]) {
                int w = pair_r[e];
                if (w == -1)
                    reachable = true;
                else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int e : adj[u]) {
            int w = pair_r[e];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                pair_l[u] = e;
                pair_r[e] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };

    while (bfs())
        for (int u = 0; u < left_n; ++u)
            if (pair_l[u] == -1) dfs(u);

    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < left_n; ++u)
        if (pair_l[u] != -1) out.emplace_back(u, pair_l[u]);
    return out;
}

}  // namespace

DoubleStar make_double_star(int center, int spine, int spine_leaf,
                            std::vector<int> center_leaves) {
    DoubleStar star;
    star.center = center;
    star.spine = spine;
    star.spine_leaf = spine_leaf;
    std::sort(center_leaves.begin(), center_leaves.end());
    star.center_leaves = std::move(center_leaves);
    for (int leaf : star.center_leaves) star.edges.push_back(make_edge(center, leaf));
    star.edges.push_back(make_edge(center, spine));
    star.edges.push_back(make_edge(spine, spine_leaf));
    std::sort(star.edges.begin(), star.edges.end());
    return star;
}

Certificate make_certificate(std::vector<DoubleStar> stars) {
    Certificate cert;
    std::sort(stars.begin(), stars.end(),
              [](const DoubleStar& a, const DoubleStar& b) { return a.center < b.center; });
    cert.stars = std::move(stars);
    for (const auto& star : cert.stars) cert.center_set.vertices.push_back(star.center);
    std::sort(cert.center_set.vertices.begin(), cert.center_set.vertices.end());
    return cert;
}

AuxBipartite build_aux(const Graph& g, const CenterSet& s) {
    AuxBipartite h;
    h.left = canon_set(g, s.vertices);
    if (!is_independent(g, h.left)) throw NotIndependent("center set is not independent");
    std::vector<char> in_s(g.n, 0);
    for (int v : h.left) in_s[v] = 1;
    for (auto [u, v] : g.edges())
        if (!in_s[u] && !in_s[v]) h.right.push_back(make_edge(u, v));
    h.adj.assign(h.left.size(), {});
    for (size_t i = 0; i < h.left.size(); ++i) {
        std::vector<char> near(g.n, 0);
        for (int w : g.neighbors(h.left[i])) near[w] = 1;
        for (size_t e = 0; e < h.right.size(); ++e)
            if (near[h.right[e].first] || near[h.right[e].second])
                h.adj[i].push_back(static_cast<int>(e));
    }
    return h;
}

std::vector<std::pair<int, int>> hopcroft_karp(const AuxBipartite& h) {
    return hk_core(static_cast<int>(h.left.size()), static_cast<int>(h.right.size()),
                   h.adj);
}

namespace {

// Star for a matched (center, pendant edge) pair. The spine is the pendant
// endpoint adjacent to the center; ties break to the smaller endpoint.
DoubleStar star_for(const Graph& g, int center, Edge pendant) {
    auto [x, y] = pendant;
    bool ax = g.has_edge(center, x), ay = g.has_edge(center, y);
    if (!ax && !ay) throw std::logic_error("pendant edge does not touch the center's neighborhood");
    int spine = (ax && ay) ? std::min(x, y) : (ax ? x : y);
    int spine_leaf = spine == x ? y : x;
    std::vector<int> leaves;
    for (int w : g.neighbors(center))
        if (w != spine) leaves.push_back(w);
    return make_double_star(center, spine, spine_leaf, std::move(leaves));
}

}  // namespace

std::optional<Certificate> decompose_with_centers(const Graph& g, const CenterSet& s,
                                                  int r) {
    if (r < 2) throw PreconditionViolated("double stars need r >= 2");
    if (!is_r_regular(g, r)) throw PreconditionViolated("graph is not r-regular");
    std::vector<int> centers = canon_set(g, s.vertices);
    if (!is_independent(g, centers))
        throw PreconditionViolated("center set is not independent");
    if (2LL * (r + 1) * static_cast<long long>(centers.size()) !=
        static_cast<long long>(r) * g.n)
        throw PreconditionViolated("center set has the wrong size");

    AuxBipartite h = build_aux(g, CenterSet{centers});
    // An edge with both endpoints next to the center cannot be the pendant:
    // the union of the center's star and that edge is a triangle with a
    // pendant, not a double star. Matching is restricted to usable pairs.
    std::vector<std::vector<int>> usable(h.left.size());
    for (size_t i = 0; i < h.left.size(); ++i)
        for (int e : h.adj[i]) {
            bool at_first = g.has_edge(h.left[i], h.right[e].first);
            bool at_second = g.has_edge(h.left[i], h.right[e].second);
            if (at_first != at_second) usable[i].push_back(e);
        }
    auto matching = hk_core(static_cast<int>(h.left.size()),
                            static_cast<int>(h.right.size()), usable);
    if (matching.size() < h.left.size()) return std::nullopt;

    std::vector<DoubleStar> stars;
    for (auto [li, ri] : matching)
        stars.push_back(star_for(g, h.left[li], h.right[ri]));
    Certificate cert = make_certificate(std::move(stars));
    if (!verify_certificate(g, cert, r).ok)
        throw std::logic_error("constructed certificate failed verification");
    return cert;
}

VerifyResult verify_certificate(const Graph& g, const Certificate& c, int r) {
    if (r < 2) return {false, VerifyReason::BadStar, "r below 2"};
    std::map<Edge, int> covered;
    for (size_t si = 0; si < c.stars.size(); ++si) {
        const DoubleStar& star = c.stars[si];
        std::string where = "star " + std::to_string(si);
        if (static_cast<int>(star.center_leaves.size()) != r - 1)
            return {false, VerifyReason::BadStar, where + ": wrong leaf count"};
        std::set<int> verts(star.center_leaves.begin(), star.center_leaves.end());
        verts.insert(star.center);
        verts.insert(star.spine);
        verts.insert(star.spine_leaf);
        if (static_cast<int>(verts.size()) != r + 2)
            return {false, VerifyReason::BadStar, where + ": repeated vertex"};
        for (int v : verts)
            if (v < 0 || v >= g.n)
                return {false, VerifyReason::BadStar, where + ": vertex out of range"};

        std::vector<Edge> derived;
        for (int leaf : star.center_leaves) derived.push_back(make_edge(star.center, leaf));
        derived.push_back(make_edge(star.center, star.spine));
        derived.push_back(make_edge(star.spine, star.spine_leaf));
        std::sort(derived.begin(), derived.end());
        std::vector<Edge> listed = star.edges;
        std::sort(listed.begin(), listed.end());
        if (derived != listed)
            return {false, VerifyReason::BadStar, where + ": edge list does not match fields"};
        for (auto [u, v] : derived)
            if (!g.has_edge(u, v))
                return {false, VerifyReason::BadStar, where + ": edge absent from graph"};
        for (auto e : derived) covered[e] += 1;
    }
    for (const auto& [e, count] : covered)
        if (count > 1)
            return {false, VerifyReason::Overlap,
                    "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        ") covered " + std::to_string(count) + " times"};
    for (auto e : g.edges())
        if (!covered.count(e))
            return {false, VerifyReason::Missing,
                    "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        ") not covered"};
    return {true, VerifyReason::None, ""};
}

NecessaryReport necessary_conditions(const Graph& g, const CenterSet& s) {
    if (!is_r_regular(g, 3)) throw NotCubic("necessary conditions apply to cubic graphs");
    std::vector<int> centers = canon_set(g, s.vertices);
    NecessaryReport rep;
    rep.center_size = static_cast<int>(centers.size());
    rep.divisible_by_8 = g.n % 8 == 0;
    rep.independent_ok = is_independent(g, centers);
    rep.size_ok = 8LL * static_cast<long long>(centers.size()) >= 3LL * g.n;

    DeletionResult del = delete_vertices(g, centers);
    rep.components_ok = true;
    rep.no_two_3vertices = true;
    for (const auto& info : classify_components(del.graph)) {
        if (info.kind == ComponentKind::Other) rep.components_ok = false;
        if (info.count3 >= 2) rep.no_two_3vertices = false;
    }

    rep.pendant_set_exists = false;
    if (g.n % 4 == 0) {
        int need = g.n / 4;
        if (need == 0) {
            rep.pendant_set_exists = true;
        } else if (need <= del.graph.n) {
            enumerate_independent_sets(del.graph, need, [&](const std::vector<int>&) {
                rep.pendant_set_exists = true;
                return false;
            });
        }
    }
    return rep;
}

namespace {

DoubleStar remap_star(const DoubleStar& star, const std::vector<int>& new_to_old) {
    std::vector<int> leaves;
    for (int leaf : star.center_leaves) leaves.push_back(new_to_old[leaf]);
    return make_double_star(new_to_old[star.center], new_to_old[star.spine],
                            new_to_old[star.spine_leaf], std::move(leaves));
}

// Exactness of the center-set search: in an r-regular graph the r-valent
// vertex of each star has all r of its edges inside that star, so distinct
// stars have distinct centers, adjacent centers would share an edge, and a
// component with n_c vertices hosts exactly r*n_c/(2(r+1)) stars. Every
// decomposition therefore has an independent center set of exactly that size
// per component, and enumerating those sets loses nothing.
std::optional<Certificate> decide_core(const Graph& g, int r, int scale_max,
                                       DecideStats* stats) {
    DecideStats local;
    if (!stats) stats = &local;
    auto comps = connected_components(g);
    stats->components = static_cast<int>(comps.size());
    for (const auto& comp : comps) {
        long long nc = static_cast<long long>(comp.size());
        if ((r * nc) % (2 * (r + 1)) != 0) return std::nullopt;
    }
    for (const auto& comp : comps)
        if (static_cast<int>(comp.size()) > scale_max)
            throw ScaleExceeded("component order exceeds the exhaustive-search cap");

    std::vector<DoubleStar> all_stars;
    for (const auto& comp : comps) {
        DeletionResult sub = induced_subgraph(g, comp);
        int target = static_cast<int>(static_cast<long long>(r) * comp.size() /
                                      (2 * (r + 1)));
        std::optional<Certificate> found;
        enumerate_independent_sets(sub.graph, target, [&](const std::vector<int>& centers) {
            stats->candidates += 1;
            if (r == 3) {
                NecessaryReport rep = necessary_conditions(sub.graph, CenterSet{centers});
                if (!rep.components_ok || !rep.no_two_3vertices || !rep.pendant_set_exists) {
                    stats->pruned += 1;
                    return true;
                }
            }
            auto cert = decompose_with_centers(sub.graph, CenterSet{centers}, r);
            if (!cert) {
                stats->hall_rejected += 1;
                return true;
            }
            found = std::move(cert);
            return false;
        });
        if (!found) return std::nullopt;
        for (const auto& star : found->stars)
            all_stars.push_back(remap_star(star, sub.new_to_old));
    }
    Certificate cert = make_certificate(std::move(all_stars));
    if (!verify_certificate(g, cert, r).ok)
        throw std::logic_error("assembled certificate failed verification");
    return cert;
}

}  // namespace

std::optional<Certificate> decide_s12(const Graph& g, int scale_max, DecideStats* stats) {
    if (!is_r_regular(g, 3)) throw NotCubic("decide_s12 needs a cubic graph");
    return decide_core(g, 3, scale_max, stats);
}

std::optional<Certificate> decide_s1r(const Graph& g, int r, int scale_max,
                                      DecideStats* stats) {
    if (r < 3) throw std::invalid_argument("decide_s1r needs r >= 3");
    if (!is_r_regular(g, r)) throw NotRegular("decide_s1r needs an r-regular graph");
    return decide_core(g, r, scale_max, stats);
}

namespace {

struct OracleSearch {
    const Graph& g;
    int r;
    std::vector<Edge> edge_list;
    std::map<Edge, int> edge_index;
    std::vector<std::vector<int>> at;  // edge indices incident to a vertex
    std::uint32_t covered = 0;
    std::uint32_t full = 0;
    std::vector<DoubleStar> stars;

    bool uncovered(int e) const { return !(covered >> e & 1); }

    // All stars that could cover edge list entry e_idx, tried in a fixed
    // order. A star is r edges at the chosen center plus a pendant edge at
    // one center neighbor, so the lowest uncovered edge is either incident
    // to the center or it is the pendant.
    bool place(int e_idx) {
        auto [a, b] = edge_list[e_idx];
        for (int c : {a, b})
            if (try_centers(e_idx, c)) return true;
        for (int flip = 0; flip < 2; ++flip) {
            int spine = flip ? b : a, leaf = flip ? a : b;
            for (int c : g.neighbors(spine)) {
                if (c == leaf) continue;
                int ecp = edge_index.at(make_edge(c, spine));
                if (!uncovered(ecp)) continue;
                if (try_star(c, ecp, spine, leaf, e_idx)) return true;
            }
        }
        return false;
    }

    // Stars centered at c covering ecc (an uncovered edge at c); enumerates
    // the other r-1 center edges, the spine choice and the pendant.
    bool try_centers(int seed_idx, int c) {
        std::vector<int> others;
        for (int e : at[c])
            if (e != seed_idx && uncovered(e)) others.push_back(e);
        if (static_cast<int>(others.size()) < r - 1) return false;
        bool done = false;
        for_each_combination(others, r - 1, [&](const std::vector<int>& rest) {
            std::vector<int> center_edges = rest;
            center_edges.push_back(seed_idx);
            std::vector<int> ends;
            for (int e : center_edges) {
                auto [x, y] = edge_list[e];
                ends.push_back(x == c ? y : x);
            }
            std::sort(ends.begin(), ends.end());
            for (int spine : ends) {
                for (int q : g.neighbors(spine)) {
                    if (q == c) continue;
                    if (std::binary_search(ends.begin(), ends.end(), q)) continue;
                    int pe = edge_index.at(make_edge(spine, q));
                    if (!uncovered(pe)) continue;
                    if (commit(c, spine, q, center_edges, pe)) {
                        done = true;
                        return false;
                    }
                }
            }
            return true;
        });
        return done;
    }

    // Star with a fixed pendant edge (spine, leaf) = entry pend_idx.
    bool try_star(int c, int ecp, int spine, int leaf, int pend_idx) {
        std::vector<int> others;
        for (int e : at[c])
            if (e != ecp && uncovered(e)) others.push_back(e);
        if (static_cast<int>(others.size()) < r - 1) return false;
        bool done = false;
        for_each_combination(others, r - 1, [&](const std::vector<int>& rest) {
            std::vector<int> center_edges = rest;
            center_edges.push_back(ecp);
            bool clash = false;
            for (int e : rest) {
                auto [x, y] = edge_list[e];
                int end = x == c ? y : x;
                if (end == leaf || end == spine) clash = true;
            }
            if (clash) return true;
            if (commit(c, spine, leaf, center_edges, pend_idx)) {
                done = true;
                return false;
            }
            return true;
        });
        return done;
    }

    bool commit(int c, int spine, int leaf, const std::vector<int>& center_edges,
                int pend_idx) {
        std::uint32_t stamp = std::uint32_t{1} << pend_idx;
        for (int e : center_edges) stamp |= std::uint32_t{1} << e;
        covered |= stamp;
        std::vector<int> leaves;
        for (int e : center_edges) {
            auto [x, y] = edge_list[e];
            int end = x == c ? y : x;
            if (end != spine) leaves.push_back(end);
        }
        stars.push_back(make_double_star(c, spine, leaf, std::move(leaves)));
        if (solve()) return true;
        stars.pop_back();
        covered &= ~stamp;
        return false;
    }

    bool solve() {
        if (covered == full) return true;
        int e_idx = std::countr_one(covered);
        return place(e_idx);
    }
};

}  // namespace

std::optional<Certificate> brute_force_decompose(const Graph& g, int r) {
    if (r < 3) throw std::invalid_argument("brute_force_decompose needs r >= 3");
    if (g.m > 28) throw ScaleExceeded("oracle supports at most 28 edges");
    if (g.m % (r + 1) != 0) return std::nullopt;
    for (const auto& comp : connected_components(g)) {
        DeletionResult sub = induced_subgraph(g, comp);
        if (sub.graph.m % (r + 1) != 0) return std::nullopt;
    }

    OracleSearch search{g, r, g.edges(), {}, {}, 0, 0, {}};
    for (size_t i = 0; i < search.edge_list.size(); ++i)
        search.edge_index[search.edge_list[i]] = static_cast<int>(i);
    search.at.assign(g.n, {});
    for (size_t i = 0; i < search.edge_list.size(); ++i) {
        search.at[search.edge_list[i].first].push_back(static_cast<int>(i));
        search.at[search.edge_list[i].second].push_back(static_cast<int>(i));
    }
    search.full = g.m == 0 ? 0 : (g.m == 32 ? ~std::uint32_t{0}
                                            : (std::uint32_t{1} << g.m) - 1);
    if (!search.solve()) return std::nullopt;
    Certificate cert = make_certificate(std::move(search.stars));
    if (!verify_certificate(g, cert, r).ok)
        throw std::logic_error("oracle certificate failed verification");
    return cert;
}

bool is_independent_cycling_set(const Graph& g, const CenterSet& s) {
    std::vector<int> centers = canon_set(g, s.vertices);
    if (!is_independent(g, centers)) return false;
    DeletionResult del = delete_vertices(g, centers);
    for (const auto& info : classify_components(del.graph))
        if (info.kind != ComponentKind::Cycle && info.kind != ComponentKind::IsolatedVertex)
            return false;
    return true;
}

bool theorem_cycling_applies(const Graph& g, const CenterSet& s) {
    if (!is_r_regular(g, 3)) throw NotCubic("hypothesis needs a cubic graph");
    std::vector<int> centers = canon_set(g, s.vertices);
    if (8LL * static_cast<long long>(centers.size()) != 3LL * g.n) return false;
    if (!is_independent_cycling_set(g, CenterSet{centers})) return false;
    for (int v : centers)
        if (in_short_odd_cycle(g, v, 3)) return false;
    return 8LL * independence_number(g).size == 3LL * g.n;
}

bool theorem_main_applies(const Graph& g, const CenterSet& s) {
    if (!is_r_regular(g, 3)) throw NotCubic("hypothesis needs a cubic graph");
    std::vector<int> centers = canon_set(g, s.vertices);
    if (8LL * static_cast<long long>(centers.size()) != 3LL * g.n) return false;
    if (!is_independent(g, centers)) return false;
    for (int v : centers)
        for (int k : {3, 5, 7})
            if (in_short_odd_cycle(g, v, k)) return false;
    return 8LL * independence_number(g).size == 3LL * g.n;
}

bool theorem_r_cycling_applies(const Graph& g, const CenterSet& s, int r) {
    if (r < 4) throw std::invalid_argument("the r-regular hypothesis needs r >= 4");
    if (!is_r_regular(g, r)) throw NotRegular("graph is not r-regular");
    std::vector<int> centers = canon_set(g, s.vertices);
    if (2LL * (r + 1) * static_cast<long long>(centers.size()) !=
        static_cast<long long>(r) * g.n)
        return false;
    if (!is_independent_cycling_set(g, CenterSet{centers})) return false;
    for (int v : centers)
        if (in_short_odd_cycle(g, v, 3)) return false;
    return true;
}

BipartiteDominationResult bipartite_domination_check(const Graph& g) {
    if (!is_r_regular(g, 3)) throw NotCubic("domination check needs a cubic graph");
    auto bip = bipartition(g);
    if (!bip) throw NotBipartite("domination check needs a bipartite graph");
    if (g.n % 8 != 0) throw BadOrder("domination check needs 8 | n");

    BipartiteDominationResult res;
    DominatingWitness dom = domination_number(g);
    res.gamma = dom.size;
    res.gamma_is_n_over_4 = 4 * dom.size == g.n;

    std::vector<char> in_a(g.n, 0);
    for (int v : bip->a) in_a[v] = 1;

    auto try_pair = [&](const std::vector<int>& s_set)
        -> std::optional<std::pair<Certificate, Certificate>> {
        if (8LL * static_cast<long long>(s_set.size()) != 3LL * g.n) return std::nullopt;
        std::vector<int> a_minus_s;
        std::set<int> s_sorted(s_set.begin(), s_set.end());
        for (int v : bip->a)
            if (!s_sorted.count(v)) a_minus_s.push_back(v);
        std::vector<int> second = neighborhood(g, a_minus_s);
        if (8LL * static_cast<long long>(second.size()) != 3LL * g.n) return std::nullopt;
        auto c1 = decompose_with_centers(g, CenterSet{s_set}, 3);
        if (!c1) return std::nullopt;
        auto c2 = decompose_with_centers(g, CenterSet{second}, 3);
        if (!c2) return std::nullopt;
        return std::make_pair(std::move(*c1), std::move(*c2));
    };

    if (res.gamma_is_n_over_4) {
        // Closed neighborhoods of a gamma = n/4 dominating set partition V,
        // so A splits into D cap A and N(D cap B); the center set is the
        // latter and A \ S is exactly D cap A.
        std::vector<int> d2;
        for (int v : dom.set)
            if (!in_a[v]) d2.push_back(v);
        std::vector<int> s_set = neighborhood(g, d2);
        res.witness_s = s_set;
        res.both_decompositions = try_pair(s_set);
    } else {
        int want = 3 * g.n / 8;
        for_each_combination(bip->a, want, [&](const std::vector<int>& s_set) {
            auto pair = try_pair(s_set);
            if (!pair) return true;
            res.witness_s = s_set;
            res.both_decompositions = std::move(pair);
            return false;
        });
    }
    return res;
}

MatchingConditionResult bipartite_matching_condition(const Graph& g,
                                                     const std::vector<int>& part_a,
                                                     const CenterSet& s) {
    if (!is_r_regular(g, 3)) throw NotCubic("matching condition needs a cubic graph");
    std::vector<int> a = canon_set(g, part_a);
    std::vector<char> in_a(g.n, 0);
    for (int v : a) in_a[v] = 1;
    for (auto [u, v] : g.edges())
        if (in_a[u] == in_a[v])
            throw NotBipartite("part_a is not one side of a bipartition");

    std::vector<int> centers = canon_set(g, s.vertices);
    for (int v : centers)
        if (!in_a[v]) throw BadCenterSet("center set must lie inside part_a");
    if (8LL * static_cast<long long>(centers.size()) != 3LL * g.n)
        throw BadCenterSet("center set must have size 3n/8");

    MatchingConditionResult res;
    std::vector<char> in_s(g.n, 0);
    for (int v : centers) in_s[v] = 1;
    std::vector<int> a_minus_s;
    for (int v : a)
        if (!in_s[v]) a_minus_s.push_back(v);
    std::vector<int> targets = neighborhood(g, a_minus_s);
    if (8LL * static_cast<long long>(targets.size()) != 3LL * g.n) return res;  // pigeonhole: no matching

    std::vector<int> target_pos(g.n, -1);
    for (size_t i = 0; i < targets.size(); ++i) target_pos[targets[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(centers.size());
    for (size_t i = 0; i < centers.size(); ++i)
        for (int w : g.neighbors(centers[i]))
            if (target_pos[w] != -1) adj[i].push_back(target_pos[w]);
    auto matching = hk_core(static_cast<int>(centers.size()),
                            static_cast<int>(targets.size()), adj);
    if (matching.size() < centers.size()) return res;

    std::vector<char> in_rest(g.n, 0);
    for (int v : a_minus_s) in_rest[v] = 1;
    std::vector<DoubleStar> stars;
    std::vector<std::pair<int, int>> pairs;
    for (auto [li, ri] : matching) {
        int center = centers[li], spine = targets[ri];
        pairs.emplace_back(center, spine);
        int leaf = -1;
        for (int w : g.neighbors(spine))
            if (in_rest[w]) {
                if (leaf != -1) throw std::logic_error("pendant endpoint not unique");
                leaf = w;
            }
        if (leaf == -1) throw std::logic_error("matched vertex has no pendant edge");
        std::vector<int> leaves;
        for (int w : g.neighbors(center))
            if (w != spine) leaves.push_back(w);
        stars.push_back(make_double_star(center, spine, leaf, std::move(leaves)));
    }
    Certificate cert = make_certificate(std::move(stars));
    if (!verify_certificate(g, cert, 3).ok)
        throw std::logic_error("matching-condition certificate failed verification");
    res.decomposable = true;
    res.matching = std::move(pairs);
    res.certificate = std::move(cert);
    return res;
}

bool r_divisibility(long long n, int r) {
    if (r < 2) throw std::invalid_argument("r_divisibility needs r >= 2");
    return (static_cast<long long>(r) * n) % (2LL * (r + 1)) == 0;
}

std::optional<std::vector<P4>> s11_decompose(const Graph& g) {
    if (!is_r_regular(g, 3)) throw NotCubic("path decomposition baseline needs a cubic graph");
    auto matching = max_matching_general(g);
    if (2 * static_cast<int>(matching.size()) != g.n) return std::nullopt;

    std::vector<int> partner(g.n, -1);
    for (auto [u, v] : matching) {
        partner[u] = v;
        partner[v] = u;
    }
    // The non-matching edges form disjoint cycles; walk each one starting at
    // its smallest vertex, toward the smaller of the two cycle neighbors.
    std::vector<int> succ(g.n, -1);
    std::vector<char> seen(g.n, 0);
    for (int start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        int prev = -1, cur = start;
        for (;;) {
            seen[cur] = 1;
            int next = -1;
            for (int w : g.neighbors(cur)) {
                if (w == partner[cur] || w == prev) continue;
                if (next == -1 || w < next) next = w;
                if (prev != -1) break;  // only one forward edge mid-cycle
            }
            succ[cur] = next;
            if (next == start) break;
            prev = cur;
            cur = next;
        }
    }
    std::vector<P4> paths;
    for (auto [u, v] : matching) paths.push_back(P4{{succ[u], u, v, succ[v]}});
    if (!verify_p4_partition(g, paths))
        throw std::logic_error("path partition failed verification");
    return paths;
}

bool verify_p4_partition(const Graph& g, const std::vector<P4>& paths) {
    std::map<Edge, int> covered;
    for (const auto& p : paths) {
        std::set<int> verts(p.v.begin(), p.v.end());
        if (verts.size() != 4) return false;
        for (int v : p.v)
            if (v < 0 || v >= g.n) return false;
        for (int i = 0; i < 3; ++i) {
            if (!g.has_edge(p.v[i], p.v[i + 1])) return false;
            covered[make_edge(p.v[i], p.v[i + 1])] += 1;
        }
    }
    for (const auto& [e, count] : covered)
        if (count != 1) return false;
    return static_cast<int>(covered.size()) == g.m;
}

std::string certificate_to_json(const Certificate& c, int order, int r) {
    nlohmann::ordered_json j;
    j["v"] = 1;
    j["order"] = order;
    j["r"] = r;
    j["stars"] = nlohmann::ordered_json::array();
    for (const auto& star : c.stars) {
        nlohmann::ordered_json js;
        js["center"] = star.center;
        js["spine"] = star.spine;
        js["spine_leaf"] = star.spine_leaf;
        js["center_leaves"] = star.center_leaves;
        j["stars"].push_back(std::move(js));
    }
    return j.dump();
}

ParsedCertificate certificate_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad certificate json: ") + e.what());
    }
    try {
        ParsedCertificate out;
        out.order = j.at("order").get<int>();
        out.r = j.at("r").get<int>();
        std::vector<DoubleStar> stars;
        for (const auto& js : j.at("stars"))
            stars.push_back(make_double_star(js.at("center").get<int>(),
                                             js.at("spine").get<int>(),
                                             js.at("spine_leaf").get<int>(),
                                             js.at("center_leaves").get<std::vector<int>>()));
        out.cert = make_certificate(std::move(stars));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad certificate json: ") + e.what());
    }
}

}  // namespace stardecomp
