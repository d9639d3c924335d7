#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "stardecomp/invariants.hpp"
#include "stardecomp/star_decomp.hpp"
#include "testgraphs.hpp"

using namespace stardecomp;
using namespace testsupport;

namespace {

bool set_is_independent(const Graph& g, const std::vector<int>& set) {
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

int count_independent_sets(const Graph& g, int k) {
    int count = 0;
    for (int mask = 0; mask < (1 << g.n); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != k) continue;
        std::vector<int> set;
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) set.push_back(v);
        if (set_is_independent(g, set)) count += 1;
    }
    return count;
}

// Synthetic auxiliary instance; left labels are 10, 11, ... so tests can tell
// values from indices.
AuxBipartite make_aux(int left, int right, std::vector<std::vector<int>> adj) {
    AuxBipartite h;
    for (int i = 0; i < left; ++i) h.left.push_back(10 + i);
    for (int e = 0; e < right; ++e) h.right.push_back({100 + e, 200 + e});
    h.adj = std::move(adj);
    return h;
}

}  // namespace

TEST_CASE("independence number on fixed graphs") {
    CHECK(independence_number(complete(4)).size == 1);
    CHECK(independence_number(cycle_n(8)).size == 4);
    CHECK(independence_number(q3()).size == 4);
    CHECK(independence_number(petersen()).size == 4);

    IndependenceWitness w = independence_number(q3());
    CHECK(static_cast<int>(w.set.size()) == w.size);
    CHECK(set_is_independent(q3(), w.set));
}

TEST_CASE("independence number equals brute force") {
    for (int n : {4, 6, 8})
        for (const Graph& g : cubic_catalog(n))
            CHECK(independence_number(g).size == ts_alpha(g));
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(4 + i % 9, 0.15 + 0.1 * (i % 6), 50 + i);
        CHECK(independence_number(g).size == ts_alpha(g));
    }
}

TEST_CASE("independence witness is deterministic") {
    Graph g = random_graph(14, 0.3, 99);
    CHECK(independence_number(g).set == independence_number(g).set);
}

TEST_CASE("independent set enumeration") {
    std::vector<std::vector<int>> out;
    enumerate_independent_sets(complete(4), 1, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    CHECK(out == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});

    out.clear();
    enumerate_independent_sets(complete(4), 2, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    CHECK(out.empty());

    CHECK(independent_sets_of_size(cycle_n(5), 2).size() == 5);
}

TEST_CASE("enumeration is lexicographic, independent, and stoppable") {
    Graph g = cycle_n(8);
    std::vector<std::vector<int>> sets = independent_sets_of_size(g, 3);
    CHECK(std::is_sorted(sets.begin(), sets.end()));
    for (const auto& s : sets) CHECK(set_is_independent(g, s));
    CHECK(static_cast<int>(sets.size()) == count_independent_sets(g, 3));

    int calls = 0;
    enumerate_independent_sets(g, 3, [&](const std::vector<int>&) {
        calls += 1;
        return calls < 2;
    });
    CHECK(calls == 2);
}

TEST_CASE("enumeration counts match brute force") {
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(4 + i % 8, 0.3, 700 + i);
        for (int k = 0; k <= 4; ++k)
            CHECK(static_cast<int>(independent_sets_of_size(g, k).size()) ==
                  count_independent_sets(g, k));
    }
}

TEST_CASE("enumeration at alpha is non-empty") {
    for (const Graph& g : cubic_catalog(8)) {
        int a = independence_number(g).size;
        CHECK_FALSE(independent_sets_of_size(g, a).empty());
    }
}

TEST_CASE("domination number on fixed graphs") {
    CHECK(domination_number(q3()).size == 2);
    CHECK(domination_number(complete(4)).size == 1);
    CHECK(domination_number(cycle_n(8)).size == 3);
    CHECK(domination_number(petersen()).size == 3);

    Graph pet = petersen();
    DominatingWitness w = domination_number(pet);
    std::set<int> covered;
    for (int v : w.set) {
        covered.insert(v);
        for (int u : pet.neighbors(v)) covered.insert(u);
    }
    CHECK(static_cast<int>(covered.size()) == 10);
}

TEST_CASE("domination number equals brute force") {
    for (int n : {4, 6, 8})
        for (const Graph& g : cubic_catalog(n))
            CHECK(domination_number(g).size == ts_gamma(g));
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(4 + i % 9, 0.2 + 0.1 * (i % 5), 150 + i);
        CHECK(domination_number(g).size == ts_gamma(g));
    }
}

TEST_CASE("maximum matching in general graphs") {
    CHECK(max_matching_general(complete(4)).size() == 2);
    CHECK(max_matching_general(cycle_n(5)).size() == 2);

    auto pm = max_matching_general(petersen());
    CHECK(pm.size() == 5);
    std::set<int> touched;
    for (auto [u, v] : pm) {
        CHECK(petersen().has_edge(u, v));
        touched.insert(u);
        touched.insert(v);
    }
    CHECK(touched.size() == 10);

    CHECK(static_cast<int>(max_matching_general(no_pm_16()).size()) == 7);
}

TEST_CASE("maximum matching equals brute force") {
    for (int n : {4, 6, 8})
        for (const Graph& g : cubic_catalog(n))
            CHECK(static_cast<int>(max_matching_general(g).size()) == ts_max_matching(g));
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(5 + i % 8, 0.25, 250 + i);
        auto m = max_matching_general(g);
        std::set<int> touched;
        for (auto [u, v] : m) {
            CHECK(g.has_edge(u, v));
            CHECK(!touched.count(u));
            CHECK(!touched.count(v));
            touched.insert(u);
            touched.insert(v);
        }
        CHECK(static_cast<int>(m.size()) == ts_max_matching(g));
    }
}

TEST_CASE("hall violator basics") {
    AuxBipartite lonely = make_aux(1, 2, {{}});
    auto v1 = hall_violator(lonely);
    REQUIRE(v1.has_value());
    CHECK(*v1 == std::vector<int>{10});

    AuxBipartite pm = make_aux(3, 3, {{0}, {1}, {2}});
    CHECK_FALSE(hall_violator(pm).has_value());
}

TEST_CASE("hall violator is smallest then lexicographic") {
    // Left 10 and 12 both see only right 0; left 11 sees everything.
    AuxBipartite h = make_aux(3, 3, {{0}, {0, 1, 2}, {0}});
    auto v = hall_violator(h);
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<int>{10, 12});

    for (int i = 0; i < 30; ++i) {
        BipInstance b = random_bip_instance(5, 5, 0.3, 500 + i);
        AuxBipartite h2 = make_aux(b.left, b.right, b.adj);
        auto vio = hall_violator(h2);
        if (!vio.has_value()) continue;
        // Verify the shortfall and that no smaller or earlier subset violates.
        auto shortfall = [&](const std::vector<int>& labels) {
            std::set<int> seen;
            for (int label : labels)
                for (int e : b.adj[label - 10]) seen.insert(e);
            return static_cast<int>(seen.size()) < static_cast<int>(labels.size());
        };
        CHECK(shortfall(*vio));
        for (int mask = 1; mask < (1 << 5); ++mask) {
            std::vector<int> labels;
            for (int u = 0; u < 5; ++u)
                if (mask >> u & 1) labels.push_back(10 + u);
            if (labels.size() < vio->size() ||
                (labels.size() == vio->size() && labels < *vio))
                CHECK_FALSE(shortfall(labels));
        }
    }
}

TEST_CASE("hall violator absent exactly when the left side saturates") {
    for (int i = 0; i < 60; ++i) {
        BipInstance b = random_bip_instance(8, 8, 0.1 + 0.06 * (i % 8), 800 + i);
        AuxBipartite h = make_aux(b.left, b.right, b.adj);
        bool saturated = ts_bip_matching(b) == b.left;
        CHECK(hall_violator(h).has_value() == !saturated);
    }
}

TEST_CASE("scale guards") {
    Graph big = Graph::empty(65);
    CHECK_THROWS_AS(independence_number(big), ScaleExceeded);
    CHECK_THROWS_AS(domination_number(big), ScaleExceeded);
    CHECK_THROWS_AS(max_matching_general(big), ScaleExceeded);

    AuxBipartite wide = make_aux(25, 1, std::vector<std::vector<int>>(25));
    CHECK_THROWS_AS(hall_violator(wide), ScaleExceeded);
}
