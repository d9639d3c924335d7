#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "stardecomp/graph.hpp"

namespace stardecomp {

struct AuxBipartite;  // see star_decomp.hpp

struct IndependenceWitness {
    int size = 0;
    std::vector<int> set;  // sorted
};

struct DominatingWitness {
    int size = 0;
    std::vector<int> set;  // sorted
};

/// Exact independence number, n <= 64. Branch and bound: vertices in a fixed
/// order (degree descending, index ascending), greedy clique cover as the
/// upper bound. The witness is the first maximum set found in that order,
/// so repeated runs give identical output.
IndependenceWitness independence_number(const Graph& g);

/// Streams every independent set of size exactly k in lexicographic order
/// (as sorted vertex lists). Return false from visit to stop early.
void enumerate_independent_sets(const Graph& g, int k,
                                const std::function<bool(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> independent_sets_of_size(const Graph& g, int k);

/// Exact domination number, n <= 64. Branch and bound seeded with a greedy
/// cover; branches on an undominated vertex of minimum closed neighborhood.
DominatingWitness domination_number(const Graph& g);

/// Maximum matching in an arbitrary graph (blossom algorithm), n <= 64.
std::vector<Edge> max_matching_general(const Graph& g);

/// Smallest (then lexicographically least) left subset X with |N(X)| < |X|,
/// found by exhaustive subset search, independent of any matching code.
/// Returns the left-side values. Absent iff a matching saturates the left.
/// |left| <= 24.
std::optional<std::vector<int>> hall_violator(const AuxBipartite& h);

}  // namespace stardecomp
