#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stardecomp/graph.hpp"

namespace stardecomp {

struct NotIndependent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotCubic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotRegular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotBipartite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadCenterSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CenterSet {
    std::vector<int> vertices;  // sorted
};

/// Auxiliary bipartite graph H = (S, L): left side is the center set, right
/// side the edges of G \ S in canonical order; center s_i is adjacent to
/// edge e_j iff an endpoint of e_j neighbors s_i in G.
struct AuxBipartite {
    std::vector<int> left;
    std::vector<Edge> right;
    std::vector<std::vector<int>> adj;  // left index -> sorted right indices
};

/// One S_{1,r-1} piece: r edges at the center (to spine and center_leaves)
/// plus the pendant edge from spine to spine_leaf. Degree sequence inside
/// the star is (r, 2, 1, ..., 1).
struct DoubleStar {
    int center = -1;
    int spine = -1;
    int spine_leaf = -1;
    std::vector<int> center_leaves;  // sorted, r-1 entries
    std::vector<Edge> edges;         // canonical list derived from the fields
};

DoubleStar make_double_star(int center, int spine, int spine_leaf,
                            std::vector<int> center_leaves);

struct Certificate {
    std::vector<DoubleStar> stars;  // sorted by center
    CenterSet center_set;           // derived from stars
};

Certificate make_certificate(std::vector<DoubleStar> stars);

struct NecessaryReport {
    bool divisible_by_8 = false;
    bool independent_ok = false;
    bool size_ok = false;          // 8|S| >= 3n, tested as written
    bool components_ok = false;    // every component of G\S a cycle or a tree
    bool no_two_3vertices = false; // no component with two induced 3-vertices
    bool pendant_set_exists = false;
    int center_size = 0;
    bool all() const {
        return divisible_by_8 && independent_ok && size_ok && components_ok &&
               no_two_3vertices && pendant_set_exists;
    }
};

enum class VerifyReason { None, Overlap, Missing, BadStar };

struct VerifyResult {
    bool ok = false;
    VerifyReason reason = VerifyReason::None;
    std::string detail;
    explicit operator bool() const { return ok; }
};

struct DecideStats {
    int components = 0;
    long long candidates = 0;     // center sets actually tried
    long long pruned = 0;         // rejected by necessary conditions
    long long hall_rejected = 0;  // rejected by a failed matching
};

AuxBipartite build_aux(const Graph& g, const CenterSet& s);

// Maximum matching of H as (left index, right index) pairs, ascending.
std::vector<std::pair<int, int>> hopcroft_karp(const AuxBipartite& h);

/// Decides whether g decomposes into S_{1,r-1} with this exact center set,
/// via a perfect matching of the auxiliary graph. Returned certificates
/// always verify.
std::optional<Certificate> decompose_with_centers(const Graph& g, const CenterSet& s, int r);

VerifyResult verify_certificate(const Graph& g, const Certificate& c, int r);

NecessaryReport necessary_conditions(const Graph& g, const CenterSet& s);

/// Exact decision for cubic g: per component, enumerate independent center
/// sets of size 3n_c/8 lexicographically, prune with the proved necessary
/// conditions, first success wins. Deterministic.
std::optional<Certificate> decide_s12(const Graph& g, int scale_max = 24,
                                      DecideStats* stats = nullptr);

/// Same search for r-regular g (r >= 3) with |S| = r*n_c / (2(r+1)).
std::optional<Certificate> decide_s1r(const Graph& g, int r, int scale_max = 24,
                                      DecideStats* stats = nullptr);

/// Independent oracle: backtracking edge partition over the raw edge list,
/// no center-set or matching machinery. |E| <= 28.
std::optional<Certificate> brute_force_decompose(const Graph& g, int r);

/// s independent and every component of G\s a cycle or an isolated vertex.
bool is_independent_cycling_set(const Graph& g, const CenterSet& s);

/// Cubic g: alpha(g) = 3n/8, |s| = 3n/8, s an independent cycling set, and
/// no member of s lies on a triangle.
bool theorem_cycling_applies(const Graph& g, const CenterSet& s);

/// Cubic g: alpha(g) = 3n/8, s independent of size 3n/8, and no member of s
/// lies on a cycle of length 3, 5 or 7.
bool theorem_main_applies(const Graph& g, const CenterSet& s);

struct BipartiteDominationResult {
    bool gamma_is_n_over_4 = false;
    int gamma = 0;
    std::optional<std::vector<int>> witness_s;
    std::optional<std::pair<Certificate, Certificate>> both_decompositions;
};

/// Bipartite cubic g with 8 | n. When gamma = n/4, builds S from a minimum
/// dominating set and certifies both the (S_{1,2}, S) and the
/// (S_{1,2}, N(A\S)) decompositions. Otherwise searches every S inside side
/// A of the canonical bipartition and reports what it finds.
BipartiteDominationResult bipartite_domination_check(const Graph& g);

struct MatchingConditionResult {
    bool decomposable = false;
    // Pairs (center in s, matched vertex in N(A\s)) when decomposable.
    std::optional<std::vector<std::pair<int, int>>> matching;
    std::optional<Certificate> certificate;
};

/// Bipartite cubic g with part_a one side of a bipartition, s inside part_a
/// of size 3n/8: decomposable iff a perfect matching joins s to N(A\s).
MatchingConditionResult bipartite_matching_condition(const Graph& g,
                                                     const std::vector<int>& part_a,
                                                     const CenterSet& s);

// 2(r+1) divides r*n. r >= 2.
bool r_divisibility(long long n, int r);

/// Applies for r-regular g, r >= 4: |s| = r*n/(2(r+1)), s an independent
/// cycling set, no member of s on a triangle. No independence-number
/// hypothesis for r >= 4.
bool theorem_r_cycling_applies(const Graph& g, const CenterSet& s, int r);

/// Path on 4 vertices: edges (v0,v1), (v1,v2), (v2,v3); the middle edge is
/// the matching edge the star was anchored on.
struct P4 {
    std::array<int, 4> v;
};

/// Cubic g decomposes into paths P4 iff it has a perfect matching. When it
/// does, removing the matching leaves disjoint cycles; orienting each cycle
/// assigns every non-matching edge to its tail, and each matching edge plus
/// the two outgoing edges of its endpoints forms one P4.
std::optional<std::vector<P4>> s11_decompose(const Graph& g);

bool verify_p4_partition(const Graph& g, const std::vector<P4>& paths);

std::string certificate_to_json(const Certificate& c, int order, int r);

struct ParsedCertificate {
    int order = 0;
    int r = 0;
    Certificate cert;
};

ParsedCertificate certificate_from_json(const std::string& text);

}  // namespace stardecomp
