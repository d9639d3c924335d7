#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stardecomp/graph.hpp"
#include "stardecomp/star_decomp.hpp"

namespace stardecomp {

constexpr int kDefaultScaleMax = 24;
constexpr int kOracleEdgeMax = 28;

// Reads STARDECOMP_SCALE_MAX, falling back to the default cap of 24.
int scale_max_from_env();

/// One JSONL row of a survey run. Schema version "v":1; optional fields are
/// omitted when absent, regular/alpha/gamma are emitted as null when unknown.
struct SurveyRecord {
    int index = 0;
    std::string graph6;
    int n = 0;
    std::optional<int> regular;
    int connectivity = 0;
    bool bipartite = false;
    bool triangle_free = false;
    std::optional<int> alpha;
    std::optional<int> gamma;
    std::string s12;  // "yes" | "no" | "skipped"
    std::optional<std::string> s12_reason;
    std::optional<std::string> certificate_path;
    std::optional<std::string> error;
    long long elapsed_ms = 0;

    std::string to_jsonl() const;
};

struct CheckOptions {
    int r = 3;
    bool emit_cert = false;
    bool json = false;
    std::string cert_out;  // path for --emit-cert; empty prints to out
    int scale_max = kDefaultScaleMax;
};

// Exit codes: 0 decided, 2 parse failure, 3 scale exceeded.
int run_check(const std::string& line, std::ostream& out, const CheckOptions& opt);

struct SurveyOptions {
    int jobs = 1;
    bool emit_cert = false;
    std::string cert_dir = ".";
    int scale_max = kDefaultScaleMax;
};

struct SurveySummary {
    int total = 0;
    int yes = 0;
    int no = 0;
    int skipped = 0;
    int errors = 0;
};

/// One record per input graph, input order preserved regardless of jobs.
/// Blank lines and a leading ">>graph6<<" header line are skipped.
SurveySummary run_survey(std::istream& corpus, std::ostream& out, const SurveyOptions& opt);

struct HuntFilters {
    bool triangle_free = false;
    bool bipartite = false;
    int min_connectivity = 0;
    bool order_mod_8 = false;
    bool alpha_equals_3n8 = false;
};

struct HuntOptions {
    HuntFilters filters;
    int jobs = 1;
    int scale_max = kDefaultScaleMax;
};

struct HuntSummary {
    int scanned = 0;
    int passed_filters = 0;
    int hits = 0;    // non-decomposable graphs passing every filter
    int skipped = 0;
    int errors = 0;  // includes any oracle disagreement on a hit
};

/// Prints every cubic graph that passes the filters and fails decide_s12.
/// Hits within the oracle's edge cap are re-confirmed by
/// brute_force_decompose before being reported.
HuntSummary run_hunt(const std::vector<std::string>& lines, std::ostream& out,
                     const HuntOptions& opt);

/// Corpus source: a file path, or "random:n=<N>,count=<C>,seed=<S>" for
/// seeded random cubic graphs.
std::vector<std::string> load_corpus(const std::string& source, std::uint64_t default_seed);

std::vector<std::string> read_graph6_lines(std::istream& in);

struct OracleCompareOptions {
    int r = 3;
    int max_edges = kOracleEdgeMax;
    int scale_max = kDefaultScaleMax;
    // Injectable for harness self-tests; defaults to decide_s12/decide_s1r.
    std::function<std::optional<Certificate>(const Graph&)> decide;
};

// Exit 0 iff decide and the brute-force oracle agree on every usable line.
int run_oracle_compare(const std::vector<std::string>& lines, std::ostream& out,
                       const OracleCompareOptions& opt);

}  // namespace stardecomp
