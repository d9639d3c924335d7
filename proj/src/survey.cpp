#include "stardecomp/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "stardecomp/invariants.hpp"

namespace stardecomp {

namespace {

using ojson = nlohmann::ordered_json;

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        const auto& a = g.adj[u];
        const auto& b = g.adj[v];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (!common.empty()) return true;
    }
    return false;
}

std::string trim_right(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' ||
                          s.back() == '\t'))
        s.pop_back();
    return s;
}

std::string decision_label(int r) { return "s1" + std::to_string(r - 1); }

}  // namespace

int scale_max_from_env() {
    const char* raw = std::getenv("STARDECOMP_SCALE_MAX");
    if (!raw || !*raw) return kDefaultScaleMax;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1) return kDefaultScaleMax;
    return static_cast<int>(value);
}

std::string SurveyRecord::to_jsonl() const {
    ojson j;
    j["v"] = 1;
    j["index"] = index;
    j["graph6"] = graph6;
    j["n"] = n;
    j["regular"] = regular ? ojson(*regular) : ojson(nullptr);
    j["connectivity"] = connectivity;
    j["bipartite"] = bipartite;
    j["triangle_free"] = triangle_free;
    j["alpha"] = alpha ? ojson(*alpha) : ojson(nullptr);
    j["gamma"] = gamma ? ojson(*gamma) : ojson(nullptr);
    j["s12"] = s12;
    if (s12_reason) j["s12_reason"] = *s12_reason;
    if (certificate_path) j["certificate_path"] = *certificate_path;
    if (error) j["error"] = *error;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

namespace {

struct Analysis {
    SurveyRecord record;
    std::optional<Certificate> certificate;
};

Analysis analyze_line(int index, const std::string& raw, int scale_max) {
    Analysis a;
    a.record.index = index;
    a.record.graph6 = trim_right(raw);
    auto start = std::chrono::steady_clock::now();

    std::optional<Graph> parsed;
    try {
        parsed = parse_graph6(a.record.graph6);
    } catch (const std::exception& e) {
        a.record.error = e.what();
        a.record.s12 = "skipped";
        a.record.s12_reason = "unreadable input";
    }
    if (parsed) {
        const Graph& g = *parsed;
        a.record.n = g.n;
        a.record.regular = regularity(g);
        a.record.connectivity = vertex_connectivity(g);
        a.record.bipartite = bipartition(g).has_value();
        a.record.triangle_free = !has_triangle(g);
        if (g.n <= scale_max && g.n > 0) {
            a.record.alpha = independence_number(g).size;
            a.record.gamma = domination_number(g).size;
        }
        if (a.record.regular != 3) {
            a.record.s12 = "skipped";
            a.record.s12_reason = "not cubic";
        } else if (g.n % 8 != 0) {
            a.record.s12 = "no";
            a.record.s12_reason = "order not divisible by 8";
        } else {
            try {
                a.certificate = decide_s12(g, scale_max);
                a.record.s12 = a.certificate ? "yes" : "no";
            } catch (const ScaleExceeded&) {
                a.record.s12 = "skipped";
                a.record.s12_reason = "scale exceeded";
            }
        }
    }
    auto stop = std::chrono::steady_clock::now();
    a.record.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return a;
}

std::vector<Analysis> analyze_all(const std::vector<std::string>& lines, int jobs,
                                  int scale_max) {
    std::vector<Analysis> results(lines.size());
    int workers = std::max(1, jobs);
    if (workers == 1 || lines.size() <= 1) {
        for (size_t i = 0; i < lines.size(); ++i)
            results[i] = analyze_line(static_cast<int>(i), lines[i], scale_max);
        return results;
    }
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            results[i] = analyze_line(static_cast<int>(i), lines[i], scale_max);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(workers, static_cast<int>(lines.size())); ++t)
        pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace

int run_check(const std::string& line, std::ostream& out, const CheckOptions& opt) {
    std::string text = trim_right(line);
    std::optional<Graph> parsed;
    try {
        parsed = parse_graph6(text);
    } catch (const std::exception& e) {
        out << "parse error: " << e.what() << "\n";
        return 2;
    }
    const Graph& g = *parsed;
    const std::string label = decision_label(opt.r);
    out << "graph6: " << text << "\n";
    out << "n: " << g.n << "\n";

    if (!is_r_regular(g, opt.r)) {
        out << label << ": skipped (not " << (opt.r == 3 ? "cubic" : "regular of degree " + std::to_string(opt.r))
            << ")\n";
        return 0;
    }
    if (!r_divisibility(g.n, opt.r)) {
        if (opt.r == 3)
            out << label << ": no (order not divisible by 8)\n";
        else
            out << label << ": no (rn not divisible by 2(r+1))\n";
        return 0;
    }

    std::optional<Certificate> cert;
    try {
        cert = opt.r == 3 ? decide_s12(g, opt.scale_max)
                          : decide_s1r(g, opt.r, opt.scale_max);
    } catch (const ScaleExceeded& e) {
        out << "scale exceeded: " << e.what() << "\n";
        return 3;
    }

    if (!cert) {
        out << label << ": no\n";
        return 0;
    }
    out << label << ": yes\n";
    out << "centers:";
    for (int v : cert->center_set.vertices) out << " " << v;
    out << "\n";
    if (opt.r == 3) {
        NecessaryReport rep = necessary_conditions(g, cert->center_set);
        out << "conditions: order=" << (rep.divisible_by_8 ? "yes" : "no")
            << " independent=" << (rep.independent_ok ? "yes" : "no")
            << " size=" << (rep.size_ok ? "yes" : "no")
            << " components=" << (rep.components_ok ? "yes" : "no")
            << " branch-vertices=" << (rep.no_two_3vertices ? "yes" : "no")
            << " pendant-set=" << (rep.pendant_set_exists ? "yes" : "no") << "\n";
    }
    if (opt.emit_cert) {
        std::string body = certificate_to_json(*cert, g.n, opt.r);
        if (opt.cert_out.empty()) {
            out << body << "\n";
        } else {
            std::ofstream file(opt.cert_out, std::ios::binary);
            if (!file) {
                out << "cannot write certificate to " << opt.cert_out << "\n";
                return 2;
            }
            file << body << "\n";
            out << "certificate: " << opt.cert_out << "\n";
        }
    }
    if (opt.json) {
        Analysis a = analyze_line(0, text, opt.scale_max);
        out << a.record.to_jsonl() << "\n";
    }
    return 0;
}

SurveySummary run_survey(std::istream& corpus, std::ostream& out,
                         const SurveyOptions& opt) {
    std::vector<std::string> lines = read_graph6_lines(corpus);
    std::vector<Analysis> results = analyze_all(lines, opt.jobs, opt.scale_max);

    SurveySummary summary;
    for (auto& a : results) {
        summary.total += 1;
        if (a.record.error) summary.errors += 1;
        if (a.record.s12 == "yes")
            summary.yes += 1;
        else if (a.record.s12 == "no")
            summary.no += 1;
        else
            summary.skipped += 1;
        if (opt.emit_cert && a.certificate) {
            std::string path =
                opt.cert_dir + "/" + std::to_string(a.record.index) + ".cert.json";
            std::ofstream file(path, std::ios::binary);
            if (file) {
                file << certificate_to_json(*a.certificate, a.record.n, 3) << "\n";
                a.record.certificate_path = path;
            } else {
                a.record.error = "cannot write " + path;
                summary.errors += 1;
            }
        }
        out << a.record.to_jsonl() << "\n";
    }
    return summary;
}

HuntSummary run_hunt(const std::vector<std::string>& lines, std::ostream& out,
                     const HuntOptions& opt) {
    HuntSummary summary;
    std::vector<Analysis> results = analyze_all(lines, opt.jobs, opt.scale_max);
    for (const auto& a : results) {
        summary.scanned += 1;
        if (a.record.error) {
            summary.errors += 1;
            continue;
        }
        if (a.record.regular != 3) {
            summary.skipped += 1;
            continue;
        }
        const HuntFilters& f = opt.filters;
        if (f.triangle_free && !a.record.triangle_free) continue;
        if (f.bipartite && !a.record.bipartite) continue;
        if (f.min_connectivity > 0 && a.record.connectivity < f.min_connectivity) continue;
        if (f.order_mod_8 && a.record.n % 8 != 0) continue;
        if (f.alpha_equals_3n8) {
            if (!a.record.alpha || 8 * *a.record.alpha != 3 * a.record.n) continue;
        }
        summary.passed_filters += 1;
        if (a.record.s12 == "skipped") {
            summary.skipped += 1;
            continue;
        }
        if (a.record.s12 != "no") continue;

        Graph g = parse_graph6(a.record.graph6);
        if (g.m <= kOracleEdgeMax) {
            auto confirm = brute_force_decompose(g, 3);
            if (confirm) {
                summary.errors += 1;
                out << "line " << a.record.index
                    << ": oracle disagreement, decide said no but a decomposition exists: "
                    << a.record.graph6 << "\n";
                continue;
            }
            summary.hits += 1;
            out << "hit: " << a.record.graph6 << " n=" << a.record.n
                << " (oracle-confirmed)\n";
        } else {
            summary.hits += 1;
            out << "hit: " << a.record.graph6 << " n=" << a.record.n
                << " (beyond oracle cap, unconfirmed)\n";
        }
    }
    if (summary.hits == 0) out << "none found in corpus\n";
    return summary;
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = trim_right(line);
        if (line.empty()) continue;
        if (line == ">>graph6<<") continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> load_corpus(const std::string& source,
                                     std::uint64_t default_seed) {
    const std::string prefix = "random:";
    if (source.rfind(prefix, 0) == 0) {
        long long n = -1, count = -1;
        std::uint64_t seed = default_seed;
        std::stringstream body(source.substr(prefix.size()));
        std::string item;
        while (std::getline(body, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad generator spec item: " + item);
            std::string key = item.substr(0, eq), value = item.substr(eq + 1);
            try {
                if (key == "n")
                    n = std::stoll(value);
                else if (key == "count")
                    count = std::stoll(value);
                else if (key == "seed")
                    seed = std::stoull(value);
                else
                    throw std::invalid_argument("unknown generator key: " + key);
            } catch (const std::logic_error&) {
                throw std::invalid_argument("bad generator spec value: " + item);
            }
        }
        if (n < 4 || count < 0)
            throw std::invalid_argument("generator spec needs n>=4 and count>=0");
        std::vector<std::string> lines;
        for (long long i = 0; i < count; ++i)
            lines.push_back(encode_graph6(random_cubic(static_cast<int>(n), seed + i)));
        return lines;
    }
    std::ifstream file(source, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open corpus: " + source);
    return read_graph6_lines(file);
}

int run_oracle_compare(const std::vector<std::string>& lines, std::ostream& out,
                       const OracleCompareOptions& opt) {
    auto decide = opt.decide;
    if (!decide) {
        int r = opt.r, cap = opt.scale_max;
        decide = [r, cap](const Graph& g) {
            return r == 3 ? decide_s12(g, cap) : decide_s1r(g, r, cap);
        };
    }
    int compared = 0, skipped = 0, mismatches = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        std::optional<Graph> parsed;
        try {
            parsed = parse_graph6(lines[i]);
        } catch (const std::exception& e) {
            out << "line " << i << ": skipped (" << e.what() << ")\n";
            skipped += 1;
            continue;
        }
        const Graph& g = *parsed;
        if (!is_r_regular(g, opt.r)) {
            out << "line " << i << ": skipped (not "
                << (opt.r == 3 ? "cubic" : "regular of degree " + std::to_string(opt.r))
                << ")\n";
            skipped += 1;
            continue;
        }
        if (g.m > opt.max_edges) {
            out << "line " << i << ": skipped (beyond oracle edge cap)\n";
            skipped += 1;
            continue;
        }
        std::optional<Certificate> fast, slow;
        try {
            fast = decide(g);
        } catch (const ScaleExceeded& e) {
            out << "line " << i << ": skipped (" << e.what() << ")\n";
            skipped += 1;
            continue;
        }
        slow = brute_force_decompose(g, opt.r);
        compared += 1;
        if (fast.has_value() == slow.has_value()) continue;
        mismatches += 1;
        out << "line " << i << ": MISMATCH decide=" << (fast ? "yes" : "no")
            << " oracle=" << (slow ? "yes" : "no") << " graph6=" << lines[i] << "\n";
        if (fast) out << "  decide certificate: " << certificate_to_json(*fast, g.n, opt.r) << "\n";
        if (slow) out << "  oracle certificate: " << certificate_to_json(*slow, g.n, opt.r) << "\n";
    }
    out << "compared " << compared << " graphs, skipped " << skipped << ", mismatches "
        << mismatches << "\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace stardecomp
