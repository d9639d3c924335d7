#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stardecomp/survey.hpp"

namespace {

int cmd_check(const std::string& line, const stardecomp::CheckOptions& opt) {
    return stardecomp::run_check(line, std::cout, opt);
}

int cmd_survey(const std::string& corpus_path, const std::string& out_path,
               const stardecomp::SurveyOptions& opt) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (corpus_path != "-") {
        file.open(corpus_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open corpus: " << corpus_path << "\n";
            return 2;
        }
        in = &file;
    }
    stardecomp::SurveySummary summary;
    if (out_path.empty()) {
        summary = stardecomp::run_survey(*in, std::cout, opt);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output: " << out_path << "\n";
            return 2;
        }
        summary = stardecomp::run_survey(*in, out, opt);
    }
    std::cerr << "surveyed " << summary.total << " graphs: yes=" << summary.yes
              << " no=" << summary.no << " skipped=" << summary.skipped
              << " errors=" << summary.errors << "\n";
    return 0;
}

int cmd_hunt(const std::string& source, std::uint64_t seed,
             const stardecomp::HuntOptions& opt) {
    std::vector<std::string> lines;
    try {
        lines = stardecomp::load_corpus(source, seed);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    stardecomp::HuntSummary summary = stardecomp::run_hunt(lines, std::cout, opt);
    std::cerr << "scanned " << summary.scanned << ", passed filters "
              << summary.passed_filters << ", hits " << summary.hits << ", skipped "
              << summary.skipped << ", errors " << summary.errors << "\n";
    return 0;
}

int cmd_oracle_compare(const std::string& source, std::uint64_t seed,
                       const stardecomp::OracleCompareOptions& opt) {
    std::vector<std::string> lines;
    try {
        lines = stardecomp::load_corpus(source, seed);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return stardecomp::run_oracle_compare(lines, std::cout, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-star decomposition toolkit for cubic and regular graphs"};
    app.require_subcommand(1);
    int scale_max = stardecomp::scale_max_from_env();

    auto* check = app.add_subcommand("check", "Decide one graph6 line");
    std::string check_line;
    stardecomp::CheckOptions check_opt;
    check_opt.scale_max = scale_max;
    check->add_option("graph6", check_line, "graph6-encoded graph")->required();
    check->add_option("--r", check_opt.r, "star degree r (S_{1,r-1})")
        ->default_val(3)
        ->check(CLI::Range(3, 16));
    check->add_flag("--emit-cert", check_opt.emit_cert, "print or write the certificate");
    check->add_option("--out", check_opt.cert_out, "certificate output path");
    check->add_flag("--json", check_opt.json, "append a JSONL record");

    auto* survey = app.add_subcommand("survey", "Run the decision over a corpus file");
    std::string survey_path, survey_out;
    stardecomp::SurveyOptions survey_opt;
    survey_opt.scale_max = scale_max;
    survey->add_option("corpus", survey_path, "graph6 file, or - for stdin")->required();
    survey->add_option("--out", survey_out, "JSONL output path (default stdout)");
    survey->add_option("--jobs", survey_opt.jobs, "worker threads")->default_val(1);
    survey->add_flag("--emit-cert", survey_opt.emit_cert, "write sidecar certificates");
    survey->add_option("--cert-dir", survey_opt.cert_dir,
                       "directory for <index>.cert.json files");

    auto* hunt = app.add_subcommand("hunt", "Search a corpus for non-decomposable graphs");
    std::string hunt_source;
    std::uint64_t hunt_seed = 1;
    stardecomp::HuntOptions hunt_opt;
    hunt_opt.scale_max = scale_max;
    hunt->add_option("corpus", hunt_source,
                     "graph6 file or random:n=<N>,count=<C>,seed=<S>")
        ->required();
    hunt->add_option("--jobs", hunt_opt.jobs, "worker threads")->default_val(1);
    hunt->add_option("--seed", hunt_seed, "default seed for the generator spec");
    hunt->add_flag("--triangle-free", hunt_opt.filters.triangle_free,
                   "keep triangle-free graphs only");
    hunt->add_flag("--bipartite", hunt_opt.filters.bipartite, "keep bipartite graphs only");
    hunt->add_option("--min-connectivity", hunt_opt.filters.min_connectivity,
                     "minimum vertex connectivity");
    hunt->add_flag("--order-mod-8", hunt_opt.filters.order_mod_8, "keep orders divisible by 8");
    hunt->add_flag("--alpha-equals-3n8", hunt_opt.filters.alpha_equals_3n8,
                   "keep graphs with independence number exactly 3n/8");

    auto* compare = app.add_subcommand("oracle-compare",
                                       "Cross-check the decision against brute force");
    std::string compare_source;
    std::uint64_t compare_seed = 1;
    stardecomp::OracleCompareOptions compare_opt;
    compare_opt.scale_max = scale_max;
    compare->add_option("corpus", compare_source,
                        "graph6 file or random:n=<N>,count=<C>,seed=<S>")
        ->required();
    compare->add_option("--r", compare_opt.r, "star degree r")
        ->default_val(3)
        ->check(CLI::Range(3, 16));
    compare->add_option("--max-edges", compare_opt.max_edges, "oracle edge cap")
        ->default_val(stardecomp::kOracleEdgeMax);
    compare->add_option("--seed", compare_seed, "default seed for the generator spec");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return cmd_check(check_line, check_opt);
    if (survey->parsed()) return cmd_survey(survey_path, survey_out, survey_opt);
    if (hunt->parsed()) return cmd_hunt(hunt_source, hunt_seed, hunt_opt);
    if (compare->parsed()) return cmd_oracle_compare(compare_source, compare_seed, compare_opt);
    return 1;
}
