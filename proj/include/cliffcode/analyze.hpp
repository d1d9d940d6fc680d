#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "cliffcode/bundle.hpp"
#include "cliffcode/clifford_code.hpp"

namespace cliffcode {

/// Validated run options, shared by the library entry points and the CLI.
/// Defaults: text output, serial execution, no filters, prime search bound
/// 100000, closure bound 100000 elements.
struct RunConfig {
    std::string format = "text"; // text | json | csv
    int jobs = 1;
    int min_dimension = 0;
    bool only_true_clifford = false;
    std::string projector_dir; // empty: no projector emission
    std::uint64_t prime_bound = kDefaultPrimeBound;
    int max_group_order = 100000;

    void validate() const;
};

/// Full pipeline result for one bundle. Owns the closed group so that the
/// subgroup references inside the analyzed codes stay valid.
struct AnalysisReport {
    std::string bundle_name;
    nlohmann::ordered_json metadata;
    std::vector<std::string> generator_names;
    std::shared_ptr<const FiniteGroup> group;
    UnitaryRep rho;
    ErrorGroupCert cert;
    int exponent = 1;
    unsigned ambient_order = 1;
    Subgroup center_subgroup;
    CentralCharacter alpha;
    int normal_subgroup_count = 0;
    std::vector<AnalyzedCode> codes;

    int stabilizer_count() const;
    int true_clifford_count() const;
};

/// verify -> normal subgroups -> character tables -> codes -> classification.
/// Throws InconsistencyError when the certificate fails (the group is not an
/// error group) and InputError on closure problems.
AnalysisReport analyze(const GroupBundle& bundle, const RunConfig& config);

/// Closure + certificate only (the `verify` subcommand).
AnalysisReport verify_only(const GroupBundle& bundle, const RunConfig& config);

bool code_passes_filters(const AnalyzedCode& code, const RunConfig& config);

nlohmann::ordered_json certificate_json(const AnalysisReport& report);
nlohmann::ordered_json code_record_json(const AnalysisReport& report, const AnalyzedCode& code,
                                        int index);
nlohmann::ordered_json report_json(const AnalysisReport& report, const RunConfig& config);
std::string report_text(const AnalysisReport& report, const RunConfig& config);
std::string report_csv(const AnalysisReport& report, const RunConfig& config);

/// Writes one JSON file per passing code into config.projector_dir.
void emit_projectors(const AnalysisReport& report, const RunConfig& config);

/// One row of the survey table: the condensed per-code columns plus the
/// verdict.
struct SurveyRow {
    int group_order = 0;
    std::string group_name;
    int phi_degree = 0;
    int normal_order = 0;
    int chi_degree = 0;
    int dim_q = 0;
    std::string verdict;

    auto key() const {
        return std::tie(group_order, group_name, normal_order, chi_degree, dim_q, phi_degree,
                        verdict);
    }
};

struct SurveyResult {
    std::vector<SurveyRow> rows;          // sorted, deduplicated
    std::vector<std::string> errors;      // "path: message" per failed bundle
    int bundles_analyzed = 0;
};

/// Analyzes every bundle (config.jobs workers), aggregates rows of codes
/// passing the filters, dedupes identical rows. Per-bundle failures are
/// collected, not fatal.
SurveyResult survey(const std::vector<std::filesystem::path>& bundle_paths,
                    const RunConfig& config);

/// All *.json files in the directory, sorted by filename.
std::vector<std::filesystem::path> bundle_files_in(const std::filesystem::path& dir);

std::string survey_text(const SurveyResult& result);
std::string survey_csv(const SurveyResult& result);
nlohmann::ordered_json survey_json(const SurveyResult& result);

} // namespace cliffcode
