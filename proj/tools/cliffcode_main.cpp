// cliffcode: construct Clifford codes from finite error-group bundles and
// decide, exactly, whether each one is a stabilizer code.
//
// Exit codes: 0 success, 1 verification or classification inconsistency,
// 2 input error.

#include <CLI11.hpp>

#include <iostream>

#include "cliffcode/analyze.hpp"

using namespace cliffcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistency = 1;
constexpr int kExitInput = 2;

void add_common_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--format", config.format, "Output format: text, json or csv")
        ->default_val("text");
    cmd->add_option("--jobs", config.jobs, "Parallel worker count")->default_val(1);
    cmd->add_option("--min-dim", config.min_dimension, "Only report codes of at least this dimension")
        ->default_val(0);
    cmd->add_flag("--only-true-clifford", config.only_true_clifford,
                  "Only report codes that are not stabilizer codes");
    cmd->add_option("--prime-bound", config.prime_bound,
                    "Search bound for the character-table prime")
        ->default_val(kDefaultPrimeBound);
    cmd->add_option("--max-order", config.max_group_order,
                    "Abort closure beyond this group order")
        ->default_val(100000);
}

int run_verify(const std::string& path, const RunConfig& config) {
    GroupBundle bundle = load_bundle(path);
    AnalysisReport report = verify_only(bundle, config);
    std::cout << certificate_json(report).dump(2) << "\n";
    bool accepted = report.cert.valid() && report.cert.degree >= 2;
    if (!accepted) {
        std::cerr << "verification failed: " << bundle.name << " is not an error group\n";
        return kExitInconsistency;
    }
    return kExitOk;
}

int run_analyze(const std::string& path, const RunConfig& config) {
    GroupBundle bundle = load_bundle(path);
    AnalysisReport report = analyze(bundle, config);
    if (config.format == "json")
        std::cout << report_json(report, config).dump(2) << "\n";
    else if (config.format == "csv")
        std::cout << report_csv(report, config);
    else
        std::cout << report_text(report, config);
    if (!config.projector_dir.empty()) emit_projectors(report, config);
    return kExitOk;
}

int run_inspect(const std::string& path, int normal_index, int char_index,
                const RunConfig& config) {
    GroupBundle bundle = load_bundle(path);
    AnalysisReport report = analyze(bundle, config);

    std::vector<Subgroup> normals = normal_subgroups(*report.group);
    if (normal_index < 0 || normal_index >= static_cast<int>(normals.size()))
        throw InputError("--normal index out of range; the group has " +
                         std::to_string(normals.size()) + " normal subgroups");
    const Subgroup& n = normals[static_cast<std::size_t>(normal_index)];
    CharacterTable table = character_table(n, config.prime_bound);
    if (char_index < 0 || char_index >= static_cast<int>(table.characters.size()))
        throw InputError("--char index out of range; the subgroup has " +
                         std::to_string(table.characters.size()) + " irreducible characters");

    // locate the matching analyzed code, if chi is a constituent
    int index = 0;
    for (const AnalyzedCode& code : report.codes) {
        if (code.original.normal == n &&
            code.original.chi.values == table.characters[static_cast<std::size_t>(char_index)].values) {
            nlohmann::ordered_json j = code_record_json(report, code, index);
            j["projector"] = matrix_to_json(code.original.projector);
            j["projector_order"] = code.original.projector.order();
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
        ++index;
    }
    throw InputError("character " + std::to_string(char_index) + " of normal subgroup " +
                     std::to_string(normal_index) +
                     " is not a constituent of the restriction; no code to inspect");
}

int run_survey(const std::string& dir, const RunConfig& config) {
    SurveyResult result = survey(bundle_files_in(dir), config);
    for (const std::string& err : result.errors) std::cerr << "survey: " << err << "\n";
    if (config.format == "json")
        std::cout << survey_json(result).dump(2) << "\n";
    else if (config.format == "csv")
        std::cout << survey_csv(result);
    else
        std::cout << survey_text(result);
    return kExitOk;
}

int run_make_pauli(int qubits, const std::string& out_path) {
    GroupBundle bundle = make_pauli_bundle(qubits);
    save_bundle(bundle, out_path);
    std::cout << "wrote " << bundle.name << " (degree " << bundle.degree << ") to " << out_path
              << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford code construction and stabilizer classification for finite "
                 "error groups"};
    app.require_subcommand(1);

    RunConfig config;
    std::string bundle_path, dir_path, out_path;
    int normal_index = 0, char_index = 0, qubits = 1;

    CLI::App* verify = app.add_subcommand("verify", "Check the error-group axioms for a bundle");
    verify->add_option("bundle", bundle_path, "Bundle JSON file")->required();
    add_common_options(verify, config);

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Enumerate and classify every code of a bundle");
    analyze_cmd->add_option("bundle", bundle_path, "Bundle JSON file")->required();
    analyze_cmd->add_option("--emit-projectors", config.projector_dir,
                            "Write projector matrices into this directory");
    add_common_options(analyze_cmd, config);

    CLI::App* inspect =
        app.add_subcommand("inspect", "Show one code (normal subgroup + character) in detail");
    inspect->add_option("bundle", bundle_path, "Bundle JSON file")->required();
    inspect->add_option("--normal", normal_index, "Index into the sorted normal-subgroup list")
        ->required();
    inspect->add_option("--char", char_index, "Index into the subgroup's character table")
        ->required();
    add_common_options(inspect, config);

    CLI::App* survey_cmd =
        app.add_subcommand("survey", "Aggregate code rows over a directory of bundles");
    survey_cmd->add_option("dir", dir_path, "Directory of bundle JSON files")->required();
    add_common_options(survey_cmd, config);

    CLI::App* make_pauli = app.add_subcommand("make-pauli", "Write an n-qubit Pauli bundle");
    make_pauli->add_option("--qubits", qubits, "Number of qubits (1 to 3)")->required();
    make_pauli->add_option("-o,--output", out_path, "Output bundle path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(bundle_path, config);
        if (analyze_cmd->parsed()) return run_analyze(bundle_path, config);
        if (inspect->parsed()) return run_inspect(bundle_path, normal_index, char_index, config);
        if (survey_cmd->parsed()) return run_survey(dir_path, config);
        if (make_pauli->parsed()) return run_make_pauli(qubits, out_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInconsistency;
    }
    return kExitInput;
}
