#include "cliffcode/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace cliffcode {

using nlohmann::ordered_json;

void RunConfig::validate() const {
    if (format != "text" && format != "json" && format != "csv")
        throw InputError("unknown output format '" + format + "' (expected text, json or csv)");
    if (jobs < 1) throw InputError("job count must be at least 1");
    if (min_dimension < 0) throw InputError("minimum code dimension cannot be negative");
    if (max_group_order < 1) throw InputError("closure bound must be positive");
}

int AnalysisReport::stabilizer_count() const {
    int n = 0;
    for (const AnalyzedCode& c : codes)
        if (c.verdict.kind == ClassificationVerdict::Kind::stabilizer) ++n;
    return n;
}

int AnalysisReport::true_clifford_count() const {
    return static_cast<int>(codes.size()) - stabilizer_count();
}

namespace {

AnalysisReport close_and_verify(const GroupBundle& bundle, const RunConfig& config) {
    config.validate();
    AnalysisReport report;
    report.bundle_name = bundle.name;
    report.metadata = bundle.metadata;
    report.generator_names = bundle.generator_names();
    report.group = std::make_shared<FiniteGroup>(
        close_generators(bundle.generators, config.max_group_order));
    report.rho = UnitaryRep::natural(*report.group);
    report.cert = verify_error_group(*report.group, report.rho);
    report.exponent = report.group->exponent();
    report.ambient_order = report.group->ambient_order();
    report.center_subgroup = center(*report.group);
    return report;
}

} // namespace

AnalysisReport verify_only(const GroupBundle& bundle, const RunConfig& config) {
    return close_and_verify(bundle, config);
}

AnalysisReport analyze(const GroupBundle& bundle, const RunConfig& config) {
    AnalysisReport report = close_and_verify(bundle, config);
    if (!report.cert.valid())
        throw InconsistencyError(bundle.name + ": not an error group (faithful=" +
                                 std::to_string(report.cert.faithful) + ", irreducible=" +
                                 std::to_string(report.cert.irreducible) + ", d^2=[G:Z]=" +
                                 std::to_string(report.cert.degree_squared_equals_index) + ")");
    if (report.cert.degree < 2)
        throw InconsistencyError(bundle.name +
                                 ": not an error group (the representation is one-dimensional, "
                                 "so the error set is trivial)");
    report.alpha = central_character(report.rho, report.center_subgroup);

    std::vector<CliffordCode> codes =
        enumerate_codes(*report.group, report.rho, config.prime_bound);
    report.codes.reserve(codes.size());
    // Every normal subgroup restricts phi nontrivially, so the distinct N
    // among the enumerated codes are exactly the normal subgroups.
    std::vector<std::vector<int>> seen_normals;
    for (CliffordCode& code : codes) {
        if (seen_normals.empty() || seen_normals.back() != code.normal.members())
            seen_normals.push_back(code.normal.members());
        report.codes.push_back(
            analyze_code(code, report.rho, report.alpha, report.center_subgroup));
    }
    report.normal_subgroup_count = static_cast<int>(seen_normals.size());
    return report;
}

bool code_passes_filters(const AnalyzedCode& code, const RunConfig& config) {
    if (config.only_true_clifford &&
        code.verdict.kind != ClassificationVerdict::Kind::true_clifford)
        return false;
    return code.original.dim_q >= config.min_dimension;
}

namespace {

std::string verdict_name(const ClassificationVerdict& v) {
    return v.kind == ClassificationVerdict::Kind::stabilizer ? "stabilizer" : "true_clifford";
}

std::string rational_str(const Rational& r) { return r.str(); }

std::vector<std::string> subgroup_words(const AnalysisReport& report, const Subgroup& s) {
    std::vector<std::string> words;
    for (int g : s.gens()) words.push_back(report.group->word(g, report.generator_names));
    if (words.empty()) words.push_back("1");
    return words;
}

ordered_json values_json(const std::vector<Cyclotomic>& values) {
    ordered_json out = ordered_json::array();
    for (const Cyclotomic& v : values) out.push_back(cyclotomic_to_terms(v));
    return out;
}

} // namespace

ordered_json certificate_json(const AnalysisReport& report) {
    ordered_json j;
    j["bundle"] = report.bundle_name;
    j["group_order"] = report.group->order();
    j["degree"] = report.cert.degree;
    j["center_order"] = report.cert.center_order;
    j["index"] = report.cert.index;
    j["faithful"] = report.cert.faithful;
    j["irreducible"] = report.cert.irreducible;
    j["degree_squared_equals_index"] = report.cert.degree_squared_equals_index;
    j["valid"] = report.cert.valid() && report.cert.degree >= 2;
    j["exponent"] = report.exponent;
    j["ambient_order"] = report.ambient_order;
    return j;
}

ordered_json code_record_json(const AnalysisReport& report, const AnalyzedCode& code, int index) {
    const FiniteGroup& g = *report.group;
    ordered_json j;
    j["index"] = index;
    j["normal_order"] = code.original.normal.order();
    j["normal_generator_words"] = subgroup_words(report, code.original.normal);
    j["chi_degree"] = code.original.chi.degree;
    j["chi_value_order"] =
        code.original.chi.values.empty() ? 1 : code.original.chi.values[0].order();
    j["chi_values"] = values_json(code.original.chi.values);
    {
        ordered_json reps = ordered_json::array();
        ordered_json sizes = ordered_json::array();
        for (std::size_t c = 0; c < code.original.classes.classes.size(); ++c) {
            reps.push_back(g.word(code.original.classes.representatives[c],
                                  report.generator_names));
            sizes.push_back(code.original.classes.classes[c].size());
        }
        j["class_representative_words"] = std::move(reps);
        j["class_sizes"] = std::move(sizes);
    }
    j["multiplicity"] = code.original.multiplicity;
    j["dimQ"] = code.original.dim_q;
    j["extension_changed"] = code.extension_changed;
    j["extended_normal_order"] = code.extended.normal.order();
    j["inertia_order"] = code.inertia.inertia.order();
    j["quasikernel_order"] = code.inertia.quasikernel.order();
    j["verdict"] = verdict_name(code.verdict);
    if (code.verdict.witness.has_value()) {
        const StabilizerWitness& w = *code.verdict.witness;
        ordered_json witness;
        witness["stabilizer_order"] = w.stabilizer.order();
        witness["stabilizer_generator_words"] = subgroup_words(report, w.stabilizer);
        witness["stabilizer_member_indices"] = w.stabilizer.members();
        ordered_json member_words = ordered_json::array();
        for (int m : w.stabilizer.members())
            member_words.push_back(g.word(m, report.generator_names));
        witness["stabilizer_member_words"] = std::move(member_words);
        witness["theta_values"] = values_json(w.theta);
        j["witness"] = std::move(witness);
    } else {
        ordered_json evidence = ordered_json::array();
        for (const CandidateEvidence& ev : code.verdict.evidence) {
            ordered_json e;
            e["A_order"] = ev.a_order;
            e["A_cap_center_order"] = ev.a_cap_center_order;
            e["contains_center"] = ev.contains_center;
            e["stabilizer_dim"] = rational_str(ev.stabilizer_dim);
            e["N_over_A"] = rational_str(ev.n_over_a);
            e["G_over_A"] = rational_str(ev.g_over_a);
            evidence.push_back(std::move(e));
        }
        j["evidence"] = std::move(evidence);
        j["chi_degree_squared"] = code.extended.chi.degree * code.extended.chi.degree;
    }
    DetectabilityCensus census = detectability_census(g, code.inertia);
    j["undetectable_count"] = census.undetectable;
    return j;
}

ordered_json report_json(const AnalysisReport& report, const RunConfig& config) {
    ordered_json j;
    j["certificate"] = certificate_json(report);
    j["metadata"] = report.metadata;
    j["normal_subgroup_count"] = report.normal_subgroup_count;
    ordered_json codes = ordered_json::array();
    int index = 0;
    int emitted = 0;
    for (const AnalyzedCode& code : report.codes) {
        if (code_passes_filters(code, config)) {
            codes.push_back(code_record_json(report, code, index));
            ++emitted;
        }
        ++index;
    }
    j["codes"] = std::move(codes);
    j["summary"] = ordered_json{{"code_count", report.codes.size()},
                                {"emitted", emitted},
                                {"stabilizer_count", report.stabilizer_count()},
                                {"true_clifford_count", report.true_clifford_count()}};
    return j;
}

std::string report_text(const AnalysisReport& report, const RunConfig& config) {
    std::ostringstream out;
    const ErrorGroupCert& c = report.cert;
    out << "bundle " << report.bundle_name << ": |G| = " << report.group->order()
        << ", degree " << c.degree << ", |Z(G)| = " << c.center_order << ", exponent "
        << report.exponent << ", ambient Q(zeta_" << report.ambient_order << ")\n";
    out << "certificate: faithful=" << (c.faithful ? "yes" : "no")
        << " irreducible=" << (c.irreducible ? "yes" : "no")
        << " d^2=[G:Z]=" << (c.degree_squared_equals_index ? "yes" : "no") << "\n";
    out << "normal subgroups: " << report.normal_subgroup_count << ", codes: "
        << report.codes.size() << " (" << report.stabilizer_count() << " stabilizer, "
        << report.true_clifford_count() << " true Clifford)\n";
    out << "  idx |  |N| | chi(1) | mult | dimQ |  |T| | |Z(th)| | undet | verdict\n";
    int index = 0;
    for (const AnalyzedCode& code : report.codes) {
        if (!code_passes_filters(code, config)) {
            ++index;
            continue;
        }
        DetectabilityCensus census = detectability_census(*report.group, code.inertia);
        out << std::setw(5) << index << " |" << std::setw(5) << code.original.normal.order()
            << " |" << std::setw(7) << code.original.chi.degree << " |" << std::setw(5)
            << code.original.multiplicity << " |" << std::setw(5) << code.original.dim_q << " |"
            << std::setw(5) << code.inertia.inertia.order() << " |" << std::setw(8)
            << code.inertia.quasikernel.order() << " |" << std::setw(6) << census.undetectable
            << " | " << verdict_name(code.verdict) << "\n";
        ++index;
    }
    return out.str();
}

std::string report_csv(const AnalysisReport& report, const RunConfig& config) {
    std::ostringstream out;
    out << "index,normal_order,chi_degree,multiplicity,dimQ,inertia_order,quasikernel_order,"
           "undetectable,verdict\n";
    int index = 0;
    for (const AnalyzedCode& code : report.codes) {
        if (!code_passes_filters(code, config)) {
            ++index;
            continue;
        }
        DetectabilityCensus census = detectability_census(*report.group, code.inertia);
        out << index << "," << code.original.normal.order() << "," << code.original.chi.degree
            << "," << code.original.multiplicity << "," << code.original.dim_q << ","
            << code.inertia.inertia.order() << "," << code.inertia.quasikernel.order() << ","
            << census.undetectable << "," << verdict_name(code.verdict) << "\n";
        ++index;
    }
    return out.str();
}

void emit_projectors(const AnalysisReport& report, const RunConfig& config) {
    if (config.projector_dir.empty()) return;
    std::filesystem::path dir(config.projector_dir);
    std::filesystem::create_directories(dir);
    int index = 0;
    for (const AnalyzedCode& code : report.codes) {
        if (!code_passes_filters(code, config)) {
            ++index;
            continue;
        }
        ordered_json j;
        j["bundle"] = report.bundle_name;
        j["code_index"] = index;
        j["cyclotomic_order"] = code.original.projector.order();
        j["rows"] = code.original.projector.rows();
        j["cols"] = code.original.projector.cols();
        j["entries"] = matrix_to_json(code.original.projector);
        std::filesystem::path file =
            dir / (report.bundle_name + "_code" + std::to_string(index) + ".json");
        std::ofstream out(file);
        if (!out) throw InputError("cannot write projector file " + file.string());
        out << j.dump(2) << "\n";
        ++index;
    }
}

std::vector<std::filesystem::path> bundle_files_in(const std::filesystem::path& dir) {
    if (!std::filesystem::exists(dir) || !std::filesystem::is_directory(dir))
        throw InputError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

SurveyResult survey(const std::vector<std::filesystem::path>& bundle_paths,
                    const RunConfig& config) {
    config.validate();
    SurveyResult result;
    std::vector<std::vector<SurveyRow>> per_bundle(bundle_paths.size());
    std::vector<std::string> per_bundle_error(bundle_paths.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= bundle_paths.size()) break;
            try {
                GroupBundle bundle = load_bundle(bundle_paths[i]);
                AnalysisReport report = analyze(bundle, config);
                for (const AnalyzedCode& code : report.codes) {
                    if (!code_passes_filters(code, config)) continue;
                    SurveyRow row;
                    row.group_order = report.group->order();
                    row.group_name = report.bundle_name;
                    row.phi_degree = report.cert.degree;
                    row.normal_order = code.original.normal.order();
                    row.chi_degree = code.original.chi.degree;
                    row.dim_q = code.original.dim_q;
                    row.verdict = verdict_name(code.verdict);
                    per_bundle[i].push_back(std::move(row));
                }
            } catch (const std::exception& e) {
                per_bundle_error[i] = bundle_paths[i].string() + ": " + e.what();
            }
        }
    };

    int nthreads = std::min<int>(config.jobs, static_cast<int>(bundle_paths.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    for (std::size_t i = 0; i < bundle_paths.size(); ++i) {
        if (!per_bundle_error[i].empty()) {
            result.errors.push_back(per_bundle_error[i]);
            continue;
        }
        ++result.bundles_analyzed;
        result.rows.insert(result.rows.end(), per_bundle[i].begin(), per_bundle[i].end());
    }
    std::sort(result.rows.begin(), result.rows.end(),
              [](const SurveyRow& a, const SurveyRow& b) { return a.key() < b.key(); });
    result.rows.erase(std::unique(result.rows.begin(), result.rows.end(),
                                  [](const SurveyRow& a, const SurveyRow& b) {
                                      return a.key() == b.key();
                                  }),
                      result.rows.end());
    return result;
}

std::string survey_text(const SurveyResult& result) {
    std::ostringstream out;
    out << " |G| | group     | phi(1) |  |N| | chi(1) | dim Q | verdict\n";
    for (const SurveyRow& row : result.rows)
        out << std::setw(4) << row.group_order << " | " << std::setw(9) << row.group_name
            << " |" << std::setw(7) << row.phi_degree << " |" << std::setw(5) << row.normal_order
            << " |" << std::setw(7) << row.chi_degree << " |" << std::setw(6) << row.dim_q
            << " | " << row.verdict << "\n";
    out << "(" << result.rows.size() << " rows from " << result.bundles_analyzed
        << " bundles)\n";
    return out.str();
}

std::string survey_csv(const SurveyResult& result) {
    std::ostringstream out;
    out << "group_order,group_name,phi_degree,normal_order,chi_degree,dimQ,verdict\n";
    for (const SurveyRow& row : result.rows)
        out << row.group_order << "," << row.group_name << "," << row.phi_degree << ","
            << row.normal_order << "," << row.chi_degree << "," << row.dim_q << ","
            << row.verdict << "\n";
    return out.str();
}

ordered_json survey_json(const SurveyResult& result) {
    ordered_json rows = ordered_json::array();
    for (const SurveyRow& row : result.rows)
        rows.push_back(ordered_json{{"group_order", row.group_order},
                                    {"group_name", row.group_name},
                                    {"phi_degree", row.phi_degree},
                                    {"normal_order", row.normal_order},
                                    {"chi_degree", row.chi_degree},
                                    {"dimQ", row.dim_q},
                                    {"verdict", row.verdict}});
    ordered_json j;
    j["rows"] = std::move(rows);
    j["bundles_analyzed"] = result.bundles_analyzed;
    j["errors"] = result.errors;
    return j;
}

} // namespace cliffcode
