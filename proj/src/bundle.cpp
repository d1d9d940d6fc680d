#include "cliffcode/bundle.hpp"

#include <fstream>

namespace cliffcode {

using nlohmann::ordered_json;

std::vector<std::string> GroupBundle::generator_names() const {
    std::vector<std::string> names;
    if (metadata.contains("generator_names") && metadata["generator_names"].is_array())
        for (const auto& n : metadata["generator_names"]) names.push_back(n.get<std::string>());
    while (names.size() < generators.size()) names.push_back("g" + std::to_string(names.size()));
    names.resize(generators.size());
    return names;
}

ordered_json cyclotomic_to_terms(const Cyclotomic& value) {
    ordered_json terms = ordered_json::array();
    for (std::size_t t = 0; t < value.coeffs().size(); ++t) {
        const Rational& c = value.coeffs()[t];
        if (c == 0) continue;
        terms.push_back({to_int64(numerator(c)), to_int64(denominator(c)),
                         static_cast<std::int64_t>(t)});
    }
    return terms;
}

Cyclotomic cyclotomic_from_terms(const ordered_json& terms, unsigned order) {
    if (!terms.is_array()) throw InputError("cyclotomic entry must be a list of terms");
    std::vector<std::pair<Rational, long long>> parsed;
    for (const auto& term : terms) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
            !term[1].is_number_integer() || !term[2].is_number_integer())
            throw InputError("term must be [numerator, denominator, power] with integers");
        long long num = term[0].get<long long>();
        long long den = term[1].get<long long>();
        long long power = term[2].get<long long>();
        if (den <= 0) throw InputError("term denominator must be positive");
        parsed.emplace_back(Rational(BigInt(num), BigInt(den)), power);
    }
    return Cyclotomic::from_terms(order, parsed);
}

ordered_json matrix_to_json(const CycMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cyclotomic_to_terms(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CycMatrix matrix_from_json(const ordered_json& rows, unsigned order) {
    if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a non-empty row list");
    const int r = static_cast<int>(rows.size());
    if (!rows[0].is_array() || rows[0].empty())
        throw InputError("matrix rows must be non-empty lists");
    const int c = static_cast<int>(rows[0].size());
    CycMatrix m(r, c, order);
    for (int i = 0; i < r; ++i) {
        if (!rows[static_cast<std::size_t>(i)].is_array() ||
            static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw InputError("matrix row " + std::to_string(i) + " has inconsistent length");
        for (int j = 0; j < c; ++j)
            m.set(i, j,
                  cyclotomic_from_terms(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                        order));
    }
    return m;
}

ordered_json bundle_to_json(const GroupBundle& bundle) {
    ordered_json j;
    j["name"] = bundle.name;
    j["metadata"] = bundle.metadata.is_null() ? ordered_json::object() : bundle.metadata;
    j["cyclotomic_order"] = bundle.cyclotomic_order;
    j["degree"] = bundle.degree;
    ordered_json gens = ordered_json::array();
    for (const CycMatrix& g : bundle.generators) gens.push_back(matrix_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

GroupBundle bundle_from_json(const ordered_json& j, const std::string& origin) {
    auto fail = [&origin](const std::string& what) -> InputError {
        return InputError(origin + ": " + what);
    };
    if (!j.is_object()) throw fail("bundle must be a JSON object");
    GroupBundle b;
    if (!j.contains("name") || !j["name"].is_string()) throw fail("missing string field 'name'");
    b.name = j["name"].get<std::string>();
    b.metadata = j.value("metadata", ordered_json::object());
    if (!j.contains("cyclotomic_order") || !j["cyclotomic_order"].is_number_unsigned())
        throw fail("missing positive integer field 'cyclotomic_order'");
    b.cyclotomic_order = j["cyclotomic_order"].get<unsigned>();
    if (b.cyclotomic_order == 0) throw fail("'cyclotomic_order' must be positive");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw fail("missing integer field 'degree'");
    b.degree = j["degree"].get<int>();
    if (b.degree <= 0) throw fail("'degree' must be positive");
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw fail("'generators' must be a non-empty list");
    for (std::size_t k = 0; k < j["generators"].size(); ++k) {
        CycMatrix m;
        try {
            m = matrix_from_json(j["generators"][k], b.cyclotomic_order);
        } catch (const InputError& e) {
            throw fail("generator " + std::to_string(k) + ": " + e.what());
        }
        if (m.rows() != b.degree || m.cols() != b.degree)
            throw fail("generator " + std::to_string(k) + " is not " + std::to_string(b.degree) +
                       "x" + std::to_string(b.degree));
        if (!m.is_unitary())
            throw fail("generator " + std::to_string(k) + " is not unitary");
        b.generators.push_back(std::move(m));
    }
    return b;
}

GroupBundle load_bundle(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open bundle file " + path.string());
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string() + ": JSON parse error: " + e.what());
    }
    return bundle_from_json(j, path.string());
}

void save_bundle(const GroupBundle& bundle, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write bundle file " + path.string());
    out << bundle_to_json(bundle).dump(2) << "\n";
}

namespace {

CycMatrix int_matrix(const std::vector<std::vector<int>>& rows, unsigned order) {
    CycMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), order);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(static_cast<int>(i), static_cast<int>(j),
                  Cyclotomic(Rational(rows[i][j]), order));
    return m;
}

} // namespace

GroupBundle make_example1() {
    GroupBundle b;
    b.name = "example1";
    b.metadata = ordered_json{{"catalog_id", "SmallGroup(32,6)"},
                              {"generator_names", {"a", "ab"}},
                              {"description",
                               "order-32 error group whose degree-2 code is a stabilizer code"}};
    b.cyclotomic_order = 4;
    b.degree = 4;
    b.generators.push_back(
        int_matrix({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}, 4));
    b.generators.push_back(
        int_matrix({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}, 4));
    return b;
}

GroupBundle make_example2() {
    GroupBundle b;
    b.name = "example2";
    b.metadata = ordered_json{{"catalog_id", "SmallGroup(216,66)"},
                              {"generator_names", {"A", "B", "C"}},
                              {"description",
                               "order-216 error group carrying a 3-dimensional code that is "
                               "not a stabilizer code"}};
    b.cyclotomic_order = 12;
    b.degree = 6;
    b.generators.push_back(int_matrix({{0, 1, 0, 0, 0, 0},
                                       {0, 0, 1, 0, 0, 0},
                                       {1, 0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0, 1},
                                       {0, 0, 0, 1, 0, 0},
                                       {0, 0, 0, 0, 1, 0}},
                                      12));
    CycMatrix diag(6, 6, 12);
    const long long powers[6] = {3, 7, 11, 9, 5, 1}; // w^3, w^7, w^11, -w^3, -w^11, -w^7
    for (int i = 0; i < 6; ++i) diag.set(i, i, Cyclotomic::root_of_unity(12, powers[i]));
    b.generators.push_back(std::move(diag));
    b.generators.push_back(int_matrix({{0, 0, 0, 1, 0, 0},
                                       {0, 0, 0, 0, 1, 0},
                                       {0, 0, 0, 0, 0, 1},
                                       {-1, 0, 0, 0, 0, 0},
                                       {0, -1, 0, 0, 0, 0},
                                       {0, 0, -1, 0, 0, 0}},
                                      12));
    return b;
}

GroupBundle make_pauli_bundle(int qubits) {
    if (qubits < 1 || qubits > 3)
        throw InputError("pauli bundle supports 1 to 3 qubits (group order up to 255)");
    GroupBundle b;
    b.name = "pauli" + std::to_string(qubits);
    b.cyclotomic_order = 4;
    b.degree = 1 << qubits;
    ordered_json names = ordered_json::array();
    CycMatrix x = int_matrix({{0, 1}, {1, 0}}, 4);
    CycMatrix z = int_matrix({{1, 0}, {0, -1}}, 4);
    for (int pos = 0; pos < qubits; ++pos)
        for (int which = 0; which < 2; ++which) {
            CycMatrix m = CycMatrix::identity(1, 4);
            for (int q = 0; q < qubits; ++q)
                m = CycMatrix::kron(m, q == pos ? (which == 0 ? x : z) : CycMatrix::identity(2, 4));
            b.generators.push_back(std::move(m));
            names.push_back((which == 0 ? "X" : "Z") + std::to_string(pos + 1));
        }
    b.metadata = ordered_json{{"catalog_id", "extraspecial 2-group of order " +
                                                 std::to_string(1 << (2 * qubits + 1))},
                              {"generator_names", names}};
    return b;
}

} // namespace cliffcode
