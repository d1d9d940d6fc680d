#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffcode/cyc_matrix.hpp"

namespace cliffcode {

/// A group bundle: the on-disk unit of ingestion. Carries the generator
/// matrices of one error group as exact cyclotomic data plus free-form
/// metadata (external catalog identifiers, generator names).
struct GroupBundle {
    std::string name;
    nlohmann::ordered_json metadata; // free-form object
    unsigned cyclotomic_order = 1;
    int degree = 0;
    std::vector<CycMatrix> generators;

    /// Names for report words; falls back to g0, g1, ... when the metadata
    /// carries none.
    std::vector<std::string> generator_names() const;
};

/// Serialization of one cyclotomic value: a list of terms [num, den, power]
/// meaning sum of (num/den) * zeta_order^power, emitted in canonical reduced
/// form sorted by power.
nlohmann::ordered_json cyclotomic_to_terms(const Cyclotomic& value);
Cyclotomic cyclotomic_from_terms(const nlohmann::ordered_json& terms, unsigned order);

nlohmann::ordered_json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const nlohmann::ordered_json& rows, unsigned order);

GroupBundle load_bundle(const std::filesystem::path& path);
void save_bundle(const GroupBundle& bundle, const std::filesystem::path& path);

nlohmann::ordered_json bundle_to_json(const GroupBundle& bundle);
GroupBundle bundle_from_json(const nlohmann::ordered_json& j, const std::string& origin);

/// The two shipped worked-example groups.
GroupBundle make_example1();
GroupBundle make_example2();

/// n-qubit Pauli error basis: generators are the tensor-position X and Z
/// matrices; the closure is extraspecial of order 2^(2n+1). 1 <= n <= 3.
GroupBundle make_pauli_bundle(int qubits);

} // namespace cliffcode
