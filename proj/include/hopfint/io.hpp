#pragma once

#include "hopfint/hopf.hpp"

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfint {

/// Malformed or inconsistent input data (as opposed to a failed
/// mathematical check).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedHopf {
    std::shared_ptr<const HopfAlgebra> hopf;
    std::vector<std::string> basis_labels;
};

/// Hopf algebra interchange schema:
/// {"dim", "conductor", "basis", "unit", "counit",
///  "mult": [[i, j, k, "scalar"], ...], "delta": [[i, j, k, "scalar"], ...],
///  "antipode": [["scalar", ...], ...]}
/// with scalars as comma-joined "p/q" coefficient lists. Triples are emitted
/// in canonical (i, j, k) order so export is deterministic.
nlohmann::ordered_json hopf_to_json(const HopfAlgebra& h, const std::vector<std::string>& labels);
LoadedHopf hopf_from_json(const nlohmann::json& j);

nlohmann::ordered_json cyc_to_json(const CycScalar& a);
CycScalar cyc_from_json(const nlohmann::json& j);

/// {"ambient_dim": n, "basis": [["scalar", ...], ...]}; rows may be any
/// spanning set, the loader canonicalizes.
nlohmann::ordered_json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j, int conductor);

/// {"coeffs": ["scalar", ...]}.
nlohmann::ordered_json functional_to_json(const Functional& f);
Functional functional_from_json(const nlohmann::json& j, int conductor);

std::vector<std::string> default_basis_labels(int dim);

/// FNV-1a hex digest used to stamp reports with their inputs.
std::string digest_hex(const std::string& canonical);

}  // namespace hopfint
