#pragma once

#include "syscow/bivector.hpp"
#include "syscow/bounds.hpp"
#include "syscow/combination.hpp"
#include "syscow/flat_model.hpp"
#include "syscow/lattice.hpp"
#include "syscow/norms.hpp"

#include <json.hpp>

#include <string>

namespace syscow::io {

using json = nlohmann::json;

json load_json_file(const std::string& path);

/// Accepts integers and "p/q" strings. Floating JSON numbers are rejected
/// so exact inputs stay exact.
Rat rat_from_json(const json& j);
json rat_to_json(const Rat& q);

Eigen::MatrixXd double_matrix_from_json(const json& j);
json double_matrix_to_json(const Eigen::MatrixXd& m);

/// {"basis": [[...]]}; rows of the array are matrix rows, columns are the
/// lattice basis vectors.
Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& lattice);

/// {"kind": "euclidean" | "l1" | "linf" | "lp" | "polytope" |
///  "polytope_dual" | "mass" | "comass", ...}
NormOracle norm_from_json(const json& j);
json norm_to_json(const NormOracle& norm);

/// {"matrix": [[...]]} antisymmetric coefficient matrix.
Bivector bivector_from_json(const json& j, Variance variance);

/// Square JSON array of integer rows; columns are the basis vectors.
IntegerBasis integer_basis_from_json(const json& j);

/// {"spheres": [r1, ...], "torus": {"gram": [[...]]}}; both parts optional
/// but not simultaneously absent.
ProductModel model_from_json(const json& j);
FlatTorusMetric torus_from_json(const json& j);

json bound_to_json(const SymbolicBound& bound);
json trace_to_json(const DerivationTrace& trace);
json report_to_json(const BoundReport& report);
json minima_to_json(const MinimaResult& result);
json combination_to_json(const CombinationResult& result);
json h2class_to_json(const H2Class& cls);
json systole_to_json(const SystoleResult& result);
json gamma_search_to_json(const GammaSearchResult& result);
json decomposition_to_json(const CanonicalDecomposition& decomposition);

} // namespace syscow::io
