#include "syscow/json_io.hpp"

#include "syscow/errors.hpp"

#include <fstream>

namespace syscow::io {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_number_float())
    throw ValidationError(
        "floating JSON numbers are not accepted where exact rationals are "
        "required; use an integer or a \"p/q\" string");
  throw ValidationError("expected a rational (integer or \"p/q\" string)");
}

json rat_to_json(const Rat& q) { return format_rational(q); }

Eigen::MatrixXd double_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ValidationError("expected a 2D JSON array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw ValidationError("ragged matrix rows in JSON");
    for (int c = 0; c < cols; ++c) {
      const json& cell = j[i][c];
      if (cell.is_string())
        m(i, c) = parse_rational(cell.get<std::string>()).get_d();
      else if (cell.is_number())
        m(i, c) = cell.get<double>();
      else
        throw ValidationError("matrix entries must be numbers");
    }
  }
  return m;
}

json double_matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(row);
  }
  return rows;
}

Lattice lattice_from_json(const json& j) {
  if (!j.contains("basis")) throw ValidationError("config needs a \"basis\" key");
  const json& b = j["basis"];
  if (!b.is_array() || b.empty())
    throw ValidationError("\"basis\" must be a nonempty 2D array");
  const int dim = static_cast<int>(b.size());
  RatMat basis(dim, RatVec(dim));
  for (int i = 0; i < dim; ++i) {
    if (!b[i].is_array() || static_cast<int>(b[i].size()) != dim)
      throw ValidationError("\"basis\" must be a square 2D array");
    for (int c = 0; c < dim; ++c) basis[i][c] = rat_from_json(b[i][c]);
  }
  return Lattice::make(std::move(basis));
}

json lattice_to_json(const Lattice& lattice) {
  json rows = json::array();
  for (int i = 0; i < lattice.dim; ++i) {
    json row = json::array();
    for (int c = 0; c < lattice.dim; ++c)
      row.push_back(rat_to_json(lattice.basis[i][c]));
    rows.push_back(row);
  }
  return json{{"basis", rows}};
}

NormOracle norm_from_json(const json& j) {
  if (!j.contains("kind")) throw ValidationError("norm needs a \"kind\" key");
  const std::string kind = j["kind"].get<std::string>();
  auto dim_of = [&](const char* key = "dim") {
    if (!j.contains(key))
      throw ValidationError("norm '" + kind + "' needs a \"" +
                            std::string(key) + "\" key");
    return j[key].get<int>();
  };
  if (kind == "euclidean") return euclidean_norm(dim_of());
  if (kind == "l1") return l1_norm(dim_of());
  if (kind == "linf") return linf_norm(dim_of());
  if (kind == "lp") {
    double p = j.at("p").is_string()
                   ? parse_rational(j["p"].get<std::string>()).get_d()
                   : j.at("p").get<double>();
    Eigen::VectorXd weights;
    if (j.contains("weights")) {
      const json& w = j["weights"];
      weights.resize(static_cast<int>(w.size()));
      for (int i = 0; i < weights.size(); ++i) weights(i) = w[i].get<double>();
    }
    return weighted_lp_norm(dim_of(), p, weights);
  }
  if (kind == "polytope" || kind == "polytope_dual") {
    if (!j.contains("vertices"))
      throw ValidationError("polytope norm needs a \"vertices\" key");
    // vertices listed as rows in the file; stored internally as columns
    Eigen::MatrixXd rows = double_matrix_from_json(j["vertices"]);
    Eigen::MatrixXd vertices = rows.transpose();
    return kind == "polytope" ? polytope_norm(vertices)
                              : polytope_support_norm(vertices);
  }
  if (kind == "mass") return mass_norm(dim_of("n"));
  if (kind == "comass") return comass_norm(dim_of("n"));
  throw ValidationError("unknown norm kind: " + kind);
}

json norm_to_json(const NormOracle& norm) {
  json out{{"kind", norm.kind}, {"dim", norm.dim}};
  if (norm.kind == "lp") {
    out["p"] = norm.p;
    if (norm.weights.size() > 0) {
      json w = json::array();
      for (int i = 0; i < norm.weights.size(); ++i) w.push_back(norm.weights(i));
      out["weights"] = w;
    }
  }
  if (norm.kind == "polytope" || norm.kind == "polytope_dual")
    out["vertices"] = double_matrix_to_json(norm.vertices.transpose());
  if (norm.kind == "mass" || norm.kind == "comass") out["n"] = norm.bivector_n;
  return out;
}

Bivector bivector_from_json(const json& j, Variance variance) {
  if (!j.contains("matrix"))
    throw ValidationError("bivector file needs a \"matrix\" key");
  return Bivector::from_matrix(double_matrix_from_json(j["matrix"]), variance);
}

IntegerBasis integer_basis_from_json(const json& j) {
  const json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
  if (!rows.is_array() || rows.empty())
    throw ValidationError("integer basis must be a nonempty 2D array");
  const int n = static_cast<int>(rows.size());
  IntMat columns(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw ValidationError("integer basis must be square");
    for (int c = 0; c < n; ++c) {
      const json& cell = rows[i][c];
      if (!cell.is_number_integer())
        throw ValidationError("integer basis entries must be integers");
      columns[c][i] = Int(cell.get<long>());
    }
  }
  return IntegerBasis::make(std::move(columns));
}

FlatTorusMetric torus_from_json(const json& j) {
  if (!j.contains("gram"))
    throw ValidationError("torus spec needs a \"gram\" key");
  return FlatTorusMetric::make(double_matrix_from_json(j["gram"]));
}

ProductModel model_from_json(const json& j) {
  std::vector<double> radii;
  if (j.contains("spheres"))
    for (const json& r : j["spheres"]) radii.push_back(r.get<double>());
  std::optional<FlatTorusMetric> torus;
  if (j.contains("torus")) torus = torus_from_json(j["torus"]);
  return ProductModel::make(std::move(radii), std::move(torus));
}

json bound_to_json(const SymbolicBound& bound) {
  json out{{"q", format_rational(bound.rational)},
           {"pi_power", bound.pi_power}};
  if (!bound.symbolic_factors.empty())
    out["symbolic_factors"] = bound.symbolic_factors;
  if (auto f = bound.float_value()) out["float_value"] = *f;
  out["display"] = bound.to_string();
  return out;
}

json trace_to_json(const DerivationTrace& trace) {
  json steps = json::array();
  for (const TraceStep& step : trace.steps) {
    steps.push_back(json{{"rule", step.rule},
                         {"formula", step.formula},
                         {"inputs", step.inputs},
                         {"output", step.output}});
  }
  return steps;
}

json report_to_json(const BoundReport& report) {
  return json{{"bound", bound_to_json(report.bound)},
              {"trace", trace_to_json(report.trace)}};
}

json minima_to_json(const MinimaResult& result) {
  json witnesses = json::array();
  for (const IntVec& w : result.witnesses) {
    json coords = json::array();
    for (const Int& c : w) coords.push_back(c.get_str());
    witnesses.push_back(coords);
  }
  return json{{"values", result.values}, {"witnesses", witnesses}};
}

json combination_to_json(const CombinationResult& result) {
  json coeffs = json::array(), vec = json::array();
  for (const Int& a : result.combination.coeffs) coeffs.push_back(a.get_str());
  for (const Int& b : result.combination.result) vec.push_back(b.get_str());
  json steps = json::array();
  for (const CombinationStep& step : result.steps) {
    json s{{"depth", step.depth}, {"column_order", step.column_order}};
    if (step.l) s["l"] = *step.l;
    if (step.c) s["c"] = *step.c;
    steps.push_back(s);
  }
  return json{{"coeffs", coeffs},
              {"result", vec},
              {"cost", result.combination.cost.get_str()},
              {"trace", steps}};
}

json h2class_to_json(const H2Class& cls) {
  json spheres = json::array();
  for (const Int& a : cls.sphere_part) spheres.push_back(a.get_str());
  json torus = json::array();
  for (const IntVec& row : cls.torus_part) {
    json r = json::array();
    for (const Int& e : row) r.push_back(e.get_str());
    torus.push_back(r);
  }
  return json{{"sphere_part", spheres}, {"torus_part", torus}};
}

json systole_to_json(const SystoleResult& result) {
  return json{{"value", result.value}, {"witness", h2class_to_json(result.witness)}};
}

json gamma_search_to_json(const GammaSearchResult& result) {
  return json{{"best", result.best},
              {"best_trial", result.best_trial},
              {"witness_lattice", lattice_to_json(result.witness.lattice)},
              {"witness_norm", norm_to_json(result.witness.norm)}};
}

json decomposition_to_json(const CanonicalDecomposition& decomposition) {
  json planes = json::array();
  for (const auto& [u, v] : decomposition.planes) {
    json pu = json::array(), pv = json::array();
    for (int i = 0; i < u.size(); ++i) pu.push_back(u(i));
    for (int i = 0; i < v.size(); ++i) pv.push_back(v(i));
    planes.push_back(json{{"u", pu}, {"v", pv}});
  }
  return json{{"lambdas", decomposition.lambdas}, {"planes", planes}};
}

} // namespace syscow::io
