#include "syscow/bounds.hpp"

#include "syscow/charclass.hpp"
#include "syscow/combination.hpp"
#include "syscow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace syscow {

namespace {

Rat rat_pow(Rat base, int exponent) {
  Rat out(1);
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    base *= base;
    exponent >>= 1;
  }
  return out;
}

Int factorial(int n) {
  Int out(1);
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

std::string bound_literal(const SymbolicBound& b) {
  std::ostringstream out;
  out << "q=" << format_rational(b.rational) << ";pi=" << b.pi_power;
  if (!b.symbolic_factors.empty()) {
    out << ";factors=";
    for (std::size_t i = 0; i < b.symbolic_factors.size(); ++i) {
      if (i) out << ",";
      out << b.symbolic_factors[i];
    }
  }
  return out.str();
}

SymbolicBound parse_bound_literal(const std::string& text) {
  SymbolicBound out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ';')) {
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw ValidationError("malformed bound literal: " + text);
    std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "q") {
      out.rational = parse_rational(value);
    } else if (key == "pi") {
      out.pi_power = std::stoi(value);
    } else if (key == "factors") {
      std::stringstream fs(value);
      std::string name;
      while (std::getline(fs, name, ',')) out.symbolic_factors.push_back(name);
    } else {
      throw ValidationError("malformed bound literal: " + text);
    }
  }
  return out;
}

const std::string& require_input(const TraceStep& step, const std::string& key) {
  auto it = step.inputs.find(key);
  if (it == step.inputs.end())
    throw ValidationError("trace step '" + step.rule + "' is missing input '" +
                          key + "'");
  return it->second;
}

TraceStep make_step(std::string rule, std::string formula,
                    std::map<std::string, std::string> inputs,
                    std::string output) {
  return TraceStep{std::move(rule), std::move(formula), std::move(inputs),
                   std::move(output)};
}

/// Recomputes one step from its recorded inputs. Every rule here has to
/// stay in lockstep with the producing operation.
std::string recompute_step(const TraceStep& step) {
  const std::string& rule = step.rule;
  if (rule == "v_n") {
    int n = std::stoi(require_input(step, "n"));
    return v_n(n).get_str();
  }
  if (rule == "gamma_exact") {
    int b = std::stoi(require_input(step, "b"));
    auto g = gamma_exact(b);
    if (!g) throw ValidationError("gamma_exact replay: no exact value");
    return format_rational(*g);
  }
  if (rule == "gamma_supplied" || rule == "gamma_order") {
    return require_input(step, "value");
  }
  if (rule == "gamma_symbolic") {
    return "Gamma_" + require_input(step, "b");
  }
  if (rule == "acw_upper_bound") {
    int n = std::stoi(require_input(step, "n"));
    Rat scal = parse_rational(require_input(step, "scal"));
    return format_rational(acw_upper_bound(n, scal));
  }
  if (rule == "clifford_pair_count") {
    int n = std::stoi(require_input(step, "n"));
    return std::to_string(clifford_pair_count(n));
  }
  if (rule == "line_index") {
    int n = std::stoi(require_input(step, "n"));
    long k = std::stol(require_input(step, "k"));
    return format_rational(line_index_cp(n, k));
  }
  if (rule == "chain_s2pow") {
    SymbolicBound out;
    out.rational = Rat(2) * parse_rational(require_input(step, "v")) *
                   parse_rational(require_input(step, "acw"));
    out.pi_power = 1;
    auto it = step.inputs.find("gamma");
    if (it != step.inputs.end())
      out.rational *= parse_rational(it->second);
    else
      out.symbolic_factors.push_back(require_input(step, "gamma_symbol"));
    return bound_literal(out);
  }
  if (rule == "chain_cp3") {
    SymbolicBound out;
    out.rational = Rat(4) * parse_rational(require_input(step, "acw"));
    out.pi_power = 1;
    return bound_literal(out);
  }
  if (rule == "volume_cp3") {
    SymbolicBound out;
    out.rational =
        rat_pow(Rat(4) * parse_rational(require_input(step, "acw")), 3) / 6;
    out.pi_power = 3;
    return bound_literal(out);
  }
  if (rule == "volume_cpn") {
    int n = std::stoi(require_input(step, "n"));
    Rat scal = parse_rational(require_input(step, "scal"));
    SymbolicBound out;
    out.rational = rat_pow(Rat(2) / scal, n) / Rat(factorial(n));
    out.pi_power = n;
    for (int i = 0; i < n; ++i)
      out.symbolic_factors.push_back("c_" + std::to_string(n));
    return bound_literal(out);
  }
  if (rule == "chain_generic") {
    Rat scal = parse_rational(require_input(step, "scal"));
    SymbolicBound out;
    out.rational = Rat(2) / scal;
    out.pi_power = 1;
    auto it = step.inputs.find("gamma");
    if (it != step.inputs.end())
      out.rational *= parse_rational(it->second);
    else
      out.symbolic_factors.push_back(require_input(step, "gamma_symbol"));
    out.symbolic_factors.push_back("c_" + require_input(step, "half_dim"));
    std::sort(out.symbolic_factors.begin(), out.symbolic_factors.end());
    return bound_literal(out);
  }
  throw ValidationError("unknown trace rule: " + rule);
}

} // namespace

std::optional<double> SymbolicBound::float_value() const {
  if (!symbolic_factors.empty()) return std::nullopt;
  return rational.get_d() * std::pow(std::numbers::pi, pi_power);
}

SymbolicBound SymbolicBound::substitute(const std::string& name,
                                        const Rat& value) const {
  SymbolicBound out;
  out.rational = rational;
  out.pi_power = pi_power;
  for (const std::string& factor : symbolic_factors) {
    if (factor == name)
      out.rational *= value;
    else
      out.symbolic_factors.push_back(factor);
  }
  return out;
}

std::string SymbolicBound::to_string() const {
  std::ostringstream out;
  out << format_rational(rational);
  if (pi_power == 1)
    out << "*pi";
  else if (pi_power != 0)
    out << "*pi^" << pi_power;
  for (const std::string& factor : symbolic_factors) out << "*" << factor;
  return out.str();
}

bool SymbolicBound::operator==(const SymbolicBound& rhs) const {
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return rational == rhs.rational && pi_power == rhs.pi_power &&
         sorted(symbolic_factors) == sorted(rhs.symbolic_factors);
}

Rat acw_upper_bound(int half_dim, const Rat& scal_min) {
  if (half_dim < 1) throw ValidationError("half dimension must be >= 1");
  if (scal_min <= 0)
    throw ValidationError("scalar curvature minimum must be positive");
  Rat out = Rat(4) * half_dim * (2 * half_dim - 1) / scal_min;
  out.canonicalize();
  return out;
}

long clifford_pair_count(int n) {
  if (n < 1) throw ValidationError("clifford_pair_count requires n >= 1");
  long pairs = static_cast<long>(n) * (2L * n - 1);
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * static_cast<unsigned long>(n), 2);
  if (Int(pairs) != binom)
    throw ValidationError("pair count disagrees with binomial(2n, 2)");
  return pairs;
}

std::optional<Rat> gamma_exact(int b) {
  if (b < 1) throw ValidationError("gamma index must be >= 1");
  if (b == 1) return Rat(1);
  if (b == 2) return Rat(3, 2);
  return std::nullopt;
}

BoundReport stsys_bound_s2_power(int n, const Rat& scal_min,
                                 std::optional<Rat> gamma_n) {
  if (n < 1) throw ValidationError("sphere power must be >= 1");
  if (gamma_n && *gamma_n <= 0)
    throw ValidationError("gamma must be positive");

  BoundReport report;
  Int v = v_n(n);
  report.trace.steps.push_back(make_step(
      "v_n", "V_" + std::to_string(n) + " = " + v.get_str(),
      {{"n", std::to_string(n)}}, v.get_str()));

  std::optional<Rat> gamma = gamma_n;
  std::string gamma_symbol;
  if (!gamma) gamma = gamma_exact(n);
  if (gamma) {
    std::string literal = format_rational(*gamma);
    if (gamma_n) {
      report.trace.steps.push_back(make_step(
          "gamma_supplied", "Gamma_" + std::to_string(n) + " := " + literal,
          {{"b", std::to_string(n)}, {"value", literal}}, literal));
    } else {
      report.trace.steps.push_back(make_step(
          "gamma_exact", "Gamma_" + std::to_string(n) + " = " + literal,
          {{"b", std::to_string(n)}}, literal));
    }
  } else {
    gamma_symbol = "Gamma_" + std::to_string(n);
    report.trace.steps.push_back(make_step(
        "gamma_symbolic", gamma_symbol + " kept symbolic",
        {{"b", std::to_string(n)}}, gamma_symbol));
  }

  Rat acw = acw_upper_bound(n, scal_min);
  report.trace.steps.push_back(make_step(
      "acw_upper_bound",
      "acw(" + std::to_string(n) + ", " + format_rational(scal_min) + ") = " +
          format_rational(acw),
      {{"n", std::to_string(n)}, {"scal", format_rational(scal_min)}},
      format_rational(acw)));

  SymbolicBound bound;
  bound.pi_power = 1;
  bound.rational = Rat(2) * Rat(v) * acw;
  std::map<std::string, std::string> chain_inputs = {
      {"v", v.get_str()}, {"acw", format_rational(acw)}};
  if (gamma) {
    bound.rational *= *gamma;
    chain_inputs["gamma"] = format_rational(*gamma);
  } else {
    bound.symbolic_factors.push_back(gamma_symbol);
    chain_inputs["gamma_symbol"] = gamma_symbol;
  }
  bound.rational.canonicalize();
  report.trace.steps.push_back(make_step(
      "chain_s2pow", "stsys_2 <= 2*pi*V*Gamma*acw = " + bound.to_string(),
      std::move(chain_inputs), bound_literal(bound)));
  report.bound = bound;
  return report;
}

BoundReport stsys_bound_cp3(const Rat& scal_min) {
  BoundReport report;
  Rat index = line_index_cp(3, 2);
  if (index == 0)
    throw ValidationError("twist-2 admissibility index vanished; no bound");
  report.trace.steps.push_back(make_step(
      "line_index", "index(CP^3, O(2)) = " + format_rational(index),
      {{"n", "3"}, {"k", "2"}}, format_rational(index)));

  Rat acw = acw_upper_bound(3, scal_min);
  report.trace.steps.push_back(make_step(
      "acw_upper_bound",
      "acw(3, " + format_rational(scal_min) + ") = " + format_rational(acw),
      {{"n", "3"}, {"scal", format_rational(scal_min)}}, format_rational(acw)));

  SymbolicBound bound;
  bound.rational = Rat(4) * acw;
  bound.rational.canonicalize();
  bound.pi_power = 1;
  report.trace.steps.push_back(make_step(
      "chain_cp3", "stsys_2 <= 4*pi*acw = " + bound.to_string(),
      {{"acw", format_rational(acw)}}, bound_literal(bound)));
  report.bound = bound;
  return report;
}

BoundReport kahler_volume_bound_cp3(const Rat& scal_min) {
  BoundReport report;
  Rat index = line_index_cp(3, 2);
  if (index == 0)
    throw ValidationError("twist-2 admissibility index vanished; no bound");
  report.trace.steps.push_back(make_step(
      "line_index", "index(CP^3, O(2)) = " + format_rational(index),
      {{"n", "3"}, {"k", "2"}}, format_rational(index)));

  Rat acw = acw_upper_bound(3, scal_min);
  report.trace.steps.push_back(make_step(
      "acw_upper_bound",
      "acw(3, " + format_rational(scal_min) + ") = " + format_rational(acw),
      {{"n", "3"}, {"scal", format_rational(scal_min)}}, format_rational(acw)));

  SymbolicBound bound;
  bound.rational = rat_pow(Rat(4) * acw, 3) / 6;
  bound.rational.canonicalize();
  bound.pi_power = 3;
  report.trace.steps.push_back(make_step(
      "volume_cp3", "Vol <= (4*pi*acw)^3/6 = " + bound.to_string(),
      {{"acw", format_rational(acw)}}, bound_literal(bound)));
  report.bound = bound;
  return report;
}

BoundReport kahler_volume_bound_cpn(int n, const Rat& scal_min) {
  if (n < 1) throw ValidationError("projective dimension must be >= 1");
  if (scal_min <= 0)
    throw ValidationError("scalar curvature minimum must be positive");

  BoundReport report;
  SymbolicBound bound;
  bound.rational = rat_pow(Rat(2) / scal_min, n) / Rat(factorial(n));
  bound.rational.canonicalize();
  bound.pi_power = n;
  for (int i = 0; i < n; ++i)
    bound.symbolic_factors.push_back("c_" + std::to_string(n));
  report.trace.steps.push_back(make_step(
      "volume_cpn", "Vol <= (2*pi*c_n/scal)^n/n! = " + bound.to_string(),
      {{"n", std::to_string(n)}, {"scal", format_rational(scal_min)}},
      bound_literal(bound)));
  report.bound = bound;
  return report;
}

BoundReport generic_2essential_bound(int b2, int half_dim, const Rat& scal_min,
                                     const PipelineConfig& config) {
  if (b2 < 1) throw ValidationError("second Betti number must be >= 1");
  if (half_dim < 1) throw ValidationError("half dimension must be >= 1");
  if (scal_min <= 0)
    throw ValidationError("scalar curvature minimum must be positive");

  BoundReport report;
  std::optional<Rat> gamma = gamma_exact(b2);
  std::string gamma_symbol;
  if (gamma) {
    report.trace.steps.push_back(make_step(
        "gamma_exact",
        "Gamma_" + std::to_string(b2) + " = " + format_rational(*gamma),
        {{"b", std::to_string(b2)}}, format_rational(*gamma)));
  } else {
    gamma_symbol = "Gamma_" + std::to_string(b2);
    double estimate = config.banaszczyk_constant.get_d() * b2 *
                      std::log(static_cast<double>(b2));
    std::ostringstream note;
    note << gamma_symbol << " <= C*b*log b ~ " << estimate
         << " (C = " << format_rational(config.banaszczyk_constant)
         << ", configured)";
    report.trace.steps.push_back(make_step(
        "gamma_order", note.str(),
        {{"b", std::to_string(b2)},
         {"C", format_rational(config.banaszczyk_constant)},
         {"value", gamma_symbol}},
        gamma_symbol));
  }

  SymbolicBound bound;
  bound.rational = Rat(2) / scal_min;
  bound.pi_power = 1;
  std::map<std::string, std::string> inputs = {
      {"scal", format_rational(scal_min)},
      {"half_dim", std::to_string(half_dim)}};
  if (gamma) {
    bound.rational *= *gamma;
    inputs["gamma"] = format_rational(*gamma);
  } else {
    bound.symbolic_factors.push_back(gamma_symbol);
    inputs["gamma_symbol"] = gamma_symbol;
  }
  bound.symbolic_factors.push_back("c_" + std::to_string(half_dim));
  std::sort(bound.symbolic_factors.begin(), bound.symbolic_factors.end());
  bound.rational.canonicalize();
  report.trace.steps.push_back(make_step(
      "chain_generic",
      "stsys_2 <= 2*pi*Gamma_b*c_m/scal = " + bound.to_string(),
      std::move(inputs), bound_literal(bound)));
  report.bound = bound;
  return report;
}

AsymptoticTable asymptotic_check_s2_power(int n_max,
                                          const PipelineConfig& config) {
  if (n_max < 2) throw ValidationError("asymptotic check needs n_max >= 2");
  const double c = config.banaszczyk_constant.get_d();
  const double envelope_factor = 4.5 * std::numbers::pi * c;

  AsymptoticTable table;
  table.all_within = true;
  for (int n = 2; n <= n_max; ++n) {
    AsymptoticRow row;
    row.n = n;
    row.v = v_n(n);
    auto exact = gamma_exact(n);
    row.gamma = exact ? exact->get_d()
                      : c * n * std::log(static_cast<double>(n));
    // chain bound at scal = 2n: 2 pi V_n Gamma_n * 2(2n-1)
    row.bound = 2.0 * std::numbers::pi * row.v.get_d() * row.gamma * 2.0 *
                (2.0 * n - 1.0);
    row.envelope = envelope_factor * std::pow(static_cast<double>(n), 4) *
                   std::log(static_cast<double>(n));
    row.within = row.bound <= row.envelope * (1.0 + 1e-12);
    table.all_within = table.all_within && row.within;
    table.rows.push_back(row);
  }
  return table;
}

SymbolicBound replay(const DerivationTrace& trace) {
  if (trace.steps.empty())
    throw ValidationError("cannot replay an empty derivation trace");
  for (const TraceStep& step : trace.steps) {
    std::string recomputed = recompute_step(step);
    if (recomputed != step.output)
      throw ValidationError("trace step '" + step.rule +
                            "' does not replay: recorded '" + step.output +
                            "', recomputed '" + recomputed + "'");
  }
  return parse_bound_literal(trace.steps.back().output);
}

} // namespace syscow
