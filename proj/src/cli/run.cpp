#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "msk/cli.hpp"
#include "msk/expr.hpp"

namespace msk {

namespace {

// Failure whose message is reported verbatim.
struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (!path.empty() && path[0] == '@') {
    const std::string name = path.substr(1) + ".json";
    for (const auto& f : example_corpus())
      if (f.name == name) return f.contents;
    throw CommandError("I/O error: no bundled example '" + path.substr(1) + "'");
  }
  std::ifstream in(path);
  if (!in) throw CommandError("I/O error: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw CommandError("parse error: " + path + ": " + e.what());
  }
}

const std::string& input(const RunConfig& c, std::size_t i, const char* what) {
  if (c.inputs.size() <= i) throw CommandError(std::string("usage error: missing ") + what);
  return c.inputs[i];
}

ModelSurface read_surface_file(const std::string& path) {
  try {
    return read_surface(read_input(path));
  } catch (const SurfaceError& e) {
    throw CommandError("parse error: " + path + ": " + e.what());
  }
}

ModelSurface load_surface(const RunConfig& c) {
  const std::string& path = input(c, 0, "surface file");
  read_surface_file(path);
  return parse_surface(read_input(path));
}

template <typename T, typename Reader>
T read_object(const RunConfig& c, std::size_t i, const char* what, Reader reader) {
  const std::string& path = input(c, i, what);
  const Json doc = read_json(path);
  try {
    return reader(doc);
  } catch (const std::invalid_argument& e) {
    throw CommandError("parse error: " + path + ": " + e.what());
  } catch (const ParseError& e) {
    throw CommandError("parse error: " + path + ": " + e.what());
  }
}

RationalMap load_map(const RunConfig& c, const ModelSurface& s) {
  return read_object<RationalMap>(c, 1, "map file", [&](const Json& d) { return map_from_json(d, s.table); });
}

VectorField load_field(const RunConfig& c, const ModelSurface& s) {
  return read_object<VectorField>(c, 1, "field file", [&](const Json& d) { return field_from_json(d, s.table); });
}

SolveOptions solve_options(const RunConfig& c) {
  SolveOptions o;
  o.monomial_cap = effective_budget(c);
  return o;
}

Json dims_json(const std::map<int, int>& dims) {
  Json out = Json::array();
  for (const auto& [w, d] : dims) out.push_back({{"weight", w}, {"dim", d}});
  return out;
}

Json weights_json(const std::vector<int>& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(x);
  return out;
}

void cmd_validate(const RunConfig& c, Report& r) {
  const ModelSurface s = read_surface_file(input(c, 0, "surface file"));
  const SurfaceReport rep = validate(s);
  r.result["valid"] = rep.valid;
  r.result["reasons"] = rep.reasons;
  r.result["warnings"] = rep.warnings;
  r.result["realDim"] = rep.real_dim;
  r.result["weights"] = weights_json(rep.weights);
  r.exit_code = rep.valid ? 0 : 1;
}

void cmd_aut(const RunConfig& c, Report& r) {
  const ModelSurface s = load_surface(c);
  const GradedAlgebra alg = compute_aut(s, c.max_weight, solve_options(c));
  const BoundsReport b = bounds(s);
  r.result["dims"] = dims_json(alg.dims());
  r.result["total"] = alg.total_dim();
  r.result["maxWeight"] = alg.max_weight;
  r.result["delta"] = alg.delta;
  r.result["maxDegree"] = alg.max_degree;
  r.result["partial"] = alg.partial;
  r.result["homogeneous"] = !alg.partial && is_homogeneous(alg, s);
  r.result["lemma2"] = {{"deltaBound", b.lnk.get_si()},
                        {"deltaWithinBound", alg.delta <= b.lnk},
                        {"degreeBound", b.n_cubed.get_si()},
                        {"degreeWithinBound", alg.max_degree <= b.n_cubed}};
  if (c.show_basis) {
    Json basis = Json::array();
    for (const auto& [w, comp] : alg.components)
      for (const auto& x : comp) {
        Json f = field_to_json(x);
        f["weight"] = w;
        basis.push_back(f);
      }
    r.result["basis"] = basis;
  }
  if (alg.partial) {
    r.error = "budget exceeded: " + alg.partial_reason;
    r.exit_code = 2;
  }
}

void cmd_homogeneous(const RunConfig& c, Report& r) {
  const ModelSurface s = load_surface(c);
  const GradedAlgebra alg = compute_aut(s, -1, solve_options(c));
  if (alg.partial) throw BudgetExceeded(alg.partial_reason);
  int total = 0;
  for (const auto& [w, d] : alg.dims()) total += d;
  const bool h = is_homogeneous(alg, s);
  r.result["homogeneous"] = h;
  r.result["negativeDims"] = dims_json(alg.dims());
  r.result["negativeTotal"] = total;
  r.result["realDim"] = s.real_dim();
  r.exit_code = h ? 0 : 1;
}

void cmd_exp(const RunConfig& c, Report& r) {
  const ModelSurface s = load_surface(c);
  const VectorField x = load_field(c, s);
  const RationalMap m = exp_negative(x, s);
  const bool ok = verify_automorphism(m, s);
  r.result["map"] = map_to_json(m);
  r.result["degree"] = map_degree(m);
  r.result["automorphism"] = ok;
  r.exit_code = ok ? 0 : 1;
}

void cmd_verify(const RunConfig& c, Report& r) {
  const ModelSurface s = load_surface(c);
  const RationalMap m = load_map(c, s);
  const AutomorphismCheck chk = check_automorphism(m, s);
  Json res = Json::array();
  for (const auto& x : chk.residuals) res.push_back(x.str());
  r.result["automorphism"] = chk.holds();
  r.result["mapsInto"] = chk.maps_into;
  r.result["jacobianNonzero"] = chk.jacobian_nonzero;
  r.result["residuals"] = res;
  r.result["degree"] = map_degree(m);
  r.exit_code = chk.holds() ? 0 : 1;
}

void cmd_decompose(const RunConfig& c, Report& r) {
  const ModelSurface s = load_surface(c);
  const RationalMap chi = load_map(c, s);
  if (!verify_automorphism(chi, s)) {
    r.result["automorphism"] = false;
    r.exit_code = 1;
    return;
  }
  const Decomposition d = decompose_aut(chi, s);
  Json factors = Json::array();
  for (const auto& x : d.tau.factors) factors.push_back(field_to_json(x));
  const bool rec = maps_equal(compose(d.tau.map, d.sigma), chi) && maps_equal(compose(d.L, d.Nplus), d.sigma);
  const bool groups = is_triangular_shift(d.tau.map) && is_quasi_linear(d.L) && is_identity_plus_higher(d.Nplus);
  r.result["automorphism"] = true;
  r.result["tau"] = map_to_json(d.tau.map);
  r.result["tauFactors"] = factors;
  r.result["sigma"] = map_to_json(d.sigma);
  r.result["L"] = map_to_json(d.L);
  r.result["Nplus"] = map_to_json(d.Nplus);
  r.result["recomposes"] = rec;
  r.result["factorsInSubgroups"] = groups;
  r.exit_code = rec && groups ? 0 : 1;
}

void cmd_certify(const RunConfig& c, Report& r) {
  const ModelSurface s = load_surface(c);
  const RationalMap chi = load_map(c, s);
  const GradedAlgebra alg = compute_aut(s, std::nullopt, solve_options(c));
  if (alg.partial) throw BudgetExceeded(alg.partial_reason);
  const Certificate cert = certify(chi, s, alg);
  r.result = certificate_to_json(cert);
  r.exit_code = cert.valid() ? 0 : 1;
}

std::vector<WeightBlock> parse_blocks(const std::string& text) {
  std::vector<WeightBlock> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      std::size_t used = 0;
      const int w = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string rest = item.substr(colon + 1);
      const int k = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(item);
      out.push_back({w, k});
    } catch (const std::logic_error&) {
      throw CommandError("usage error: block '" + item + "' is not weight:count");
    }
  }
  return out;
}

void cmd_bounds(const RunConfig& c, Report& r) {
  if (!c.n) throw CommandError("usage error: --n is required");
  std::vector<WeightBlock> blocks;
  if (!c.blocks.empty()) {
    if (c.k || c.K) throw CommandError("usage error: --blocks excludes --k/--K");
    blocks = parse_blocks(c.blocks);
  } else {
    if (c.k.value_or(0) > 0) blocks.push_back({2, *c.k});
    if (c.K.value_or(0) > 0) blocks.push_back({3, *c.K});
  }
  if (blocks.empty()) throw CommandError("usage error: no codimension given");
  try {
    r.result = bounds_to_json(bounds(*c.n, blocks));
  } catch (const std::invalid_argument& e) {
    throw CommandError(std::string("usage error: ") + e.what());
  }
}

}  // namespace

std::size_t effective_budget(const RunConfig& config) {
  std::size_t cap = SolveOptions{}.monomial_cap;
  if (const char* env = std::getenv("MSK_BUDGET")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v <= 0) throw std::invalid_argument(env);
      cap = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw CommandError(std::string("usage error: MSK_BUDGET must be a positive integer, got '") + env + "'");
    }
  }
  if (config.budget) {
    if (*config.budget == 0) throw CommandError("usage error: budget must be positive");
    cap = *config.budget;
  }
  return cap;
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["result"] = result;
  if (error) out["error"] = *error;
  out["exitCode"] = exit_code;
  out["timingMs"] = timing_ms;
  out["version"] = version();
  return out;
}

Report run(const RunConfig& config) {
  Report r;
  r.command = config.command;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (config.command == "validate") cmd_validate(config, r);
    else if (config.command == "aut") cmd_aut(config, r);
    else if (config.command == "homogeneous") cmd_homogeneous(config, r);
    else if (config.command == "exp") cmd_exp(config, r);
    else if (config.command == "verify") cmd_verify(config, r);
    else if (config.command == "decompose") cmd_decompose(config, r);
    else if (config.command == "certify") cmd_certify(config, r);
    else if (config.command == "bounds") cmd_bounds(config, r);
    else throw CommandError("usage error: unknown command '" + config.command + "'");
  } catch (const CommandError& e) {
    r.error = e.what();
  } catch (const BudgetExceeded& e) {
    r.error = std::string("budget exceeded: ") + e.what();
  } catch (const ParseError& e) {
    r.error = std::string("parse error: ") + e.what();
  } catch (const SurfaceError& e) {
    r.error = std::string("surface error: ") + e.what();
  } catch (const std::exception& e) {
    r.error = std::string("error: ") + e.what();
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (r.error) {
    r.exit_code = 2;
  } else if (config.output) {
    std::ofstream out(*config.output);
    if (!out) {
      r.error = "I/O error: cannot write '" + *config.output + "'";
      r.exit_code = 2;
    } else {
      out << r.to_json().dump(2) << "\n";
    }
  }
  return r;
}

}  // namespace msk
