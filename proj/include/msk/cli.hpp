#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "msk/certifier.hpp"

namespace msk {

using Json = nlohmann::json;

/// Toolkit version reported in every Report.
const char* version();

struct CorpusFile {
  std::string name;
  std::string contents;
};

/// Surfaces shipped with the toolkit. An input path of the form "@name"
/// (e.g. "@heisenberg") resolves to the bundled file name.json.
const std::vector<CorpusFile>& example_corpus();

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<int> max_weight;
  /// Monomial cap; falls back to MSK_BUDGET, then to the library default.
  std::optional<std::size_t> budget;
  /// certify: also write the report to this path.
  std::optional<std::string> output;
  bool show_basis = false;
  int verbosity = 0;
  // bounds
  std::optional<int> n, k, K;
  std::string blocks;  // "2:1,3:1"
};

struct Report {
  std::string command;
  Json result = Json::object();
  std::optional<std::string> error;
  double timing_ms = 0;
  int exit_code = 0;

  /// Keys are emitted in sorted order.
  Json to_json() const;
};

/// Exit codes: 0 affirmative, 1 negative, 2 error.
Report run(const RunConfig& config);

std::size_t effective_budget(const RunConfig& config);

Json field_to_json(const VectorField& x);
VectorField field_from_json(const Json& doc, const VarTable::Ptr& table);
Json map_to_json(const RationalMap& m);
RationalMap map_from_json(const Json& doc, const VarTable::Ptr& table);
Json matrix_to_json(const RatMatrix& m);
Json bounds_to_json(const BoundsReport& b);
Json certificate_to_json(const Certificate& c);

}  // namespace msk
