#pragma once

#include "unicrit/dynamics.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace unicrit {

/// One failing input. `input` holds every parameter needed to reproduce it.
struct Violation {
  nlohmann::json input;
  std::string message;
};

struct SuiteReport {
  std::string suite;
  nlohmann::json params;  // effective parameters, defaults filled in
  std::uint64_t cases = 0;
  std::vector<Violation> violations;
  double seconds = 0;
  nlohmann::json stats = nlohmann::json::object();  // suite-specific extras

  bool passed() const { return violations.empty(); }

  /// {suite, params, cases, violations, passed, stats, seconds}. Only
  /// `seconds` differs between runs with the same inputs.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Replaces statement_shape_holds inside the classification suite. Used to
/// check that the suite actually detects a wrong predicate.
using ShapePredicate = std::function<bool(const UnicriticalPoly&, const IterateClassification&)>;

struct SuiteOptions {
  unsigned workers = 1;
  ShapePredicate shape;  // empty: statement_shape_holds
  /// Largest estimated case count a suite may run.
  std::uint64_t budget = 500'000'000;
};

/// Names of all suites, in catalog order.
const std::vector<std::string>& suite_ids();

/// Default parameters of a suite. Throws std::invalid_argument for an
/// unknown id.
nlohmann::json default_params(const std::string& id);

/// Runs a suite over the defaults overridden by `params`. Throws
/// std::invalid_argument for an unknown id, unknown parameter or malformed
/// value, and ResourceError when the ranges exceed the budget. Results do not
/// depend on the worker count.
SuiteReport run_suite(const std::string& id, const nlohmann::json& params = nlohmann::json::object(),
                      const SuiteOptions& options = {});

}  // namespace unicrit
