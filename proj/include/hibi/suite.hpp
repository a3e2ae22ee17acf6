#pragma once

// End-to-end runs over the windows of one lattice with cross-module checks.

#include <optional>
#include <string>
#include <vector>

#include "hibi/io.hpp"

namespace hibi {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteFlags {
  /// Windows: all, or the given one, or (0, rank L) by default.
  std::optional<RankWindow> window;
  bool all_windows = false;
  bool proper_only = false;
  bool gb = true;
  bool with_basis = false;
  bool betti = false;
  bool classify = false;
  bool verify = false;
  std::optional<OrderKind> order;
  int fiber_degree = 4;
  std::size_t fiber_cap_vars = 20;
  ClassifyOptions classify_options;
  ExecPolicy policy = ExecPolicy::kParallel;
};

struct RunReport {
  /// Reproducible part: identical inputs give identical bytes.
  Json stable;
  Json timings;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  Json to_json() const;
};

Json config_json(const SuiteFlags& flags);

RunReport run_suite(const PlanarLattice& lattice, const SuiteFlags& flags);

}  // namespace hibi
