#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sn/identities.hpp"
#include "sn/sampling.hpp"

namespace snc {

/// One addressable identity family. `run` checks it in S_n, drawing `samples`
/// random instances where the family is not exhaustive.
struct SuiteEntry {
  std::string id;
  int criterion = 0;
  std::vector<int> dims;
  int quick_samples = 0;
  int full_samples = 0;
  std::function<void(int n, int samples, sn::Sampler& rng, sn::IdentityCheck& out)> run;
};

const std::vector<SuiteEntry>& suite_entries();

struct SuiteOptions {
  /// Only ambient dimension n (families without instances there are skipped).
  std::optional<int> n;
  std::uint64_t seed = 1;
  /// Exact ids to run; empty runs all.
  std::vector<std::string> filter;
  bool full = false;
};

struct SuiteResult {
  sn::IdentityCheck check;
  int criterion = 0;
  std::vector<int> dims;
  bool skipped = false;
};

/// Runs the selected families in registry order. Exceptions raised inside a
/// family count as a failed case.
std::vector<SuiteResult> run_suite(const SuiteOptions& opts,
                                   const std::function<void(const SuiteResult&)>& on_result = {});

/// "PASS tmJ n=3 cases=54", "FAIL ... : detail" or "SKIP ...".
std::string result_line(const SuiteResult& r);

}  // namespace snc
