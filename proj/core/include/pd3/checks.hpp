#pragma once

// Named verification checks over a corpus, and the suite runner.

#include <optional>
#include <string>
#include <vector>

#include "pd3/corpus.hpp"

namespace pd3 {

// Complexes assembled from the corpus: "k" and "l" are the Fox-Lyndon
// complexes of the S3 and Pi presentations; "x", "y" and "z" attach the top
// cell along psi, theta and xi and use the diagonal bases.  Throws
// UnknownArtifact for other names.
FreeComplex assemble_complex(const Catalog& corpus, const std::string& name);

enum class Status { Pass, Fail, Partial, Skip };

struct CheckResult {
  std::string id;
  std::string title;
  std::string claim;
  Status status = Status::Skip;
  int radius = 0;  // ball radius of a PARTIAL result
  std::vector<std::string> details;
  double wall_ms = 0;

  // "PASS", "FAIL", "SKIP" or "PARTIAL(L)".
  std::string status_string() const;
};

struct CheckInfo {
  std::string id;
  std::string title;
  std::string claim;
  std::vector<std::string> dependencies;
};

// Every check in id order (X*, Y*, Z1, O1, H1).
const std::vector<CheckInfo>& check_registry();

// Throws UnknownCheck.
const CheckInfo& check_info(const std::string& id);

struct CheckOptions {
  int max_length = 5;  // ball radius for the truncated searches
};

// Runs `id` and, first, its dependencies.  A failed or skipped dependency
// turns the result into SKIP.  Throws UnknownCheck.
CheckResult run_check(const std::string& id, const Catalog& corpus, CheckOptions opts = {});

struct SuiteOptions {
  // Exact ids or prefixes ending in '*'; empty selects every check.
  std::vector<std::string> filters;
  int max_length = 5;
  unsigned jobs = 1;
};

struct Report {
  std::vector<CheckResult> results;  // sorted by registry order
  std::string corpus_hash;
  std::string version;
  int max_length = 5;
  double wall_ms = 0;

  std::size_t count(Status s) const;
  // 0 when nothing failed, 1 otherwise.
  int exit_code() const;
};

// Exact ids that match nothing throw UnknownCheck; a prefix that matches
// nothing selects nothing.
std::vector<std::string> select_checks(const std::vector<std::string>& filters);

Report run_suite(const Catalog& corpus, const SuiteOptions& opts);

std::string tool_version();

}  // namespace pd3
