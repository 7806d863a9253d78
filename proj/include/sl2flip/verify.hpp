#pragma once

// Property sweep over (p, q, m): every invariant is recomputed and checked
// against an oracle or a closed form. Instances run concurrently; results
// are always ordered by (q, p, m).

#include <cstdint>
#include <string>
#include <vector>

namespace sl2flip::verify {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first failure, empty on success
};

struct InstanceResult {
  std::int64_t p = 1, q = 1, m = 1;
  std::vector<PropertyResult> properties;  // only the applicable ones

  bool passed() const;
};

struct SweepOptions {
  std::int64_t q_max = 4;
  std::int64_t m_max = 3;
  std::int64_t box = 20;  // exponent box for the U-invariant oracle
};

struct SweepResult {
  std::vector<InstanceResult> instances;

  bool passed() const;
  /// Property names in first-seen order.
  std::vector<std::string> property_names() const;
};

/// Names of every property `check_instance` can report.
const std::vector<std::string>& all_property_names();

InstanceResult check_instance(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t box);
SweepResult run_sweep(const SweepOptions& options);

/// One row per instance, one column per property: "ok", "FAIL" or "-".
std::string render_matrix(const SweepResult& result);
/// "p/q m property: detail" lines for every failure.
std::vector<std::string> failures(const SweepResult& result);

}  // namespace sl2flip::verify
