#pragma once

#include "symspec/json_io.hpp"
#include "symspec/spectral.hpp"

namespace symspec {

/// Parameters of a seeded verification campaign. Identical configs produce
/// bit-identical reports.
struct CampaignConfig {
  std::size_t n = 2;
  std::size_t d = 2;
  FieldSpec field = FieldSpec::rationals();
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string kind = "conjugated_cartan";
  unsigned max_total_degree = 6;  // |a| ceiling for multi-index families

  void validate() const;  // n <= 6: matching-sum cost ceiling
};

struct CheckResult {
  std::string check_id;
  std::string property;  // the identity under test
  std::size_t n = 0, d = 0;
  std::string field, kind;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string lhs, rhs, witness;
};

/// Names accepted by run_check_family / the CLI --checks flag.
const std::vector<std::string>& check_family_names();

/// Run one family over `cfg.samples` seeded samples; results ordered by
/// sample index (samples may run in parallel, the merge is deterministic).
std::vector<CheckResult> run_check_family(const std::string& family,
                                          const CampaignConfig& cfg);

/// Families applicable to a single externally supplied tuple (CLI --input).
std::vector<CheckResult> run_checks_on_tuple(const std::vector<std::string>& families,
                                             const CommutingTuple& tuple,
                                             unsigned max_total_degree);

json result_to_json(const CheckResult& r);
json report_to_json(const std::vector<CheckResult>& results);

}  // namespace symspec
