#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pbnn/errors.hpp"
#include "pbnn/permutation.hpp"
#include "pbnn/types.hpp"

namespace pbnn {

struct SweepBudget {
  std::uint64_t max_enumeration = kDefaultEnumerationBudget;
  std::uint64_t max_configs = std::numeric_limits<std::uint64_t>::max();
};

struct SweepSpec {
  PrimeDim np{7};
  std::vector<ConnectionNumber> cns = default_connection_numbers();
  SweepBudget budget;
  unsigned jobs = 1;  // 0 = hardware concurrency
};

struct GbpoRecord {
  ConnectionNumber cn;
  PermutationId standard_id;
  std::uint32_t period;
  std::uint64_t epp_count;

  friend bool operator==(const GbpoRecord&, const GbpoRecord&) = default;
};

struct BasicPeriod {
  ConnectionNumber cn;
  std::uint32_t period;

  friend bool operator==(const BasicPeriod&, const BasicPeriod&) = default;
};

struct SweepResult {
  unsigned np = 0;
  std::vector<ConnectionNumber> cns;
  std::vector<GbpoRecord> records;  // sorted by (cn, standard_id)
  std::vector<BasicPeriod> basic_periods;
  std::uint64_t configs_examined = 0;
  bool complete = true;

  /// Only np = 7 has published reference tables to compare against.
  bool has_reference_data() const noexcept { return np == 7; }
};

/// Thrown by sweep() when the config budget runs out. Carries the units that
/// were finished, in canonical order.
class SweepBudgetError : public BudgetError {
 public:
  SweepBudgetError(const std::string& what, SweepResult partial)
      : BudgetError(what), partial_(std::move(partial)) {}

  const SweepResult& partial() const noexcept { return partial_; }

 private:
  SweepResult partial_;
};

SweepResult sweep(const SweepSpec& spec);

struct PeriodMismatch {
  ConnectionNumber cn;
  PermutationId standard_id;
  std::uint32_t expected;
  std::uint32_t actual;
};

struct DiffReport {
  std::vector<GbpoRecord> missing;  // in reference, not computed
  std::vector<GbpoRecord> extra;    // computed, not in reference
  std::vector<PeriodMismatch> mismatched;

  bool empty() const noexcept { return missing.empty() && extra.empty() && mismatched.empty(); }
  std::size_t size() const noexcept { return missing.size() + extra.size() + mismatched.size(); }
  std::string to_string() const;
};

/// Compares records of the CNs in `r.cns`; reference rows for other CNs are ignored.
DiffReport verify_against_reference(const SweepResult& r, const std::vector<GbpoRecord>& reference);

struct CnSummary {
  ConnectionNumber cn;
  std::size_t count = 0;
  std::uint32_t basic_period = 0;
  std::uint32_t max_period = 0;
  std::vector<PermutationId> argmax;
  std::uint64_t epp_at_max = 0;
};

struct Summary {
  unsigned np = 0;
  std::vector<CnSummary> rows;
  std::size_t total = 0;
  bool has_reference_data = false;

  std::string to_string() const;
};

Summary summarize(const SweepResult& r);

}  // namespace pbnn
