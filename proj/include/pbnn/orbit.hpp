#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pbnn/permutation.hpp"
#include "pbnn/types.hpp"

namespace pbnn {

/// Full-state-space analysis is capped at 2^25 states.
inline constexpr unsigned kMaxDmapDimension = 25;

using StateIndex = std::uint32_t;  // 1-based Dmap index C_k

/// Digital return map: next()[k-1] is the index of f(C_k).
class DmapTable {
 public:
  /// Arbitrary table over 2^n states; entries must lie in [1, 2^n].
  DmapTable(unsigned n, std::vector<StateIndex> next);

  unsigned size() const noexcept { return n_; }
  std::uint64_t state_count() const noexcept { return next_.size(); }
  StateIndex operator()(StateIndex k) const { return next_.at(k - 1); }
  const std::vector<StateIndex>& next() const noexcept { return next_; }
  const std::optional<PbnnConfig>& config() const noexcept { return cfg_; }

 private:
  friend DmapTable build_dmap(const PbnnConfig& cfg);

  unsigned n_;
  std::vector<StateIndex> next_;
  std::optional<PbnnConfig> cfg_;
};

DmapTable build_dmap(const PbnnConfig& cfg);

enum class PointKind : std::uint8_t { Periodic, EventuallyPeriodic };

struct StateTag {
  PointKind kind;
  std::uint32_t cycle;      // cycle the state lies on (BPP) or falls into (EPP)
  std::uint32_t transient;  // steps to reach the cycle; 0 for BPPs
};

struct CycleDecomposition {
  unsigned n = 0;
  /// Each cycle in map order starting from its smallest index; cycles sorted
  /// by that smallest index.
  std::vector<std::vector<StateIndex>> cycles;
  std::vector<StateTag> tags;             // tags[k-1] for state C_k
  std::vector<std::uint64_t> basin_sizes;  // per cycle, members included

  const StateTag& tag(StateIndex k) const { return tags.at(k - 1); }
  std::uint64_t state_count() const noexcept { return tags.size(); }
  bool is_endpoint(StateIndex k) const noexcept { return k == 1 || k == tags.size(); }
  bool touches_endpoint(std::size_t cycle) const;
};

CycleDecomposition decompose(const DmapTable& d);

enum class EndpointBehavior : std::uint8_t { FixedPoints, TwoSwap, Other };

const char* to_string(EndpointBehavior b) noexcept;

struct GbpoVerdict {
  bool is_gbpo = false;
  std::uint32_t period = 0;     // 0 unless is_gbpo
  std::uint64_t epp_count = 0;  // EPPs among the 2^n - 2 non-endpoint states
  EndpointBehavior endpoint_behavior = EndpointBehavior::Other;

  friend bool operator==(const GbpoVerdict&, const GbpoVerdict&) = default;
};

/// Globally stable: exactly one cycle avoids the endpoints, every non-endpoint
/// state falls into it, and at least one non-endpoint state is not on it.
GbpoVerdict gbpo_verdict(const CycleDecomposition& c);

/// Longest cycle of the identity network. Endpoint cycles only count when no
/// other cycle is longer than 2.
std::uint32_t basic_period(ConnectionNumber cn, PrimeDim n);

/// Smallest index on the longest cycle (ties go to the cycle with the
/// smallest start).
StateIndex on_orbit_state(const CycleDecomposition& c);

}  // namespace pbnn
