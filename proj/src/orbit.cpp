#include "pbnn/orbit.hpp"

#include <algorithm>
#include <numeric>

#include "pbnn/dynamics.hpp"
#include "pbnn/errors.hpp"

namespace pbnn {

DmapTable::DmapTable(unsigned n, std::vector<StateIndex> next) : n_(n), next_(std::move(next)) {
  if (n < 1 || n > kMaxDmapDimension)
    throw BudgetError("Dmap dimension " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(kMaxDmapDimension));
  const std::uint64_t states = std::uint64_t{1} << n;
  if (next_.size() != states)
    throw ConfigError("Dmap table must have 2^n = " + std::to_string(states) + " entries");
  for (StateIndex k : next_)
    if (k < 1 || k > states) throw ConfigError("Dmap entry " + std::to_string(k) + " out of range");
}

DmapTable build_dmap(const PbnnConfig& cfg) {
  const unsigned n = cfg.size();
  if (n > kMaxDmapDimension)
    throw BudgetError("Dmap dimension " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(kMaxDmapDimension));
  const StepKernel f{cfg};
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<StateIndex> next(states);
  for (std::uint64_t bits = 0; bits < states; ++bits)
    next[bits] = static_cast<StateIndex>(f(bits) + 1);
  DmapTable table{n, std::move(next)};
  table.cfg_ = cfg;
  return table;
}

bool CycleDecomposition::touches_endpoint(std::size_t cycle) const {
  const auto& c = cycles.at(cycle);
  return std::any_of(c.begin(), c.end(), [this](StateIndex k) { return is_endpoint(k); });
}

CycleDecomposition decompose(const DmapTable& d) {
  enum : std::uint8_t { kUnvisited, kOnPath, kResolved };

  const auto& next = d.next();
  const std::size_t states = next.size();
  std::vector<std::uint8_t> color(states, kUnvisited);
  std::vector<std::uint32_t> path_pos(states, 0);
  std::vector<StateTag> tags(states);
  std::vector<std::vector<StateIndex>> cycles;
  std::vector<std::uint32_t> path;

  // 0-based walk over the functional graph.
  for (std::uint32_t start = 0; start < states; ++start) {
    if (color[start] != kUnvisited) continue;
    path.clear();
    std::uint32_t v = start;
    while (color[v] == kUnvisited) {
      color[v] = kOnPath;
      path_pos[v] = static_cast<std::uint32_t>(path.size());
      path.push_back(v);
      v = next[v] - 1;
    }

    std::uint32_t target;
    std::uint32_t depth;
    if (color[v] == kOnPath) {
      // The walk closed on itself: path[pos..] is a new cycle.
      const auto pos = path_pos[v];
      target = static_cast<std::uint32_t>(cycles.size());
      const auto period = static_cast<std::uint32_t>(path.size() - pos);
      std::vector<StateIndex> cycle;
      cycle.reserve(period);
      for (auto i = pos; i < path.size(); ++i) {
        tags[path[i]] = {PointKind::Periodic, target, 0};
        color[path[i]] = kResolved;
        cycle.push_back(path[i] + 1);
      }
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      cycles.push_back(std::move(cycle));
      path.resize(pos);
      depth = 0;
    } else {
      target = tags[v].cycle;
      depth = tags[v].transient;
    }

    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      tags[*it] = {PointKind::EventuallyPeriodic, target, ++depth};
      color[*it] = kResolved;
    }
  }

  // Canonical cycle order: by smallest member.
  std::vector<std::uint32_t> order(cycles.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return cycles[a].front() < cycles[b].front(); });
  std::vector<std::uint32_t> remap(cycles.size());
  CycleDecomposition out;
  out.n = d.size();
  out.cycles.reserve(cycles.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    out.cycles.push_back(std::move(cycles[order[i]]));
  }
  out.basin_sizes.assign(out.cycles.size(), 0);
  for (auto& t : tags) {
    t.cycle = remap[t.cycle];
    ++out.basin_sizes[t.cycle];
  }
  out.tags = std::move(tags);
  return out;
}

const char* to_string(EndpointBehavior b) noexcept {
  switch (b) {
    case EndpointBehavior::FixedPoints:
      return "fixed-points";
    case EndpointBehavior::TwoSwap:
      return "two-swap";
    case EndpointBehavior::Other:
      break;
  }
  return "other";
}

namespace {

EndpointBehavior endpoint_behavior(const CycleDecomposition& c) {
  const auto last = static_cast<StateIndex>(c.state_count());
  const auto& lo = c.tag(1);
  const auto& hi = c.tag(last);
  if (lo.kind != PointKind::Periodic || hi.kind != PointKind::Periodic)
    return EndpointBehavior::Other;
  const auto& lo_cycle = c.cycles[lo.cycle];
  if (lo.cycle != hi.cycle && lo_cycle.size() == 1 && c.cycles[hi.cycle].size() == 1)
    return EndpointBehavior::FixedPoints;
  if (lo.cycle == hi.cycle && lo_cycle.size() == 2) return EndpointBehavior::TwoSwap;
  return EndpointBehavior::Other;
}

}  // namespace

GbpoVerdict gbpo_verdict(const CycleDecomposition& c) {
  GbpoVerdict v;
  if (c.state_count() < 4) return v;
  v.endpoint_behavior = endpoint_behavior(c);

  const auto last = static_cast<StateIndex>(c.state_count());
  for (StateIndex k = 2; k < last; ++k)
    if (c.tag(k).kind == PointKind::EventuallyPeriodic) ++v.epp_count;

  std::size_t candidate = c.cycles.size();
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    if (c.touches_endpoint(i)) continue;
    if (candidate != c.cycles.size()) return v;  // more than one cycle
    candidate = i;
  }
  if (candidate == c.cycles.size()) return v;

  for (StateIndex k = 2; k < last; ++k)
    if (c.tag(k).cycle != candidate) return v;

  const auto period = static_cast<std::uint32_t>(c.cycles[candidate].size());
  if (period >= c.state_count() - 2) return v;  // no EPPs left
  v.is_gbpo = true;
  v.period = period;
  return v;
}

std::uint32_t basic_period(ConnectionNumber cn, PrimeDim n) {
  const auto c = decompose(build_dmap(PbnnConfig{n.value(), cn, PermutationId::identity(n.value())}));
  std::uint32_t inner = 0;
  std::uint32_t any = 0;
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    const auto len = static_cast<std::uint32_t>(c.cycles[i].size());
    any = std::max(any, len);
    if (!c.touches_endpoint(i)) inner = std::max(inner, len);
  }
  return inner > 2 ? inner : any;
}

StateIndex on_orbit_state(const CycleDecomposition& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.cycles.size(); ++i)
    if (c.cycles[i].size() > c.cycles[best].size()) best = i;
  return c.cycles.at(best).front();
}

}  // namespace pbnn
