#include "pbnn/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "pbnn/orbit.hpp"

namespace pbnn {

namespace {

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

SweepResult sweep(const SweepSpec& spec) {
  const unsigned n = spec.np.value();
  const auto ids = enumerate_standard_ids(spec.np, spec.budget.max_enumeration);

  auto cns = spec.cns;
  std::sort(cns.begin(), cns.end());
  cns.erase(std::unique(cns.begin(), cns.end()), cns.end());

  // Unit u covers (cns[u / ids.size()], ids[u % ids.size()]): canonical order.
  const std::uint64_t total = std::uint64_t{cns.size()} * ids.size();
  const std::uint64_t units = std::min(total, spec.budget.max_configs);

  std::vector<std::optional<GbpoVerdict>> verdicts(units);
  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&] {
    for (std::uint64_t u; (u = cursor.fetch_add(1, std::memory_order_relaxed)) < units;) {
      const PbnnConfig cfg{n, cns[u / ids.size()], ids[u % ids.size()]};
      verdicts[u] = gbpo_verdict(decompose(build_dmap(cfg)));
    }
  };
  const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(resolve_jobs(spec.jobs), std::max<std::uint64_t>(units, 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SweepResult r;
  r.np = n;
  r.cns = cns;
  r.configs_examined = units;
  r.complete = units == total;
  for (std::uint64_t u = 0; u < units; ++u) {
    const auto& v = *verdicts[u];
    if (v.is_gbpo)
      r.records.push_back({cns[u / ids.size()], ids[u % ids.size()], v.period, v.epp_count});
  }
  for (auto cn : cns) r.basic_periods.push_back({cn, basic_period(cn, spec.np)});

  if (!r.complete)
    throw SweepBudgetError("sweep stopped after " + std::to_string(units) + " of " +
                               std::to_string(total) + " configurations (config budget)",
                           std::move(r));
  return r;
}

namespace {

using Key = std::pair<unsigned, PermutationId>;

std::map<Key, const GbpoRecord*> index_records(const std::vector<GbpoRecord>& records,
                                               const std::vector<ConnectionNumber>& cns) {
  std::map<Key, const GbpoRecord*> out;
  for (const auto& rec : records)
    if (std::find(cns.begin(), cns.end(), rec.cn) != cns.end())
      out.emplace(Key{rec.cn.value(), rec.standard_id}, &rec);
  return out;
}

}  // namespace

DiffReport verify_against_reference(const SweepResult& r, const std::vector<GbpoRecord>& reference) {
  const auto computed = index_records(r.records, r.cns);
  const auto expected = index_records(reference, r.cns);
  DiffReport diff;
  for (const auto& [key, rec] : expected) {
    auto it = computed.find(key);
    if (it == computed.end())
      diff.missing.push_back(*rec);
    else if (it->second->period != rec->period)
      diff.mismatched.push_back({rec->cn, rec->standard_id, rec->period, it->second->period});
  }
  for (const auto& [key, rec] : computed)
    if (!expected.contains(key)) diff.extra.push_back(*rec);
  return diff;
}

std::string DiffReport::to_string() const {
  std::ostringstream os;
  for (const auto& rec : missing)
    os << "missing  CN" << rec.cn.value() << " " << rec.standard_id.digits() << " period "
       << rec.period << "\n";
  for (const auto& rec : extra)
    os << "extra    CN" << rec.cn.value() << " " << rec.standard_id.digits() << " period "
       << rec.period << "\n";
  for (const auto& m : mismatched)
    os << "mismatch CN" << m.cn.value() << " " << m.standard_id.digits() << " reference period "
       << m.expected << ", computed " << m.actual << "\n";
  os << size() << " difference(s)\n";
  return os.str();
}

Summary summarize(const SweepResult& r) {
  Summary s;
  s.np = r.np;
  s.total = r.records.size();
  s.has_reference_data = r.has_reference_data();
  for (auto cn : r.cns) {
    CnSummary row{cn, 0, 0, 0, {}, 0};
    for (const auto& bp : r.basic_periods)
      if (bp.cn == cn) row.basic_period = bp.period;
    for (const auto& rec : r.records) {
      if (rec.cn != cn) continue;
      ++row.count;
      if (rec.period > row.max_period) {
        row.max_period = rec.period;
        row.epp_at_max = rec.epp_count;
        row.argmax.clear();
      }
      if (rec.period == row.max_period) row.argmax.push_back(rec.standard_id);
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

std::string Summary::to_string() const {
  std::ostringstream os;
  os << "np=" << np << ": " << total << " GBPO(s)\n";
  for (const auto& row : rows) {
    os << "CN" << row.cn.value() << ": count " << row.count << ", basic period "
       << row.basic_period;
    if (row.count) {
      os << ", max period " << row.max_period << " (EPPs " << row.epp_at_max << ") at";
      for (const auto& id : row.argmax) os << " " << id.digits();
    }
    os << "\n";
  }
  if (!has_reference_data && np != 0)
    os << "note: no reference tables exist for np=" << np << "; results are unvalidated\n";
  return os.str();
}

}  // namespace pbnn
