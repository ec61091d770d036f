#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pbnn/explorer.hpp"
#include "pbnn/orbit.hpp"
#include "pbnn/report.hpp"

using namespace pbnn;

namespace {

SweepSpec spec_for(std::initializer_list<unsigned> cns, unsigned jobs = 1) {
  SweepSpec s;
  s.cns.clear();
  for (auto cn : cns) s.cns.emplace_back(cn);
  s.jobs = jobs;
  return s;
}

std::vector<GbpoRecord> golden() {
  std::ifstream in(PBNN_REFERENCE_PATH);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str()).records;
}

// One full default sweep shared by several cases.
const SweepResult& full_sweep() {
  static const SweepResult r = sweep(SweepSpec{});
  return r;
}

std::size_t count_cn(const SweepResult& r, unsigned cn) {
  std::size_t n = 0;
  for (const auto& rec : r.records) n += rec.cn.value() == cn;
  return n;
}

}  // namespace

TEST_CASE("sweep CN1") {
  const auto r = sweep(spec_for({1}));
  CHECK(r.records.size() == 27);
  const auto s = summarize(r);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0].max_period == 42);
  REQUIRE(s.rows[0].argmax.size() >= 1);
  CHECK(s.rows[0].argmax.front().digits() == "1357246");
  CHECK(r.configs_examined == 726);
}

TEST_CASE("sweep CN0 and CN7 produce nothing") {
  const auto r = sweep(spec_for({0, 7}));
  CHECK(r.records.empty());
  CHECK(r.configs_examined == 2 * 726);
}

TEST_CASE("default sweep") {
  const auto& r = full_sweep();
  CHECK(r.configs_examined == 726 * 6);
  CHECK(r.complete);
  CHECK(count_cn(r, 1) == 27);
  CHECK(count_cn(r, 2) == 56);
  CHECK(count_cn(r, 3) == 28);
  CHECK(count_cn(r, 5) == 62);
  CHECK(r.records.size() == 173);
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    const auto& a = r.records[i - 1];
    const auto& b = r.records[i];
    CHECK(std::pair(a.cn, a.standard_id) < std::pair(b.cn, b.standard_id));
  }
  for (const auto& rec : r.records) {
    CHECK(rec.period + rec.epp_count == 126);
    CHECK(rec.period % 2 == 0);  // every published entry is even
  }
}

TEST_CASE("sweep output is independent of the worker count") {
  const auto one = sweep(spec_for({1, 2, 3, 5}, 1));
  const auto many = sweep(spec_for({1, 2, 3, 5}, 8));
  const auto all_cores = sweep(spec_for({1, 2, 3, 5}, 0));
  CHECK(serialize_csv(to_result_file(one)) == serialize_csv(to_result_file(many)));
  CHECK(serialize_json(to_result_file(one)) == serialize_json(to_result_file(all_cores)));
}

TEST_CASE("sweep normalises the CN list") {
  const auto r = sweep(spec_for({5, 1, 5}));
  REQUIRE(r.cns.size() == 2);
  CHECK(r.cns[0].value() == 1);
  CHECK(r.cns[1].value() == 5);
}

TEST_CASE("sweeping non-standard EPS members gives identical verdicts") {
  std::mt19937_64 rng{8};
  const auto& r = full_sweep();
  for (int trial = 0; trial < 10; ++trial) {
    const auto& rec = r.records[rng() % r.records.size()];
    for (const auto& member : eps_of(rec.standard_id, PrimeDim{7}).members) {
      const auto v = gbpo_verdict(decompose(build_dmap(PbnnConfig{7, rec.cn, member})));
      CHECK(v.is_gbpo);
      CHECK(v.period == rec.period);
    }
  }
}

TEST_CASE("sweep budget") {
  SweepSpec s = spec_for({1, 2});
  s.budget.max_configs = 800;
  try {
    sweep(s);
    FAIL("expected SweepBudgetError");
  } catch (const SweepBudgetError& e) {
    const auto& partial = e.partial();
    CHECK_FALSE(partial.complete);
    CHECK(partial.configs_examined == 800);
    CHECK(count_cn(partial, 1) == 27);  // all of CN1 (726 units) plus 74 of CN2
    for (const auto& rec : partial.records)
      if (rec.cn.value() == 2) CHECK(rec.standard_id <= enumerate_standard_ids(PrimeDim{7})[73]);
  }

  SweepSpec tight = spec_for({1});
  tight.budget.max_enumeration = 100;
  CHECK_THROWS_AS(sweep(tight), BudgetError);
}

TEST_CASE("verify_against_reference") {
  const auto ref = golden();
  REQUIRE(ref.size() == 173);
  const auto& r = full_sweep();
  CHECK(verify_against_reference(r, ref).empty());

  SUBCASE("CN3 alone") {
    const auto cn3 = sweep(spec_for({3}));
    CHECK(cn3.records.size() == 28);
    CHECK(verify_against_reference(cn3, ref).empty());
  }
  SUBCASE("CN2 alone") {
    const auto cn2 = sweep(spec_for({2}));
    CHECK(cn2.records.size() == 56);
    CHECK(verify_against_reference(cn2, ref).empty());
  }
  SUBCASE("altered period") {
    auto bad = ref;
    bad[5].period += 2;
    const auto d = verify_against_reference(r, bad);
    CHECK(d.size() == 1);
    REQUIRE(d.mismatched.size() == 1);
    CHECK(d.mismatched[0].standard_id == ref[5].standard_id);
    CHECK(d.mismatched[0].actual == ref[5].period);
  }
  SUBCASE("missing and extra rows") {
    auto bad = ref;
    const auto dropped = bad.front();
    bad.erase(bad.begin());
    bad.push_back({ConnectionNumber{1}, PermutationId::identity(7), 14, 112});
    const auto d = verify_against_reference(r, bad);
    CHECK(d.size() == 2);
    REQUIRE(d.extra.size() == 1);
    CHECK(d.extra[0] == dropped);
    REQUIRE(d.missing.size() == 1);
    CHECK(d.missing[0].standard_id == PermutationId::identity(7));
    CHECK(d.to_string().find("missing  CN1 1234567") != std::string::npos);
  }
}

TEST_CASE("summarize") {
  const auto s = summarize(full_sweep());
  auto row = [&](unsigned cn) {
    for (const auto& r : s.rows)
      if (r.cn.value() == cn) return r;
    FAIL("missing row");
    return CnSummary{ConnectionNumber{0}};
  };
  CHECK(row(1).count == 27);
  CHECK(row(1).basic_period == 14);
  CHECK(row(1).max_period == 42);
  CHECK(row(1).epp_at_max == 84);

  CHECK(row(2).count == 56);
  CHECK(row(2).basic_period == 2);
  CHECK(row(2).max_period == 14);
  CHECK(row(2).epp_at_max == 112);
  CHECK(std::find(row(2).argmax.begin(), row(2).argmax.end(), PermutationId::parse("1462753")) != row(2).argmax.end());

  CHECK(row(3).count == 28);
  CHECK(row(3).basic_period == 14);
  CHECK(row(3).max_period == 26);
  CHECK(std::find(row(3).argmax.begin(), row(3).argmax.end(), PermutationId::parse("1256473")) != row(3).argmax.end());

  CHECK(row(5).count == 62);
  CHECK(row(5).basic_period == 2);
  CHECK(row(5).max_period == 14);
  CHECK(std::find(row(5).argmax.begin(), row(5).argmax.end(), PermutationId::parse("1463725")) != row(5).argmax.end());

  CHECK(row(0).count == 0);
  CHECK(row(7).max_period == 0);
  CHECK(s.to_string().find("CN1: count 27, basic period 14, max period 42 (EPPs 84) at 1357246") != std::string::npos);

  const auto empty = summarize(SweepResult{});
  CHECK(empty.total == 0);
  CHECK(empty.rows.empty());
}
