#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "pbnn/errors.hpp"
#include "pbnn/orbit.hpp"
#include "pbnn/report.hpp"

using namespace pbnn;

namespace {

ResultFile random_file(std::mt19937_64& rng) {
  const unsigned np = std::vector<unsigned>{3, 5, 7, 11}[rng() % 4];
  ResultFile f;
  f.np = np;
  for (unsigned cn = 0; cn < 8; ++cn)
    if (rng() % 2) f.cns.emplace_back(cn);
  if (rng() % 2) f.timestamp = "2026-10-15T12:00:00Z";
  f.complete = rng() % 3 != 0;
  const auto states = std::uint64_t{1} << np;
  for (auto cn : f.cns) {
    std::set<std::vector<unsigned>> ids;
    for (int k = 0; k < 5; ++k) ids.insert(oracle::random_permutation(np, rng));
    for (const auto& id : ids) {
      const auto period = static_cast<std::uint32_t>(1 + rng() % (states - 3));
      f.records.push_back({cn, PermutationId{id}, period, states - 2 - period});
    }
  }
  return f;
}

}  // namespace

TEST_CASE("Result files round-trip through CSV and JSON") {
  std::mt19937_64 rng{2026};
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_file(rng);
    REQUIRE(parse_csv(serialize_csv(f)) == f);
    REQUIRE(parse_json(serialize_json(f)) == f);
    REQUIRE(parse_results(serialize(f, ResultFormat::Json)) == f);
    REQUIRE(parse_results(serialize(f, ResultFormat::Csv)) == f);
  }
}

TEST_CASE("CSV layout") {
  ResultFile f;
  f.np = 7;
  f.cns = {ConnectionNumber{1}};
  f.records.push_back({ConnectionNumber{1}, PermutationId::parse("1357246"), 42, 84});
  CHECK(serialize_csv(f) ==
        "# format=pbnn-results\n# np=7\n# cns=1\n# tool_version=1.0.0\n# complete=true\n"
        "cn,standard_id,period,epp_count\n1,1357246,42,84\n");
}

TEST_CASE("CSV without metadata infers np and cns") {
  const auto f = parse_csv("cn,standard_id,period,epp_count\n5,1463725,14,112\n1,1357246,42,84\n");
  CHECK(f.np == 7);
  REQUIRE(f.cns.size() == 2);
  CHECK(f.cns[0].value() == 1);
  CHECK(f.cns[1].value() == 5);
}

TEST_CASE("Parse errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      parse_csv(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  const std::string header = "cn,standard_id,period,epp_count\n";
  CHECK(line_of("") == 0);
  CHECK(line_of("cn,id\n") == 1);
  CHECK(line_of(header + "1,1357246,42,84\n1,13572") == 3);     // truncated
  CHECK(line_of(header + "1,1357246,42,85\n") == 2);              // epp mismatch
  CHECK(line_of(header + "9,1357246,42,84\n") == 2);              // cn range
  CHECK(line_of(header + "1,1357246,x,84\n") == 2);
  CHECK(line_of(header + "1,1357246,42\n") == 2);
  CHECK(line_of(header + "1,1357246,42,84\n1,1357246,42,84\n") == 3);  // duplicate
  CHECK(line_of("# np=5\n" + header + "1,1357246,42,84\n") == 3);       // wrong size
  CHECK(line_of("# complete=maybe\n" + header) == 1);
  CHECK_THROWS_AS(parse_csv("# format=other\n" + header), ParseError);

  CHECK_THROWS_AS(parse_json("{\"np\": 7, \"cns\": [1], \"records\": ["), ParseError);
  CHECK_THROWS_AS(parse_json("{\"np\": 7, \"cns\": [1]}"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"np":7,"cns":[1],"records":[{"cn":1,"standard_id":"1357246","period":42,"epp_count":1}]})"),
                  ParseError);
}

TEST_CASE("to_sweep_result recomputes basic periods") {
  ResultFile f;
  f.np = 7;
  f.cns = {ConnectionNumber{1}, ConnectionNumber{2}};
  const auto r = to_sweep_result(f);
  REQUIRE(r.basic_periods.size() == 2);
  CHECK(r.basic_periods[0].period == 14);
  CHECK(r.basic_periods[1].period == 2);
}

TEST_CASE("ASCII pattern uses two glyphs, light for +1") {
  const PbnnConfig cfg{7, ConnectionNumber{0}, PermutationId::identity(7)};
  const auto p = make_pattern(BinaryVector::lower_endpoint(7), cfg, 3);
  CHECK(p.rows() == 4);
  CHECK(p.columns() == 7);
  CHECK(render_ascii(p) == "#######\n.......\n#######\n.......\n");

  const auto single = make_pattern(BinaryVector::parse(7, "+-+-+--"), cfg, 0);
  CHECK(render_ascii(single) == ".#.#.##\n");
}

TEST_CASE("ASCII pattern of the period-14 orbit repeats") {
  const PbnnConfig cfg{7, ConnectionNumber{1}, PermutationId::identity(7)};
  const auto start = on_orbit_state(decompose(build_dmap(cfg)));
  const auto text = render_ascii(make_pattern(BinaryVector::from_index(7, start), cfg, 28));
  std::vector<std::string> rows;
  for (std::size_t pos = 0; pos < text.size(); pos += 8) rows.push_back(text.substr(pos, 7));
  REQUIRE(rows.size() == 29);
  for (std::size_t t = 0; t + 14 < rows.size(); ++t) CHECK(rows[t] == rows[t + 14]);
  CHECK(rows[0] != rows[7]);
}

TEST_CASE("SVG pattern has one rect per cell") {
  const PbnnConfig cfg{7, ConnectionNumber{1}, PermutationId::parse("2613754")};
  const auto svg = render_svg(make_pattern(BinaryVector::parse(7, "+------"), cfg, 9));
  std::size_t rects = 0;
  for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) ++rects;
  CHECK(rects == 70);
  CHECK(svg.find("height=\"100\"") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("Decomposition reports") {
  const PbnnConfig cfg{7, ConnectionNumber{1}, PermutationId::parse("2613754")};
  const auto table = build_dmap(cfg);
  const auto c = decompose(table);

  const auto text = render_decomposition(table, c, ReportFormat::Text);
  CHECK(text.find("config: n=7 CN1 P(2613754)") != std::string::npos);
  CHECK(text.find("verdict: GBPO, period 20, EPPs 106") != std::string::npos);
  CHECK(text.find("endpoints: two-swap") != std::string::npos);

  const auto json = render_decomposition(table, c, ReportFormat::Json);
  CHECK(json.find("\"is_gbpo\": true") != std::string::npos);
  CHECK(json.find("\"epp_count\": 106") != std::string::npos);

  const auto dot = render_decomposition(table, c, ReportFormat::Dot);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 128);

  const auto csv = render_decomposition(table, c, ReportFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 129);
  CHECK(csv.rfind("128,1,BPP,1,0\n") != std::string::npos);

  const auto svg = render_decomposition(table, c, ReportFormat::Svg);
  std::size_t circles = 0;
  for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  CHECK(circles == 128);
}
