#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbnn/explorer.hpp"
#include "pbnn/orbit.hpp"
#include "pbnn/types.hpp"

namespace pbnn {

inline constexpr std::string_view kToolVersion = "1.0.0";

// ---------------------------------------------------------------------------
// Result files

enum class ResultFormat { Csv, Json };

struct ResultFile {
  unsigned np = 0;
  std::vector<ConnectionNumber> cns;
  std::string tool_version{kToolVersion};
  std::optional<std::string> timestamp;
  bool complete = true;
  std::vector<GbpoRecord> records;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

ResultFile to_result_file(const SweepResult& r, std::optional<std::string> timestamp = {});

/// Rebuilds a SweepResult from a file. Basic periods are recomputed;
/// configs_examined is left at 0.
SweepResult to_sweep_result(const ResultFile& f);

/// CSV: "# key=value" metadata lines, then `cn,standard_id,period,epp_count`.
std::string serialize_csv(const ResultFile& f);
std::string serialize_json(const ResultFile& f);
std::string serialize(const ResultFile& f, ResultFormat fmt);

/// Throws ParseError with the offending line. Metadata lines are optional in
/// CSV (np then comes from the ID length and cns from the rows).
ResultFile parse_csv(std::string_view text);
ResultFile parse_json(std::string_view text);
/// JSON if the first non-blank character is '{', CSV otherwise.
ResultFile parse_results(std::string_view text);

// ---------------------------------------------------------------------------
// Spatiotemporal patterns

enum class RenderStyle { Ascii, Svg };

inline constexpr char kGlyphPositive = '.';  // light, x = +1
inline constexpr char kGlyphNegative = '#';  // dark, x = -1

struct PatternRender {
  std::vector<BinaryVector> grid;  // row t is x^t

  std::size_t rows() const noexcept { return grid.size(); }
  unsigned columns() const noexcept { return grid.empty() ? 0 : grid.front().size(); }
};

PatternRender make_pattern(const BinaryVector& x0, const PbnnConfig& cfg, std::size_t steps);

std::string render_ascii(const PatternRender& p);
/// One rect per cell, time flowing downward.
std::string render_svg(const PatternRender& p, unsigned cell = 10);
std::string render(const PatternRender& p, RenderStyle style);

// ---------------------------------------------------------------------------
// Cycle structure

enum class ReportFormat { Text, Json, Dot, Svg, Csv };

/// `table` provides the edges for DOT/SVG/CSV output.
std::string render_decomposition(const DmapTable& table, const CycleDecomposition& c,
                                 ReportFormat fmt);

}  // namespace pbnn
