#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "pbnn/dynamics.hpp"
#include "pbnn/report.hpp"

namespace pbnn {

PatternRender make_pattern(const BinaryVector& x0, const PbnnConfig& cfg, std::size_t steps) {
  return {pbnn_trajectory(x0, cfg, steps)};
}

std::string render_ascii(const PatternRender& p) {
  std::string out;
  out.reserve(p.rows() * (p.columns() + 1));
  for (const auto& row : p.grid) {
    for (unsigned i = 1; i <= row.size(); ++i)
      out += row.at(i) > 0 ? kGlyphPositive : kGlyphNegative;
    out += '\n';
  }
  return out;
}

std::string render_svg(const PatternRender& p, unsigned cell) {
  const auto width = p.columns() * cell;
  const auto height = p.rows() * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  for (std::size_t t = 0; t < p.rows(); ++t) {
    const auto& row = p.grid[t];
    for (unsigned i = 1; i <= row.size(); ++i)
      os << "<rect x=\"" << (i - 1) * cell << "\" y=\"" << t * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"" << (row.at(i) > 0 ? "white" : "black")
         << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const PatternRender& p, RenderStyle style) {
  return style == RenderStyle::Svg ? render_svg(p) : render_ascii(p);
}

namespace {

std::string header(const DmapTable& table) {
  if (table.config()) return table.config()->display();
  return "n=" + std::to_string(table.size()) + " (table)";
}

std::map<std::size_t, std::size_t> period_histogram(const CycleDecomposition& c) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& cycle : c.cycles) ++h[cycle.size()];
  return h;
}

std::string text_report(const DmapTable& table, const CycleDecomposition& c) {
  const auto v = gbpo_verdict(c);
  std::ostringstream os;
  os << "config: " << header(table) << "\n";
  os << "states: " << c.state_count() << "\n";
  os << "cycles: " << c.cycles.size() << "\n";
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    os << "  cycle " << i + 1 << ": period " << c.cycles[i].size() << ", basin "
       << c.basin_sizes[i] << ", start C" << c.cycles[i].front();
    if (c.touches_endpoint(i)) os << " (endpoint)";
    os << "\n";
  }
  os << "period histogram:";
  for (auto [period, count] : period_histogram(c)) os << " " << period << "x" << count;
  os << "\n";
  os << "endpoints: " << to_string(v.endpoint_behavior) << "\n";
  if (v.is_gbpo)
    os << "verdict: GBPO, period " << v.period << ", EPPs " << v.epp_count << "\n";
  else
    os << "verdict: not GBPO, EPPs " << v.epp_count << "\n";
  return os.str();
}

std::string json_report(const DmapTable& table, const CycleDecomposition& c) {
  const auto v = gbpo_verdict(c);
  nlohmann::ordered_json j;
  j["config"] = header(table);
  j["states"] = c.state_count();
  auto& cycles = j["cycles"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.cycles.size(); ++i)
    cycles.push_back({{"period", c.cycles[i].size()},
                      {"basin", c.basin_sizes[i]},
                      {"endpoint", c.touches_endpoint(i)},
                      {"members", c.cycles[i]}});
  auto& hist = j["period_histogram"] = nlohmann::ordered_json::object();
  for (auto [period, count] : period_histogram(c)) hist[std::to_string(period)] = count;
  j["verdict"] = {{"is_gbpo", v.is_gbpo},
                  {"period", v.period},
                  {"epp_count", v.epp_count},
                  {"endpoint_behavior", to_string(v.endpoint_behavior)}};
  return j.dump(2) + "\n";
}

std::string dot_report(const DmapTable& table, const CycleDecomposition& c) {
  std::ostringstream os;
  os << "digraph dmap {\n  label=\"" << header(table) << "\";\n  node [shape=point];\n";
  for (StateIndex k = 1; k <= c.state_count(); ++k) {
    const bool periodic = c.tag(k).kind == PointKind::Periodic;
    os << "  C" << k << " -> C" << table(k);
    if (periodic) os << " [color=blue]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// Dmap scatter: x = index of C_k, y = index of f(C_k); periodic orbits in blue.
std::string svg_report(const DmapTable& table, const CycleDecomposition& c) {
  const double size = 400.0;
  const double margin = 20.0;
  const double states = static_cast<double>(c.state_count());
  auto pos = [&](StateIndex k) { return margin + (k - 0.5) / states * size; };
  auto ypos = [&](StateIndex k) { return margin + size - (k - 0.5) / states * size; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin
     << "\" height=\"" << size + 2 * margin << "\">\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size << "\" height=\""
     << size << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin + size << "\" x2=\"" << margin + size
     << "\" y2=\"" << margin << "\" stroke=\"gray\" stroke-dasharray=\"2,2\"/>\n";
  for (const auto& cycle : c.cycles) {
    if (cycle.size() < 2) continue;
    os << "<polyline fill=\"none\" stroke=\"blue\" points=\"";
    for (std::size_t i = 0; i <= cycle.size(); ++i) {
      const auto k = cycle[i % cycle.size()];
      os << pos(k) << "," << ypos(table(k)) << " ";
    }
    os << "\"/>\n";
  }
  for (StateIndex k = 1; k <= c.state_count(); ++k)
    os << "<circle cx=\"" << pos(k) << "\" cy=\"" << ypos(table(k)) << "\" r=\"1.5\" fill=\""
       << (c.tag(k).kind == PointKind::Periodic ? "blue" : "black") << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string csv_report(const DmapTable& table, const CycleDecomposition& c) {
  std::ostringstream os;
  os << "index,next,kind,cycle,transient\n";
  for (StateIndex k = 1; k <= c.state_count(); ++k) {
    const auto& t = c.tag(k);
    os << k << "," << table(k) << "," << (t.kind == PointKind::Periodic ? "BPP" : "EPP") << ","
       << t.cycle + 1 << "," << t.transient << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_decomposition(const DmapTable& table, const CycleDecomposition& c,
                                 ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json:
      return json_report(table, c);
    case ReportFormat::Dot:
      return dot_report(table, c);
    case ReportFormat::Svg:
      return svg_report(table, c);
    case ReportFormat::Csv:
      return csv_report(table, c);
    case ReportFormat::Text:
      break;
  }
  return text_report(table, c);
}

}  // namespace pbnn
