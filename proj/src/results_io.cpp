#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

#include "pbnn/errors.hpp"
#include "pbnn/report.hpp"

namespace pbnn {

namespace {

constexpr std::string_view kCsvHeader = "cn,standard_id,period,epp_count";
constexpr std::string_view kFormatTag = "pbnn-results";

std::uint64_t expected_epps(unsigned np, std::uint32_t period) {
  return (std::uint64_t{1} << np) - 2 - period;
}

std::string join_cns(const std::vector<ConnectionNumber>& cns) {
  std::string s;
  for (std::size_t i = 0; i < cns.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(cns[i].value());
  }
  return s;
}

template <class T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::vector<ConnectionNumber> parse_cn_list(std::string_view text, std::size_t line) {
  std::vector<ConnectionNumber> cns;
  if (trim(text).empty()) return cns;
  for (auto field : split(text, ',')) {
    const auto v = parse_number<unsigned>(field, line, "connection number");
    if (v > 7) throw ParseError(line, "connection number out of range");
    cns.emplace_back(v);
  }
  return cns;
}

GbpoRecord make_record(unsigned cn, std::string_view id, std::uint32_t period,
                       std::uint64_t epps, unsigned& np, std::size_t line) {
  if (cn > 7) throw ParseError(line, "connection number " + std::to_string(cn) + " out of range");
  std::optional<PermutationId> perm;
  try {
    perm = PermutationId::parse(id);
  } catch (const ConfigError& e) {
    throw ParseError(line, "invalid standard_id '" + std::string(id) + "': " + e.what());
  }
  if (np == 0) np = perm->size();
  if (perm->size() != np)
    throw ParseError(line, "standard_id '" + std::string(id) + "' does not have " +
                               std::to_string(np) + " entries");
  if (np > 63) throw ParseError(line, "np too large");
  if (period == 0 || period >= (std::uint64_t{1} << np) - 2)
    throw ParseError(line, "period " + std::to_string(period) + " out of range");
  if (epps != expected_epps(np, period))
    throw ParseError(line, "epp_count " + std::to_string(epps) + " != 2^np - 2 - period");
  return {ConnectionNumber{cn}, std::move(*perm), period, epps};
}

void finish(ResultFile& f, bool have_cns) {
  if (!have_cns) {
    for (const auto& rec : f.records)
      if (std::find(f.cns.begin(), f.cns.end(), rec.cn) == f.cns.end()) f.cns.push_back(rec.cn);
    std::sort(f.cns.begin(), f.cns.end());
  }
}

}  // namespace

ResultFile to_result_file(const SweepResult& r, std::optional<std::string> timestamp) {
  ResultFile f;
  f.np = r.np;
  f.cns = r.cns;
  f.timestamp = std::move(timestamp);
  f.complete = r.complete;
  f.records = r.records;
  return f;
}

SweepResult to_sweep_result(const ResultFile& f) {
  SweepResult r;
  r.np = f.np;
  r.cns = f.cns;
  r.records = f.records;
  r.complete = f.complete;
  if (f.np != 0 && is_prime(f.np) && f.np <= kMaxDmapDimension)
    for (auto cn : f.cns) r.basic_periods.push_back({cn, basic_period(cn, PrimeDim{f.np})});
  return r;
}

std::string serialize_csv(const ResultFile& f) {
  std::ostringstream os;
  os << "# format=" << kFormatTag << "\n";
  os << "# np=" << f.np << "\n";
  os << "# cns=" << join_cns(f.cns) << "\n";
  os << "# tool_version=" << f.tool_version << "\n";
  if (f.timestamp) os << "# timestamp=" << *f.timestamp << "\n";
  os << "# complete=" << (f.complete ? "true" : "false") << "\n";
  os << kCsvHeader << "\n";
  for (const auto& rec : f.records)
    os << rec.cn.value() << "," << rec.standard_id.digits() << "," << rec.period << ","
       << rec.epp_count << "\n";
  return os.str();
}

std::string serialize_json(const ResultFile& f) {
  nlohmann::ordered_json j;
  j["format"] = kFormatTag;
  j["np"] = f.np;
  std::vector<unsigned> cns;
  for (auto cn : f.cns) cns.push_back(cn.value());
  j["cns"] = cns;
  j["tool_version"] = f.tool_version;
  j["timestamp"] = f.timestamp ? nlohmann::ordered_json(*f.timestamp) : nlohmann::ordered_json();
  j["complete"] = f.complete;
  auto& rows = j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : f.records)
    rows.push_back({{"cn", rec.cn.value()},
                    {"standard_id", rec.standard_id.digits()},
                    {"period", rec.period},
                    {"epp_count", rec.epp_count}});
  return j.dump(2) + "\n";
}

std::string serialize(const ResultFile& f, ResultFormat fmt) {
  return fmt == ResultFormat::Json ? serialize_json(f) : serialize_csv(f);
}

ResultFile parse_csv(std::string_view text) {
  ResultFile f;
  f.tool_version.clear();
  bool have_cns = false;
  bool seen_header = false;
  std::size_t line_no = 0;
  std::map<std::pair<unsigned, std::string>, std::size_t> seen;
  while (!text.empty()) {
    auto eol = text.find('\n');
    auto line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (line.empty()) continue;

    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;  // free-form comment
      auto key = trim(body.substr(0, eq));
      auto value = trim(body.substr(eq + 1));
      if (key == "np") {
        f.np = parse_number<unsigned>(value, line_no, "np");
      } else if (key == "cns") {
        f.cns = parse_cn_list(value, line_no);
        have_cns = true;
      } else if (key == "tool_version") {
        f.tool_version = value;
      } else if (key == "timestamp") {
        f.timestamp = std::string(value);
      } else if (key == "complete") {
        if (value != "true" && value != "false") throw ParseError(line_no, "complete must be true or false");
        f.complete = value == "true";
      } else if (key == "format" && value != kFormatTag) {
        throw ParseError(line_no, "unknown format '" + std::string(value) + "'");
      }
      continue;
    }

    if (!seen_header) {
      if (line != kCsvHeader)
        throw ParseError(line_no, "expected header '" + std::string(kCsvHeader) + "'");
      seen_header = true;
      continue;
    }

    const auto fields = split(line, ',');
    if (fields.size() != 4 && !(fields.size() > 4 && f.np > 9))
      throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    // Wide IDs (np > 9) are themselves comma separated.
    std::string id;
    for (std::size_t i = 1; i + 2 < fields.size(); ++i) {
      if (i > 1) id += ',';
      id += fields[i];
    }
    const auto cn = parse_number<unsigned>(fields.front(), line_no, "connection number");
    const auto period = parse_number<std::uint32_t>(fields[fields.size() - 2], line_no, "period");
    const auto epps = parse_number<std::uint64_t>(fields.back(), line_no, "epp_count");
    f.records.push_back(make_record(cn, id, period, epps, f.np, line_no));
    const auto [it, fresh] = seen.emplace(std::pair{cn, f.records.back().standard_id.digits()}, line_no);
    if (!fresh)
      throw ParseError(line_no, "duplicate record (also on line " + std::to_string(it->second) + ")");
  }
  if (!seen_header) throw ParseError(line_no, "missing header '" + std::string(kCsvHeader) + "'");
  finish(f, have_cns);
  return f;
}

ResultFile parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(line, e.what());
  }
  try {
    if (j.value("format", std::string(kFormatTag)) != kFormatTag)
      throw ParseError(0, "unknown format");
    ResultFile f;
    f.np = j.at("np").get<unsigned>();
    for (unsigned cn : j.at("cns").get<std::vector<unsigned>>()) {
      if (cn > 7) throw ParseError(0, "connection number out of range");
      f.cns.emplace_back(cn);
    }
    f.tool_version = j.value("tool_version", std::string{});
    if (j.contains("timestamp") && !j["timestamp"].is_null())
      f.timestamp = j["timestamp"].get<std::string>();
    f.complete = j.value("complete", true);
    std::size_t row = 0;
    for (const auto& rec : j.at("records")) {
      ++row;
      try {
        f.records.push_back(make_record(rec.at("cn").get<unsigned>(),
                                        rec.at("standard_id").get<std::string>(),
                                        rec.at("period").get<std::uint32_t>(),
                                        rec.at("epp_count").get<std::uint64_t>(), f.np, 0));
      } catch (const ParseError& e) {
        throw ParseError(0, "record " + std::to_string(row) + ": " + e.what());
      }
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
}

ResultFile parse_results(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_csv(text);
}

}  // namespace pbnn
