// pbnn: command-line driver over the libpbnn C API.
//
// Exit codes: 0 ok, 1 verify found differences, 2 usage or parse error,
// 3 budget exceeded, 4 internal error.

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbnn/pbnn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct CliError {
  int code;
  std::string message;
};

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};

using String = std::unique_ptr<pbnn_string, Deleter<pbnn_string, pbnn_string_destroy>>;
using Config = std::unique_ptr<pbnn_config, Deleter<pbnn_config, pbnn_config_destroy>>;
using Analysis = std::unique_ptr<pbnn_analysis, Deleter<pbnn_analysis, pbnn_analysis_destroy>>;
using IdList = std::unique_ptr<pbnn_id_list, Deleter<pbnn_id_list, pbnn_id_list_destroy>>;
using Results = std::unique_ptr<pbnn_results, Deleter<pbnn_results, pbnn_results_destroy>>;

int exit_code_for(pbnn_status st) {
  switch (st) {
    case PBNN_OK: return kExitOk;
    case PBNN_ERROR_BUDGET:
    case PBNN_ERROR_OVERFLOW: return kExitBudget;
    case PBNN_ERROR_INTERNAL: return kExitInternal;
    default: return kExitUsage;
  }
}

void check(pbnn_status st) {
  if (st != PBNN_OK) throw CliError{exit_code_for(st), pbnn_last_error()};
}

std::string text_of(const String& s) { return {pbnn_string_data(s.get()), pbnn_string_size(s.get())}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitUsage, "cannot write " + path};
  out << content;
}

Config make_config(unsigned n, unsigned cn, const std::string& perm) {
  pbnn_config* raw = nullptr;
  check(pbnn_config_create(n, cn, perm.empty() ? nullptr : perm.c_str(), &raw));
  return Config{raw};
}

Analysis analyse(const Config& cfg) {
  pbnn_analysis* raw = nullptr;
  check(pbnn_analysis_create(cfg.get(), &raw));
  return Analysis{raw};
}

std::vector<unsigned> parse_cn_list(const std::string& text) {
  std::vector<unsigned> cns;
  std::stringstream ss(text);
  for (std::string field; std::getline(ss, field, ',');) {
    if (field.size() != 1 || field[0] < '0' || field[0] > '7')
      throw CliError{kExitUsage, "invalid connection number '" + field + "' in --cns"};
    cns.push_back(static_cast<unsigned>(field[0] - '0'));
  }
  if (cns.empty()) throw CliError{kExitUsage, "--cns is empty"};
  return cns;
}

std::string timestamp_now() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("PBNN_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 0) return static_cast<unsigned>(v);
  }
  return 1;
}

// ---- commands ---------------------------------------------------------------

struct SimulateArgs {
  unsigned n = 7;
  unsigned cn = 1;
  std::string perm;
  std::string init = "on-orbit";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t steps = 28;
  std::string render = "ascii";
  std::string out;
};

int cmd_simulate(const SimulateArgs& a) {
  const auto cfg = make_config(a.n, a.cn, a.perm);
  std::uint64_t x0 = 0;
  if (a.init == "on-orbit") {
    check(pbnn_analysis_on_orbit_state(analyse(cfg).get(), &x0));
  } else if (a.init == "random") {
    if (!a.seed_given) throw CliError{kExitUsage, "--init random requires --seed"};
    check(pbnn_state_random(a.n, a.seed, &x0));
  } else {
    check(pbnn_state_parse(a.n, a.init.c_str(), &x0));
  }
  pbnn_string* raw = nullptr;
  check(pbnn_render_pattern(cfg.get(), x0, a.steps,
                            a.render == "svg" ? PBNN_RENDER_SVG : PBNN_RENDER_ASCII, &raw));
  write_output(a.out, text_of(String{raw}));
  return kExitOk;
}

struct ClassifyArgs {
  unsigned n = 7;
  unsigned cn = 1;
  std::string perm;
  std::string format = "text";
  std::string dot, svg, csv;
};

int cmd_classify(const ClassifyArgs& a) {
  const auto cfg = make_config(a.n, a.cn, a.perm);
  const auto an = analyse(cfg);
  auto report = [&](pbnn_report_format f) {
    pbnn_string* raw = nullptr;
    check(pbnn_analysis_report(an.get(), f, &raw));
    return text_of(String{raw});
  };
  std::cout << report(a.format == "json" ? PBNN_REPORT_JSON : PBNN_REPORT_TEXT);
  if (!a.dot.empty()) write_output(a.dot, report(PBNN_REPORT_DOT));
  if (!a.svg.empty()) write_output(a.svg, report(PBNN_REPORT_SVG));
  if (!a.csv.empty()) write_output(a.csv, report(PBNN_REPORT_CSV));
  return kExitOk;
}

struct StandardIdsArgs {
  unsigned np = 7;
  std::string out;
  std::uint64_t budget = 0;
};

int cmd_standard_ids(const StandardIdsArgs& a) {
  pbnn_id_list* raw = nullptr;
  check(pbnn_standard_ids_create(a.np, a.budget, &raw));
  const IdList list{raw};
  std::string body;
  for (std::size_t i = 0; i < pbnn_id_list_size(list.get()); ++i)
    body += std::string(pbnn_id_list_at(list.get(), i)) + "\n";
  write_output(a.out, body);
  std::uint64_t expected = 0;
  check(pbnn_count_standard_ids(a.np, &expected));
  (a.out.empty() || a.out == "-" ? std::cerr : std::cout)
      << "count: " << pbnn_id_list_size(list.get()) << " (formula " << expected << ")\n";
  return kExitOk;
}

struct ExploreArgs {
  unsigned np = 7;
  std::string cns = "0,1,2,3,5,7";
  unsigned jobs = default_jobs();
  std::string out;
  std::string format;
  std::uint64_t max_configs = 0;
  bool timestamp = false;
};

int cmd_explore(const ExploreArgs& a) {
  const auto cns = parse_cn_list(a.cns);
  pbnn_sweep_options opt{};
  opt.np = a.np;
  opt.cns = cns.data();
  opt.cn_count = cns.size();
  opt.jobs = a.jobs;
  opt.max_configs = a.max_configs;
  pbnn_results* raw = nullptr;
  const pbnn_status st = pbnn_sweep_run(&opt, &raw);
  const Results results{raw};
  if (st != PBNN_OK && !(st == PBNN_ERROR_BUDGET && results)) check(st);
  const std::string budget_message = st == PBNN_OK ? "" : pbnn_last_error();

  std::string format = a.format;
  if (format.empty())
    format = a.out.size() >= 5 && a.out.substr(a.out.size() - 5) == ".json" ? "json" : "csv";
  pbnn_string* text = nullptr;
  const std::string stamp = a.timestamp ? timestamp_now() : std::string{};
  check(pbnn_results_serialize(results.get(), format == "json" ? PBNN_RESULTS_JSON : PBNN_RESULTS_CSV,
                               a.timestamp ? stamp.c_str() : nullptr, &text));
  write_output(a.out, text_of(String{text}));

  pbnn_string* summary = nullptr;
  check(pbnn_results_summary(results.get(), &summary));
  (a.out.empty() || a.out == "-" ? std::cerr : std::cout) << text_of(String{summary});
  if (st != PBNN_OK) {
    std::cerr << "pbnn: " << budget_message << "; partial results marked incomplete\n";
    return kExitBudget;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string results;
  std::string reference = PBNN_REFERENCE_PATH;
};

Results parse_file(const std::string& path) {
  const auto text = read_file(path);
  pbnn_results* raw = nullptr;
  const auto st = pbnn_results_parse(text.data(), text.size(), &raw);
  if (st != PBNN_OK) throw CliError{kExitUsage, path + ": " + pbnn_last_error()};
  return Results{raw};
}

int cmd_verify(const VerifyArgs& a) {
  const auto results = parse_file(a.results);
  const auto reference = parse_file(a.reference);
  std::size_t differences = 0;
  pbnn_string* raw = nullptr;
  check(pbnn_results_verify(results.get(), reference.get(), &differences, &raw));
  std::cout << text_of(String{raw});
  return differences == 0 ? kExitOk : kExitDiff;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation binary neural networks: simulation, Dmap analysis and GBPO sweeps"};
  app.set_version_flag("--version", pbnn_version());
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Print a spatiotemporal pattern");
  simulate->add_option("--n", sim.n, "Dimension")->capture_default_str();
  simulate->add_option("--cn", sim.cn, "Connection number 0..7")->capture_default_str();
  simulate->add_option("--perm", sim.perm, "Permutation ID digits (default identity)");
  simulate->add_option("--init", sim.init, "on-orbit | random | state literal such as +--+-+-")
      ->capture_default_str();
  auto* seed_opt = simulate->add_option("--seed", sim.seed, "Seed for --init random");
  simulate->add_option("--steps", sim.steps, "Number of steps")->capture_default_str();
  simulate->add_option("--render", sim.render, "ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "Output file (default stdout)");

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "Decompose the Dmap and report GBPO status");
  classify->add_option("--n", cls.n, "Dimension")->capture_default_str();
  classify->add_option("--cn", cls.cn, "Connection number 0..7")->capture_default_str();
  classify->add_option("--perm", cls.perm, "Permutation ID digits (default identity)");
  classify->add_option("--format", cls.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  classify->add_option("--dot", cls.dot, "Write the functional graph as DOT");
  classify->add_option("--svg", cls.svg, "Write the Dmap as SVG");
  classify->add_option("--csv", cls.csv, "Write the per-state table as CSV");

  StandardIdsArgs sid;
  auto* standard = app.add_subcommand("standard-ids", "List standard permutation IDs");
  standard->add_option("--np", sid.np, "Prime dimension")->capture_default_str();
  standard->add_option("--out", sid.out, "Output file (default stdout)");
  standard->add_option("--budget", sid.budget, "Maximum permutations to examine");

  ExploreArgs exp;
  auto* explore = app.add_subcommand("explore", "Sweep standard IDs x connection numbers for GBPOs");
  explore->add_option("--np", exp.np, "Prime dimension")->capture_default_str();
  explore->add_option("--cns", exp.cns, "Comma separated connection numbers")->capture_default_str();
  explore->add_option("--jobs", exp.jobs, "Worker threads, 0 = all cores (env PBNN_JOBS)")
      ->capture_default_str();
  explore->add_option("--out", exp.out, "Result file (default stdout)");
  explore->add_option("--format", exp.format, "csv | json (default from --out extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  explore->add_option("--max-configs", exp.max_configs, "Stop after this many configurations");
  explore->add_flag("--timestamp", exp.timestamp,
                    "Record the run time (SOURCE_DATE_EPOCH if set) in the metadata");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Compare a result file with reference tables");
  verify->add_option("--results", ver.results, "Result file (CSV or JSON)")->required();
  verify->add_option("--reference", ver.reference, "Reference file")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) {
      sim.seed_given = seed_opt->count() > 0;
      return cmd_simulate(sim);
    }
    if (*classify) return cmd_classify(cls);
    if (*standard) return cmd_standard_ids(sid);
    if (*explore) return cmd_explore(exp);
    if (*verify) return cmd_verify(ver);
  } catch (const CliError& e) {
    std::cerr << "pbnn: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
