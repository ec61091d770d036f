#include "pbnn/pbnn.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <random>
#include <string>

#include "pbnn/dynamics.hpp"
#include "pbnn/errors.hpp"
#include "pbnn/explorer.hpp"
#include "pbnn/orbit.hpp"
#include "pbnn/permutation.hpp"
#include "pbnn/report.hpp"

struct pbnn_string {
  std::string value;
};

struct pbnn_config {
  pbnn::PbnnConfig cfg;
};

struct pbnn_analysis {
  pbnn::DmapTable table;
  pbnn::CycleDecomposition decomposition;
};

struct pbnn_id_list {
  std::vector<std::string> ids;
};

struct pbnn_results {
  pbnn::SweepResult result;
  std::string tool_version{pbnn::kToolVersion};
};

namespace {

thread_local std::string last_error;

pbnn_status fail(pbnn_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping library exceptions onto status codes.
template <class F>
pbnn_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return PBNN_OK;
  } catch (const pbnn::DimensionError& e) {
    return fail(PBNN_ERROR_DIMENSION, e.what());
  } catch (const pbnn::NotPrimeError& e) {
    return fail(PBNN_ERROR_NOT_PRIME, e.what());
  } catch (const pbnn::ConfigError& e) {
    return fail(PBNN_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const pbnn::BudgetError& e) {
    return fail(PBNN_ERROR_BUDGET, e.what());
  } catch (const pbnn::ParseError& e) {
    return fail(PBNN_ERROR_PARSE, e.what());
  } catch (const pbnn::OverflowError& e) {
    return fail(PBNN_ERROR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PBNN_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PBNN_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(PBNN_ERROR_INTERNAL, "unknown error");
  }
}

template <class... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

pbnn_status null_argument() { return fail(PBNN_ERROR_INVALID_ARGUMENT, "null argument"); }

pbnn_string* make_string(std::string s) { return new pbnn_string{std::move(s)}; }

}  // namespace

extern "C" {

const char* pbnn_version(void) { return pbnn::kToolVersion.data(); }

const char* pbnn_status_string(pbnn_status status) {
  switch (status) {
    case PBNN_OK: return "ok";
    case PBNN_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case PBNN_ERROR_DIMENSION: return "dimension mismatch";
    case PBNN_ERROR_NOT_PRIME: return "dimension is not prime";
    case PBNN_ERROR_BUDGET: return "budget exceeded";
    case PBNN_ERROR_PARSE: return "parse error";
    case PBNN_ERROR_OVERFLOW: return "overflow";
    case PBNN_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pbnn_last_error(void) { return last_error.c_str(); }

const char* pbnn_string_data(const pbnn_string* s) { return s ? s->value.c_str() : ""; }
size_t pbnn_string_size(const pbnn_string* s) { return s ? s->value.size() : 0; }
void pbnn_string_destroy(pbnn_string* s) { delete s; }

pbnn_status pbnn_config_create(unsigned n, unsigned cn, const char* perm, pbnn_config** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    auto p = perm ? pbnn::PermutationId::parse(perm) : pbnn::PermutationId::identity(n);
    if (p.size() != n)
      throw pbnn::DimensionError("permutation '" + std::string(perm) + "' has " +
                              std::to_string(p.size()) + " entries but n is " + std::to_string(n));
    *out = new pbnn_config{pbnn::PbnnConfig{n, pbnn::ConnectionNumber{cn}, std::move(p)}};
  });
}

void pbnn_config_destroy(pbnn_config* cfg) { delete cfg; }

unsigned pbnn_config_dimension(const pbnn_config* cfg) { return cfg ? cfg->cfg.size() : 0; }

pbnn_status pbnn_config_describe(const pbnn_config* cfg, pbnn_string** out) {
  if (any_null(cfg, out)) return null_argument();
  return guarded([&] { *out = make_string(cfg->cfg.display()); });
}

pbnn_status pbnn_step(const pbnn_config* cfg, uint64_t state, uint64_t* out) {
  if (any_null(cfg, out)) return null_argument();
  return guarded([&] {
    *out = pbnn::pbnn_step(pbnn::BinaryVector{cfg->cfg.size(), state}, cfg->cfg).bits();
  });
}

pbnn_status pbnn_trajectory(const pbnn_config* cfg, uint64_t x0, size_t steps, uint64_t* out,
                            size_t capacity) {
  if (any_null(cfg, out)) return null_argument();
  if (steps == SIZE_MAX || capacity < steps + 1)
    return fail(PBNN_ERROR_INVALID_ARGUMENT, "output capacity must be at least steps + 1");
  return guarded([&] {
    const auto traj = pbnn::pbnn_trajectory(pbnn::BinaryVector{cfg->cfg.size(), x0}, cfg->cfg, steps);
    for (std::size_t t = 0; t < traj.size(); ++t) out[t] = traj[t].bits();
  });
}

pbnn_status pbnn_state_parse(unsigned n, const char* text, uint64_t* out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { *out = pbnn::BinaryVector::parse(n, text).bits(); });
}

pbnn_status pbnn_state_random(unsigned n, uint64_t seed, uint64_t* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    std::mt19937_64 rng{seed};
    *out = pbnn::BinaryVector{n, rng() & pbnn::BinaryVector::mask(n)}.bits();
  });
}

pbnn_status pbnn_render_pattern(const pbnn_config* cfg, uint64_t x0, size_t steps,
                                pbnn_render_style style, pbnn_string** out) {
  if (any_null(cfg, out)) return null_argument();
  return guarded([&] {
    const auto pattern = pbnn::make_pattern(pbnn::BinaryVector{cfg->cfg.size(), x0}, cfg->cfg, steps);
    *out = make_string(pbnn::render(
        pattern, style == PBNN_RENDER_SVG ? pbnn::RenderStyle::Svg : pbnn::RenderStyle::Ascii));
  });
}

pbnn_status pbnn_analysis_create(const pbnn_config* cfg, pbnn_analysis** out) {
  if (any_null(cfg, out)) return null_argument();
  return guarded([&] {
    auto table = pbnn::build_dmap(cfg->cfg);
    auto dec = pbnn::decompose(table);
    *out = new pbnn_analysis{std::move(table), std::move(dec)};
  });
}

void pbnn_analysis_destroy(pbnn_analysis* a) { delete a; }

size_t pbnn_analysis_cycle_count(const pbnn_analysis* a) {
  return a ? a->decomposition.cycles.size() : 0;
}

pbnn_status pbnn_analysis_cycle(const pbnn_analysis* a, size_t i, pbnn_cycle_info* out) {
  if (any_null(a, out)) return null_argument();
  const auto& d = a->decomposition;
  if (i >= d.cycles.size()) return fail(PBNN_ERROR_INVALID_ARGUMENT, "cycle index out of range");
  out->period = static_cast<uint32_t>(d.cycles[i].size());
  out->basin_size = d.basin_sizes[i];
  out->start_index = d.cycles[i].front();
  out->touches_endpoint = d.touches_endpoint(i) ? 1 : 0;
  return PBNN_OK;
}

pbnn_status pbnn_analysis_verdict(const pbnn_analysis* a, pbnn_verdict* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    const auto v = pbnn::gbpo_verdict(a->decomposition);
    out->is_gbpo = v.is_gbpo ? 1 : 0;
    out->period = v.period;
    out->epp_count = v.epp_count;
    switch (v.endpoint_behavior) {
      case pbnn::EndpointBehavior::FixedPoints: out->endpoint_behavior = PBNN_ENDPOINTS_FIXED; break;
      case pbnn::EndpointBehavior::TwoSwap: out->endpoint_behavior = PBNN_ENDPOINTS_SWAP; break;
      case pbnn::EndpointBehavior::Other: out->endpoint_behavior = PBNN_ENDPOINTS_OTHER; break;
    }
  });
}

pbnn_status pbnn_analysis_on_orbit_state(const pbnn_analysis* a, uint64_t* out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] { *out = pbnn::on_orbit_state(a->decomposition) - 1; });
}

pbnn_status pbnn_analysis_report(const pbnn_analysis* a, pbnn_report_format format,
                                 pbnn_string** out) {
  if (any_null(a, out)) return null_argument();
  return guarded([&] {
    pbnn::ReportFormat fmt = pbnn::ReportFormat::Text;
    switch (format) {
      case PBNN_REPORT_TEXT: fmt = pbnn::ReportFormat::Text; break;
      case PBNN_REPORT_JSON: fmt = pbnn::ReportFormat::Json; break;
      case PBNN_REPORT_DOT: fmt = pbnn::ReportFormat::Dot; break;
      case PBNN_REPORT_SVG: fmt = pbnn::ReportFormat::Svg; break;
      case PBNN_REPORT_CSV: fmt = pbnn::ReportFormat::Csv; break;
      default: throw pbnn::ConfigError("unknown report format");
    }
    *out = make_string(pbnn::render_decomposition(a->table, a->decomposition, fmt));
  });
}

pbnn_status pbnn_basic_period(unsigned cn, unsigned np, uint32_t* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = pbnn::basic_period(pbnn::ConnectionNumber{cn}, pbnn::PrimeDim{np}); });
}

pbnn_status pbnn_shift(const char* perm, pbnn_string** out) {
  if (any_null(perm, out)) return null_argument();
  return guarded([&] { *out = make_string(pbnn::shift_operator(pbnn::PermutationId::parse(perm)).digits()); });
}

pbnn_status pbnn_standard_id(const char* perm, pbnn_string** out) {
  if (any_null(perm, out)) return null_argument();
  return guarded([&] {
    const auto p = pbnn::PermutationId::parse(perm);
    *out = make_string(pbnn::standard_id(p, pbnn::PrimeDim{p.size()}).digits());
  });
}

pbnn_status pbnn_is_basic(const char* perm, int* out) {
  if (any_null(perm, out)) return null_argument();
  return guarded([&] { *out = pbnn::is_basic(pbnn::PermutationId::parse(perm)) ? 1 : 0; });
}

pbnn_status pbnn_count_standard_ids(unsigned np, uint64_t* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = pbnn::count_standard_ids(pbnn::PrimeDim{np}); });
}

pbnn_status pbnn_standard_ids_create(unsigned np, uint64_t max_candidates, pbnn_id_list** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    const auto ids = pbnn::enumerate_standard_ids(
        pbnn::PrimeDim{np}, max_candidates ? max_candidates : pbnn::kDefaultEnumerationBudget);
    auto list = std::make_unique<pbnn_id_list>();
    list->ids.reserve(ids.size());
    for (const auto& id : ids) list->ids.push_back(id.digits());
    *out = list.release();
  });
}

size_t pbnn_id_list_size(const pbnn_id_list* list) { return list ? list->ids.size() : 0; }

const char* pbnn_id_list_at(const pbnn_id_list* list, size_t i) {
  if (!list || i >= list->ids.size()) return nullptr;
  return list->ids[i].c_str();
}

void pbnn_id_list_destroy(pbnn_id_list* list) { delete list; }

pbnn_status pbnn_sweep_run(const pbnn_sweep_options* options, pbnn_results** out) {
  if (any_null(options, out)) return null_argument();
  if (options->cns == nullptr && options->cn_count != 0) return null_argument();
  *out = nullptr;
  return guarded([&] {
    pbnn::SweepSpec spec;
    spec.np = pbnn::PrimeDim{options->np};
    if (options->cns) {
      spec.cns.clear();
      for (size_t i = 0; i < options->cn_count; ++i) spec.cns.emplace_back(options->cns[i]);
    }
    spec.jobs = options->jobs;
    if (options->max_candidates) spec.budget.max_enumeration = options->max_candidates;
    if (options->max_configs) spec.budget.max_configs = options->max_configs;
    try {
      *out = new pbnn_results{pbnn::sweep(spec)};
    } catch (const pbnn::SweepBudgetError& e) {
      *out = new pbnn_results{e.partial()};
      throw;
    }
  });
}

pbnn_status pbnn_results_parse(const char* text, size_t size, pbnn_results** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] {
    const auto file = pbnn::parse_results(std::string_view{text, size});
    *out = new pbnn_results{pbnn::to_sweep_result(file), file.tool_version};
  });
}

void pbnn_results_destroy(pbnn_results* r) { delete r; }

unsigned pbnn_results_np(const pbnn_results* r) { return r ? r->result.np : 0; }

int pbnn_results_complete(const pbnn_results* r) { return r && r->result.complete ? 1 : 0; }

size_t pbnn_results_record_count(const pbnn_results* r) { return r ? r->result.records.size() : 0; }

pbnn_status pbnn_results_record(const pbnn_results* r, size_t i, pbnn_record* out) {
  if (any_null(r, out)) return null_argument();
  if (i >= r->result.records.size()) return fail(PBNN_ERROR_INVALID_ARGUMENT, "record index out of range");
  const auto& rec = r->result.records[i];
  const auto id = rec.standard_id.digits();
  if (id.size() >= sizeof(out->standard_id)) return fail(PBNN_ERROR_OVERFLOW, "standard_id too long");
  out->cn = rec.cn.value();
  std::memcpy(out->standard_id, id.c_str(), id.size() + 1);
  out->period = rec.period;
  out->epp_count = rec.epp_count;
  return PBNN_OK;
}

pbnn_status pbnn_results_serialize(const pbnn_results* r, pbnn_results_format format,
                                   const char* timestamp, pbnn_string** out) {
  if (any_null(r, out)) return null_argument();
  return guarded([&] {
    auto file = pbnn::to_result_file(r->result, timestamp ? std::optional<std::string>{timestamp}
                                                          : std::nullopt);
    file.tool_version = r->tool_version;
    *out = make_string(pbnn::serialize(
        file, format == PBNN_RESULTS_JSON ? pbnn::ResultFormat::Json : pbnn::ResultFormat::Csv));
  });
}

pbnn_status pbnn_results_summary(const pbnn_results* r, pbnn_string** out) {
  if (any_null(r, out)) return null_argument();
  return guarded([&] { *out = make_string(pbnn::summarize(r->result).to_string()); });
}

pbnn_status pbnn_results_verify(const pbnn_results* results, const pbnn_results* reference,
                                size_t* difference_count, pbnn_string** diff) {
  if (any_null(results, reference, difference_count)) return null_argument();
  return guarded([&] {
    const auto report = pbnn::verify_against_reference(results->result, reference->result.records);
    *difference_count = report.size();
    if (diff) *diff = make_string(report.to_string());
  });
}

}  // extern "C"
