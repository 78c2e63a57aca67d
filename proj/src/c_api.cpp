// Copyright 2026 The femtobb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "femtobb/femtobb.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <iostream>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "femtobb/broker.hpp"
#include "femtobb/commands.hpp"
#include "femtobb/config.hpp"
#include "femtobb/errors.hpp"
#include "femtobb/model.hpp"
#include "femtobb/report.hpp"
#include "femtobb/sim.hpp"

struct fbb_config {
  femtobb::sim::ScenarioConfig cfg;
};

struct fbb_window {
  femtobb::broker::SlaPolicy policy;
  femtobb::broker::ReservationWindow window;
};

namespace {

using femtobb::Kbps;
namespace model = femtobb::model;

thread_local std::string g_last_error;

fbb_status fail(fbb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
fbb_status guarded(Body&& body) noexcept {
  try {
    return body();
  } catch (const femtobb::ConfigError& e) {
    return fail(FBB_ERR_CONFIG, e.what());
  } catch (const femtobb::IoError& e) {
    return fail(FBB_ERR_IO, e.what());
  } catch (const femtobb::DataError& e) {
    return fail(FBB_ERR_DATA, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FBB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FBB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FBB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FBB_ERR_INTERNAL, "unknown error");
  }
}

fbb_status null_argument(const char* name) {
  return fail(FBB_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

Kbps bw(double v) { return Kbps::clamped(v); }

void store(const model::Allocation& a, fbb_allocation* out) {
  *out = {a.grant_femto.value(), a.femto_served.value(), a.bg_served.value(), a.borrowed.value(),
          a.sl};
}

std::vector<model::Scheme> schemes_from_flags(unsigned flags) {
  if (flags == 0 || (flags & ~static_cast<unsigned>(FBB_SCHEME_BOTH)) != 0) {
    throw std::invalid_argument("scheme flags must be a non-empty combination of "
                                "FBB_SCHEME_TRADITIONAL and FBB_SCHEME_PROPOSED");
  }
  std::vector<model::Scheme> out;
  if (flags & FBB_SCHEME_TRADITIONAL) out.push_back(model::Scheme::kTraditional);
  if (flags & FBB_SCHEME_PROPOSED) out.push_back(model::Scheme::kProposed);
  return out;
}

unsigned flag_of(model::Scheme s) {
  return s == model::Scheme::kTraditional ? FBB_SCHEME_TRADITIONAL : FBB_SCHEME_PROPOSED;
}

std::filesystem::path optional_path(const char* p) {
  return (p == nullptr) ? std::filesystem::path() : std::filesystem::path(p);
}

}  // namespace

extern "C" {

const char* fbb_version(void) { return "1.0.0"; }

const char* fbb_last_error(void) { return g_last_error.c_str(); }

const char* fbb_status_string(fbb_status status) {
  switch (status) {
    case FBB_OK: return "ok";
    case FBB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FBB_ERR_CONFIG: return "configuration error";
    case FBB_ERR_IO: return "I/O error";
    case FBB_ERR_DATA: return "malformed data";
    case FBB_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case FBB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

double fbb_available_bandwidth(double capacity, double b_i) {
  return model::available_bandwidth(bw(capacity), bw(b_i)).value();
}

double fbb_satisfaction_level(double b_a, double b_f) {
  return model::satisfaction_level(bw(b_a), bw(b_f));
}

double fbb_borrowed_bandwidth(double b_r, double b_a) {
  return model::borrowed_bandwidth(bw(b_r), bw(b_a)).value();
}

fbb_status fbb_allocate_traditional(double capacity, double b_i, double b_f, fbb_allocation* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    store(model::allocate_traditional(Kbps(capacity), {0.0, Kbps(b_i), Kbps(b_f)}), out);
    return FBB_OK;
  });
}

fbb_status fbb_allocate_proposed(double capacity, double b_i, double b_f, double b_r,
                                 fbb_allocation* out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    store(model::allocate_proposed(Kbps(capacity), {0.0, Kbps(b_i), Kbps(b_f)}, Kbps(b_r)), out);
    return FBB_OK;
  });
}

fbb_status fbb_utilization(const fbb_allocation* alloc, double capacity, double* out) {
  if (alloc == nullptr) return null_argument("alloc");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    model::Allocation a;
    a.grant_femto = Kbps(alloc->grant_femto);
    a.femto_served = Kbps(alloc->femto_served);
    a.bg_served = Kbps(alloc->bg_served);
    a.borrowed = Kbps(alloc->borrowed);
    a.sl = alloc->sl;
    *out = model::utilization(a, Kbps(capacity));
    return FBB_OK;
  });
}

fbb_status fbb_window_create(double t1_s, double period_s, unsigned m, double reserve_cap,
                             fbb_window** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const Kbps cap = reserve_cap > 0.0 ? Kbps(reserve_cap)
                                       : Kbps(std::numeric_limits<double>::infinity());
    auto policy = femtobb::broker::SlaPolicy::for_link(cap, t1_s, period_s, m);
    policy.validate();
    *out = new fbb_window{policy, policy.make_window()};
    return FBB_OK;
  });
}

void fbb_window_destroy(fbb_window* window) { delete window; }

fbb_status fbb_window_push(fbb_window* window, double b_f) {
  if (window == nullptr) return null_argument("window");
  return guarded([&] {
    window->window.push(Kbps(b_f));
    return FBB_OK;
  });
}

fbb_status fbb_window_reserve(const fbb_window* window, double* out) {
  if (window == nullptr) return null_argument("window");
  if (out == nullptr) return null_argument("out");
  *out = femtobb::broker::reserve_bandwidth(window->window, window->policy).value();
  return FBB_OK;
}

size_t fbb_window_size(const fbb_window* window) {
  return window == nullptr ? 0 : window->window.size();
}

fbb_status fbb_config_default(fbb_config** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new fbb_config{};
    return FBB_OK;
  });
}

fbb_status fbb_config_parse(const char* json_text, fbb_config** out) {
  if (json_text == nullptr) return null_argument("json_text");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new fbb_config{femtobb::config::parse_config(json_text)};
    return FBB_OK;
  });
}

fbb_status fbb_config_load(const char* path, fbb_config** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new fbb_config{femtobb::config::load_config(path)};
    return FBB_OK;
  });
}

void fbb_config_destroy(fbb_config* config) { delete config; }

fbb_status fbb_config_to_json(const fbb_config* config, char* buf, size_t capacity,
                              size_t* needed) {
  if (config == nullptr) return null_argument("config");
  return guarded([&] {
    const std::string text = femtobb::config::write_config(config->cfg);
    if (needed != nullptr) *needed = text.size() + 1;
    if (buf == nullptr || capacity < text.size() + 1) {
      return fail(FBB_ERR_BUFFER_TOO_SMALL, "buffer too small for config JSON");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return FBB_OK;
  });
}

fbb_status fbb_config_set_arbit(fbb_config* config, double arbit_kbps) {
  if (config == nullptr) return null_argument("config");
  return guarded([&] {
    config->cfg.background.arbit = Kbps(arbit_kbps);
    return FBB_OK;
  });
}

fbb_status fbb_config_set_base_seed(fbb_config* config, uint64_t seed) {
  if (config == nullptr) return null_argument("config");
  config->cfg.run.base_seed = seed;
  return FBB_OK;
}

fbb_status fbb_config_set_replications(fbb_config* config, unsigned replications) {
  if (config == nullptr) return null_argument("config");
  if (replications < 1) return fail(FBB_ERR_INVALID_ARGUMENT, "replications must be >= 1");
  config->cfg.run.replications = replications;
  return FBB_OK;
}

fbb_status fbb_config_set_run_length(fbb_config* config, double duration_s, double warmup_s) {
  if (config == nullptr) return null_argument("config");
  return guarded([&] {
    auto candidate = config->cfg;
    candidate.run.duration_s = duration_s;
    candidate.run.warmup_s = warmup_s;
    candidate.check();
    config->cfg = candidate;
    return FBB_OK;
  });
}

fbb_status fbb_run_experiment(const fbb_config* config, unsigned schemes, fbb_summary_row* rows,
                              size_t capacity, size_t* count) {
  if (config == nullptr) return null_argument("config");
  if (count == nullptr) return null_argument("count");
  return guarded([&] {
    const auto stats = femtobb::sim::run_experiment(config->cfg, schemes_from_flags(schemes));
    *count = stats.schemes.size();
    if (rows == nullptr || capacity < stats.schemes.size()) {
      return fail(FBB_ERR_BUFFER_TOO_SMALL, "row buffer too small");
    }
    for (std::size_t i = 0; i < stats.schemes.size(); ++i) {
      const auto& s = stats.schemes[i];
      rows[i] = {flag_of(s.scheme), s.arbit.value(), s.mean_sl, s.std_sl,
                 s.mean_util, s.std_util, s.replications};
    }
    return FBB_OK;
  });
}

fbb_status fbb_run(const fbb_config* config, unsigned schemes, const char* summary_csv,
                   const char* timeseries_csv, const char* history_csv) {
  if (config == nullptr) return null_argument("config");
  return guarded([&] {
    femtobb::commands::RunOutputs outputs{optional_path(summary_csv),
                                          optional_path(timeseries_csv),
                                          optional_path(history_csv)};
    femtobb::commands::run_command(config->cfg, schemes_from_flags(schemes), outputs, std::cout);
    std::cout.flush();
    return FBB_OK;
  });
}

fbb_status fbb_sweep(const fbb_config* config, double start_kbps, double stop_kbps,
                     double step_kbps, unsigned schemes, const char* out_csv) {
  if (config == nullptr) return null_argument("config");
  return guarded([&] {
    if (!(start_kbps >= 0.0) || !(start_kbps <= stop_kbps) || !(step_kbps > 0.0)) {
      throw std::invalid_argument("ARBIT range needs 0 <= start <= stop and step > 0");
    }
    const femtobb::commands::ArbitRange range{start_kbps, stop_kbps, step_kbps};
    femtobb::commands::sweep_command(config->cfg, range.levels(), schemes_from_flags(schemes),
                                     optional_path(out_csv), std::cout);
    std::cout.flush();
    return FBB_OK;
  });
}

fbb_status fbb_parse_arbit_range(const char* text, double* start, double* stop, double* step) {
  if (text == nullptr) return null_argument("text");
  if (start == nullptr || stop == nullptr || step == nullptr) return null_argument("range output");
  return guarded([&] {
    const auto range = femtobb::commands::parse_arbit_range(text);
    *start = range.start;
    *stop = range.stop;
    *step = range.step;
    return FBB_OK;
  });
}

fbb_status fbb_parse_schemes(const char* text, unsigned* schemes) {
  if (text == nullptr) return null_argument("text");
  if (schemes == nullptr) return null_argument("schemes");
  return guarded([&] {
    unsigned flags = 0;
    for (auto s : femtobb::commands::parse_schemes(text)) flags |= flag_of(s);
    *schemes = flags;
    return FBB_OK;
  });
}

fbb_status fbb_report(const char* sweep_csv, const char* out_dir) {
  if (sweep_csv == nullptr) return null_argument("sweep_csv");
  if (out_dir == nullptr) return null_argument("out_dir");
  return guarded([&] {
    const auto rows = femtobb::report::read_sweep_csv(std::filesystem::path(sweep_csv));
    femtobb::report::render_report(rows, out_dir);
    return FBB_OK;
  });
}

}  // extern "C"
