// Copyright 2026 The mathprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mathprobe.h"

#include <exception>
#include <string>

#include "mathprobe/config.hpp"
#include "mathprobe/errors.hpp"
#include "mathprobe/pipeline.hpp"
#include "mathprobe/version.hpp"

namespace {

thread_local std::string tls_error;

// Exceptions must not cross the C boundary; every entry point funnels its
// body through here.
template <typename Fn>
mp_status guarded(Fn&& fn) {
  tls_error.clear();
  try {
    fn();
    return MP_OK;
  } catch (const mathprobe::Error& e) {
    tls_error = e.what();
    return static_cast<mp_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    tls_error = e.what();
    return MP_ERR_INTERNAL;
  } catch (...) {
    tls_error = "unknown error";
    return MP_ERR_INTERNAL;
  }
}

mp_status invalid(const char* message) {
  tls_error = message;
  return MP_ERR_INVALID_ARGUMENT;
}

}  // namespace

struct mp_config {
  mathprobe::RunConfig config;
};

extern "C" {

const char* mp_version(void) { return mathprobe::kVersion; }

const char* mp_last_error(void) { return tls_error.c_str(); }

mp_config* mp_config_new(void) {
  try {
    return new mp_config();
  } catch (...) {
    return nullptr;
  }
}

void mp_config_free(mp_config* config) { delete config; }

mp_status mp_config_set(mp_config* config, const char* key,
                        const char* value) {
  if (!config || !key || !value) return invalid("null argument");
  return guarded([&] { mathprobe::apply_config_kv(config->config, key, value); });
}

mp_status mp_config_load_file(mp_config* config, const char* path) {
  if (!config || !path) return invalid("null argument");
  return guarded([&] {
    for (const auto& [key, value] : mathprobe::parse_kv_file(path)) {
      mathprobe::apply_config_kv(config->config, key, value);
    }
  });
}

mp_status mp_generate(const mp_config* config) {
  if (!config) return invalid("null argument");
  return guarded([&] { mathprobe::generate_questions(config->config); });
}

mp_status mp_run(const mp_config* config, mp_run_stats* stats) {
  if (!config) return invalid("null argument");
  return guarded([&] {
    mathprobe::RunResult result = mathprobe::run(config->config);
    if (stats) {
      stats->n_sent = result.n_sent;
      stats->n_skipped = result.n_skipped;
      stats->n_errors = result.n_errors;
    }
  });
}

mp_status mp_report(const char* run_dir) {
  if (!run_dir) return invalid("null argument");
  return guarded([&] { mathprobe::report_run(run_dir); });
}

mp_status mp_rescore(const char* run_dir) {
  if (!run_dir) return invalid("null argument");
  return guarded([&] { mathprobe::rescore_run(run_dir); });
}

mp_status mp_replay(const char* src_run_dir, const char* out_dir) {
  if (!src_run_dir || !out_dir) return invalid("null argument");
  return guarded([&] { mathprobe::replay_run(src_run_dir, out_dir); });
}

}  // extern "C"
