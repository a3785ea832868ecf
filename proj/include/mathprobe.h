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

// C interface to the mathprobe shared library. All functions return an
// mp_status; on failure mp_last_error() gives a message for the calling
// thread, valid until that thread's next mathprobe call. Handles are opaque
// and single-owner.

#ifndef MATHPROBE_H_
#define MATHPROBE_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_ERR_INVALID_ARGUMENT = 1,
  MP_ERR_CONFIG = 2,
  MP_ERR_IO = 3,
  MP_ERR_GENERATION = 4,
  MP_ERR_OVERFLOW = 5,
  MP_ERR_NETWORK = 6,
  MP_ERR_AUTH = 7,
  MP_ERR_RETRY_EXHAUSTED = 8,
  MP_ERR_REPLAY_MISS = 9,
  MP_ERR_REPLAY_MISMATCH = 10,
  MP_ERR_CORRUPT_STORE = 11,
  MP_ERR_PROTOCOL = 12,
  MP_ERR_INTERNAL = 13
} mp_status;

const char* mp_version(void);

// Message for the most recent failure on the calling thread; empty string
// when the last call succeeded. Never NULL.
const char* mp_last_error(void);

// A run configuration, manipulated through string key=value assignments
// (the same keys the config file format uses).
typedef struct mp_config mp_config;

mp_config* mp_config_new(void);
void mp_config_free(mp_config* config);
mp_status mp_config_set(mp_config* config, const char* key, const char* value);
mp_status mp_config_load_file(mp_config* config, const char* path);

typedef struct mp_run_stats {
  int n_sent;     /* requests issued by this invocation */
  int n_skipped;  /* pairs kept from an earlier, resumed invocation */
  int n_errors;   /* records that carry a transport error */
} mp_run_stats;

// Writes the manifest and question set into the config's out directory.
mp_status mp_generate(const mp_config* config);

// Executes (or resumes) the run into the config's out directory and writes
// summary.csv and summary.md there. stats may be NULL.
mp_status mp_run(const mp_config* config, mp_run_stats* stats);

// Rebuilds the summaries of an existing run directory.
mp_status mp_report(const char* run_dir);

// Re-extracts and re-scores all stored responses, then rebuilds summaries.
mp_status mp_rescore(const char* run_dir);

// Re-executes a finished run from its recorded responses into out_dir.
mp_status mp_replay(const char* src_run_dir, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif  /* MATHPROBE_H_ */
