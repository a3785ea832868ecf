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

#ifndef MATHPROBE_ERRORS_HPP_
#define MATHPROBE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mathprobe {

// Stable error categories. These map one-to-one onto the mp_status codes of
// the C API, so additions must go at the end.
enum class ErrorCode {
  kInvalidArgument = 1,
  kConfig = 2,
  kIo = 3,
  kGeneration = 4,
  kOverflow = 5,
  kNetwork = 6,
  kAuth = 7,
  kRetryExhausted = 8,
  kReplayMiss = 9,
  kReplayMismatch = 10,
  kCorruptStore = 11,
  kProtocol = 12,
  kInternal = 13,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what)
      : Error(ErrorCode::kConfig, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

// Procedural generation gave up, e.g. rejection sampling ran out of attempts
// or a uniqueness pool was exhausted.
struct GenerationError : Error {
  explicit GenerationError(const std::string& what)
      : Error(ErrorCode::kGeneration, what) {}
};

struct OverflowError : Error {
  explicit OverflowError(const std::string& what)
      : Error(ErrorCode::kOverflow, what) {}
};

struct NetworkError : Error {
  explicit NetworkError(const std::string& what)
      : Error(ErrorCode::kNetwork, what) {}
};

struct AuthError : Error {
  explicit AuthError(const std::string& what)
      : Error(ErrorCode::kAuth, what) {}
};

struct RetryExhaustedError : Error {
  explicit RetryExhaustedError(const std::string& what)
      : Error(ErrorCode::kRetryExhausted, what) {}
};

struct ReplayMissError : Error {
  explicit ReplayMissError(const std::string& what)
      : Error(ErrorCode::kReplayMiss, what) {}
};

struct ReplayMismatchError : Error {
  explicit ReplayMismatchError(const std::string& what)
      : Error(ErrorCode::kReplayMismatch, what) {}
};

struct CorruptStoreError : Error {
  explicit CorruptStoreError(const std::string& what)
      : Error(ErrorCode::kCorruptStore, what) {}
};

// The remote side answered, but not in the shape we expect (bad JSON, missing
// fields, unexpected status).
struct ProtocolError : Error {
  explicit ProtocolError(const std::string& what)
      : Error(ErrorCode::kProtocol, what) {}
};

}  // namespace mathprobe

#endif  // MATHPROBE_ERRORS_HPP_
